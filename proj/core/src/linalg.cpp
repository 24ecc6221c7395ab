#include "rbsys/linalg.hpp"

#include "rbsys/errors.hpp"

namespace rbsys {

Vec zero_vec(size_t n) { return Vec(n); }

Vec basis_vec(size_t n, size_t i) {
    Vec v(n);
    v.at(i) = Rational(1);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec& vec_add_scaled(Vec& dst, const Rational& c, const Vec& src) {
    if (dst.size() != src.size()) throw InputError("vector dimension mismatch");
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return dst;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    vec_add_scaled(r, Rational(1), b);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    vec_add_scaled(r, Rational(-1), b);
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("row length mismatch");
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(size_t r) const {
    Vec v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(size_t c) const {
    Vec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    Vec y(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
        }
        y[r] = acc;
    }
    return y;
}

Matrix Matrix::mul(const Matrix& b) const {
    if (cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    Matrix r(rows_, b.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += at(i, k) * b.at(k, j);
        }
    return r;
}

Matrix Matrix::add(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

Matrix Matrix::sub(const Matrix& b) const { return add(b.scaled(Rational(-1))); }

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row-reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

SolveSuite linear_solve_suite(const Matrix& A, const std::optional<Vec>& rhs) {
    if (rhs && rhs->size() != A.rows())
        throw InputError("right-hand side length does not match matrix rows");

    // Work on [A | b] so consistency falls out of the same elimination.
    size_t n = A.cols();
    size_t extra = rhs ? 1 : 0;
    Matrix work(A.rows(), n + extra);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) work.at(i, j) = A.at(i, j);
        if (rhs) work.at(i, n) = (*rhs)[i];
    }
    Matrix reduced = work;
    std::vector<size_t> pivots = rref(reduced);

    SolveSuite out;
    std::vector<size_t> a_pivots;
    bool inconsistent = false;
    for (size_t c : pivots) {
        if (c < n)
            a_pivots.push_back(c);
        else
            inconsistent = true;
    }
    out.rank = a_pivots.size();

    std::vector<bool> is_pivot(n, false);
    for (size_t c : a_pivots) is_pivot[c] = true;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec k(n);
        k[c] = Rational(1);
        for (size_t pi = 0; pi < a_pivots.size(); ++pi) k[a_pivots[pi]] = -reduced.at(pi, c);
        out.kernel_basis.push_back(std::move(k));
    }

    if (rhs && !inconsistent) {
        Vec x(n);
        for (size_t pi = 0; pi < a_pivots.size(); ++pi) x[a_pivots[pi]] = reduced.at(pi, n);
        out.particular_solution = std::move(x);
    }
    return out;
}

std::optional<Matrix> try_inverse(const Matrix& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    size_t n = A.rows();
    Matrix work(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) work.at(i, j) = A.at(i, j);
        work.at(i, n + i) = Rational(1);
    }
    auto pivots = rref(work);
    if (pivots.size() != n || pivots.back() != n - 1) {
        // rank-deficient A (a pivot escaped into the identity block or is missing)
        size_t rank_a = 0;
        for (size_t c : pivots)
            if (c < n) ++rank_a;
        if (rank_a != n) return std::nullopt;
    }
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = work.at(i, n + j);
    return inv;
}

bool is_invertible(const Matrix& A) { return try_inverse(A).has_value(); }

size_t span_rank(const std::vector<Vec>& gens, size_t dim) {
    Matrix m = Matrix::from_rows(gens, dim);
    Matrix r = m;
    return rref(r).size();
}

bool in_span(const std::vector<Vec>& gens, const Vec& v) {
    if (is_zero_vec(v)) return true;
    if (gens.empty()) return false;
    Matrix m = Matrix::from_rows(gens, v.size()).transpose();
    auto s = linear_solve_suite(m, v);
    return s.particular_solution.has_value();
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) {
        if (is_zero_vec(v)) return Vec{};
        return std::nullopt;
    }
    Matrix m = Matrix::from_rows(basis, v.size()).transpose();
    auto s = linear_solve_suite(m, v);
    return s.particular_solution;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t dim) {
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    (void)dim;
    return true;
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t dim) {
    // Zassenhaus-style: kernel of [Aᵗ | -Bᵗ] gives coefficients of common vectors.
    if (a.empty() || b.empty()) return {};
    Matrix m(dim, a.size() + b.size());
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, a.size() + j) = -b[j][i];
    auto s = linear_solve_suite(m);
    std::vector<Vec> gens;
    for (const auto& k : s.kernel_basis) {
        Vec v(dim);
        for (size_t j = 0; j < a.size(); ++j) vec_add_scaled(v, k[j], a[j]);
        if (!is_zero_vec(v)) gens.push_back(std::move(v));
    }
    return independent_subset(gens);
}

std::vector<Vec> independent_subset(const std::vector<Vec>& gens) {
    std::vector<Vec> out;
    if (gens.empty()) return out;
    size_t dim = gens[0].size();
    for (const auto& g : gens) {
        if (!in_span(out, g)) out.push_back(g);
        if (out.size() == dim) break;
    }
    return out;
}

} // namespace rbsys
