#pragma once

#include <optional>
#include <vector>

#include "rbsys/rational.hpp"

namespace rbsys {

using Vec = std::vector<Rational>;

Vec zero_vec(size_t n);
Vec basis_vec(size_t n, size_t i);
bool is_zero_vec(const Vec& v);
Vec& vec_add_scaled(Vec& dst, const Rational& c, const Vec& src);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);

// Dense row-major matrix of exact rationals. Also used for linear maps,
// with rows = target dimension and cols = source dimension.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Vec row(size_t r) const;
    Vec col(size_t c) const;

    // Matrix as linear map: y = A x.
    Vec apply(const Vec& x) const;

    Matrix mul(const Matrix& b) const;
    Matrix add(const Matrix& b) const;
    Matrix sub(const Matrix& b) const;
    Matrix scaled(const Rational& c) const;
    Matrix transpose() const;

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct SolveSuite {
    size_t rank = 0;
    std::vector<Vec> kernel_basis;
    // Present iff the right-hand side lies in the column space.
    std::optional<Vec> particular_solution;
};

// Exact rank / kernel / particular solution over the rationals
// (Gauss-Jordan with full reduction).
SolveSuite linear_solve_suite(const Matrix& A, const std::optional<Vec>& rhs = std::nullopt);

std::optional<Matrix> try_inverse(const Matrix& A);
bool is_invertible(const Matrix& A);

// Span utilities; generators given as row vectors.
size_t span_rank(const std::vector<Vec>& gens, size_t dim);
bool in_span(const std::vector<Vec>& gens, const Vec& v);
// Coordinates of v in the given (independent) basis, if v lies in its span.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t dim);
std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t dim);
// Extracts a maximal independent subfamily, in order.
std::vector<Vec> independent_subset(const std::vector<Vec>& gens);

} // namespace rbsys
