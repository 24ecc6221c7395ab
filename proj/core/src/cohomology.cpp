#include "rbsys/cohomology.hpp"

#include "rbsys/errors.hpp"

namespace rbsys {

Cochain& Cochain::add_scaled(const Rational& c, const Cochain& o) {
    if (arity != o.arity) throw InputError("cochain arity mismatch");
    P.add_scaled(c, o.P);
    Q.add_scaled(c, o.Q);
    return *this;
}

Cochain make_cochain(size_t arity, size_t dim_m, size_t dim_a) {
    return Cochain{arity, MultiTensor(arity, dim_m, dim_a), MultiTensor(arity, dim_m, dim_a)};
}

Cochain cochain_from_elements(const Vec& a, const Vec& b, size_t dim_m) {
    if (a.size() != b.size()) throw InputError("degree-0 cochain needs two elements of A");
    Cochain c = make_cochain(0, dim_m, a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero()) c.P.add(k, std::initializer_list<size_t>{}, a[k]);
        if (!b[k].is_zero()) c.Q.add(k, std::initializer_list<size_t>{}, b[k]);
    }
    return c;
}

Cochain cochain_from_pair(const RBSPair& pair) {
    size_t n = pair.R.rows(), m = pair.R.cols();
    Cochain c = make_cochain(1, m, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (!pair.R.at(i, j).is_zero()) c.P.add(i, {j}, pair.R.at(i, j));
            if (!pair.S.at(i, j).is_zero()) c.Q.add(i, {j}, pair.S.at(i, j));
        }
    return c;
}

std::pair<Vec, Vec> cochain_elements(const Cochain& c, size_t dim_a) {
    if (c.arity != 0) throw InputError("cochain_elements needs arity 0");
    Vec a(dim_a), b(dim_a);
    for (const auto& [k, v] : c.P.coefficients()) a[k[0]] = v;
    for (const auto& [k, v] : c.Q.coefficients()) b[k[0]] = v;
    return {a, b};
}

MultiTensor tensor_plug(const MultiTensor& f, const MultiTensor& g, size_t i) {
    if (f.input_dim() != g.input_dim() || f.input_dim() != g.output_dim() ||
        f.input_dim() != f.output_dim())
        throw InputError("tensor_plug needs endomorphism-type tensors on one space");
    if (i < 1 || i > f.arity()) throw InputError("tensor_plug slot out of range");
    size_t m = f.arity(), n = g.arity();
    MultiTensor out(m + n - 1, f.input_dim(), f.output_dim());
    for (const auto& [fk, fv] : f.coefficients())
        for (const auto& [gk, gv] : g.coefficients()) {
            if (fk[i] != gk[0]) continue; // f's slot i must match g's output
            std::vector<size_t> idx;
            idx.reserve(m + n - 1);
            for (size_t t = 1; t <= i - 1; ++t) idx.push_back(fk[t]);
            for (size_t t = 1; t <= n; ++t) idx.push_back(gk[t]);
            for (size_t t = i + 1; t <= m; ++t) idx.push_back(fk[t]);
            out.add(fk[0], idx, fv * gv);
        }
    return out;
}

MultiTensor gerstenhaber_circ(const MultiTensor& f, const MultiTensor& g) {
    long m = static_cast<long>(f.arity()), n = static_cast<long>(g.arity());
    MultiTensor out(f.arity() + g.arity() - 1, f.input_dim(), f.output_dim());
    for (long i = 1; i <= m; ++i)
        out.add_scaled(sign_pow((i - 1) * (n - 1)), tensor_plug(f, g, static_cast<size_t>(i)));
    return out;
}

MultiTensor gerstenhaber_bracket(const MultiTensor& f, const MultiTensor& g) {
    long m = static_cast<long>(f.arity()), n = static_cast<long>(g.arity());
    MultiTensor out = gerstenhaber_circ(f, g);
    out.add_scaled(-sign_pow((m - 1) * (n - 1)), gerstenhaber_circ(g, f));
    return out;
}

namespace {

// Iterate over all basis tuples of length `len` with entries < dim.
template <typename F> void for_tuples(size_t len, size_t dim, F&& fn) {
    std::vector<size_t> idx(len, 0);
    while (true) {
        fn(std::span<const size_t>(idx));
        size_t t = len;
        while (t > 0) {
            if (++idx[t - 1] < dim) break;
            idx[t - 1] = 0;
            --t;
        }
        if (t == 0) break;
    }
}

// Evaluates T on basis arguments with one vector-valued slot.
Vec apply_with_slot(const MultiTensor& T, std::span<const size_t> idx, size_t slot,
                    const Vec& value, size_t dim) {
    std::vector<Vec> args;
    args.reserve(T.arity());
    size_t t = 0;
    for (size_t p = 0; p < T.arity(); ++p) {
        if (p == slot)
            args.push_back(value);
        else
            args.push_back(basis_vec(dim, idx[t]));
        if (p != slot) ++t;
    }
    return T.apply(args);
}

Vec apply_on_basis(const MultiTensor& T, std::span<const size_t> idx, size_t dim) {
    std::vector<Vec> args;
    args.reserve(T.arity());
    for (size_t p = 0; p < T.arity(); ++p) args.push_back(basis_vec(dim, idx[p]));
    return T.apply(args);
}

void accumulate(MultiTensor& dst, size_t out_dim, std::span<const size_t> idx, const Vec& val,
                const Rational& coef) {
    for (size_t k = 0; k < out_dim; ++k)
        if (!val[k].is_zero()) dst.add(k, idx, coef * val[k]);
}

// The two displayed components of the bracket for arities m, n >= 1.
Cochain bracket_positive(const Cochain& c1, const Cochain& c2, const Algebra& alg,
                         const Bimodule& mod) {
    long m = static_cast<long>(c1.arity), n = static_cast<long>(c2.arity);
    size_t dm = mod.dim, da = alg.dim;
    Cochain out = make_cochain(c1.arity + c2.arity, dm, da);

    for_tuples(c1.arity + c2.arity, dm, [&](std::span<const size_t> u) {
        auto seg = [&](size_t from, size_t len) {
            return std::vector<size_t>(u.begin() + from, u.begin() + from + len);
        };
        Vec accP(da), accQ(da);

        // Σ_{i=1..m} (−1)^{(i−1)n} X(u_1,..,u_{i−1}, P'(u_i..u_{i+n−1})·u_{i+n}, ..)
        // − Σ_{i=1..m} (−1)^{in}     X(u_1,..,u_{i−1}, u_i·Q'(u_{i+1}..u_{i+n}), ..)
        for (long i = 1; i <= m; ++i) {
            std::vector<size_t> rest;
            for (long t = 0; t < i - 1; ++t) rest.push_back(u[t]);
            for (long t = i + n; t < m + n; ++t) rest.push_back(u[t]);

            Vec pprime = apply_on_basis(c2.P, seg(i - 1, n), dm);
            Vec arg1 = mod.act_left(pprime, basis_vec(dm, u[i - 1 + n]));
            Rational s1 = sign_pow((i - 1) * n);
            vec_add_scaled(accP, s1, apply_with_slot(c1.P, rest, i - 1, arg1, dm));
            vec_add_scaled(accQ, s1, apply_with_slot(c1.Q, rest, i - 1, arg1, dm));

            Vec qprime = apply_on_basis(c2.Q, seg(i, n), dm);
            Vec arg2 = mod.act_right(basis_vec(dm, u[i - 1]), qprime);
            Rational s2 = -sign_pow(i * n);
            vec_add_scaled(accP, s2, apply_with_slot(c1.P, rest, i - 1, arg2, dm));
            vec_add_scaled(accQ, s2, apply_with_slot(c1.Q, rest, i - 1, arg2, dm));
        }

        // −(−1)^{mn} { same with the roles of (P,Q) and (P',Q') swapped }
        for (long i = 1; i <= n; ++i) {
            std::vector<size_t> rest;
            for (long t = 0; t < i - 1; ++t) rest.push_back(u[t]);
            for (long t = i + m; t < m + n; ++t) rest.push_back(u[t]);

            Vec p = apply_on_basis(c1.P, seg(i - 1, m), dm);
            Vec arg1 = mod.act_left(p, basis_vec(dm, u[i - 1 + m]));
            Rational s1 = -sign_pow(m * n) * sign_pow((i - 1) * m);
            vec_add_scaled(accP, s1, apply_with_slot(c2.P, rest, i - 1, arg1, dm));
            vec_add_scaled(accQ, s1, apply_with_slot(c2.Q, rest, i - 1, arg1, dm));

            Vec q = apply_on_basis(c1.Q, seg(i, m), dm);
            Vec arg2 = mod.act_right(basis_vec(dm, u[i - 1]), q);
            Rational s2 = sign_pow(m * n) * sign_pow(i * m);
            vec_add_scaled(accP, s2, apply_with_slot(c2.P, rest, i - 1, arg2, dm));
            vec_add_scaled(accQ, s2, apply_with_slot(c2.Q, rest, i - 1, arg2, dm));
        }

        // +(−1)^{mn}[ X(u_1..u_m) X'(u_{m+1}..) − (−1)^{mn} X'(u_1..u_n) X(u_{n+1}..) ]
        {
            Rational smn = sign_pow(m * n);
            Vec p_front = apply_on_basis(c1.P, seg(0, m), dm);
            Vec pp_back = apply_on_basis(c2.P, seg(m, n), dm);
            vec_add_scaled(accP, smn, alg.mul(p_front, pp_back));
            Vec pp_front = apply_on_basis(c2.P, seg(0, n), dm);
            Vec p_back = apply_on_basis(c1.P, seg(n, m), dm);
            vec_add_scaled(accP, -Rational(1), alg.mul(pp_front, p_back));

            Vec q_front = apply_on_basis(c1.Q, seg(0, m), dm);
            Vec qq_back = apply_on_basis(c2.Q, seg(m, n), dm);
            vec_add_scaled(accQ, smn, alg.mul(q_front, qq_back));
            Vec qq_front = apply_on_basis(c2.Q, seg(0, n), dm);
            Vec q_back = apply_on_basis(c1.Q, seg(n, m), dm);
            vec_add_scaled(accQ, -Rational(1), alg.mul(qq_front, q_back));
        }

        accumulate(out.P, da, u, accP, Rational(1));
        accumulate(out.Q, da, u, accQ, Rational(1));
    });
    return out;
}

// ⟦(P,Q),(a,b)⟧ for (P,Q) of arity m >= 1 and a degree-0 cochain.
Cochain bracket_with_constant(const Cochain& c1, const Cochain& c2, const Algebra& alg,
                              const Bimodule& mod) {
    size_t dm = mod.dim, da = alg.dim;
    long m = static_cast<long>(c1.arity);
    auto [a, b] = cochain_elements(c2, da);
    Cochain out = make_cochain(c1.arity, dm, da);
    for_tuples(c1.arity, dm, [&](std::span<const size_t> u) {
        Vec accP(da), accQ(da);
        for (long i = 0; i < m; ++i) {
            std::vector<size_t> rest;
            for (long t = 0; t < m; ++t)
                if (t != i) rest.push_back(u[t]);
            Vec arg = vec_sub(mod.act_left(a, basis_vec(dm, u[i])),
                              mod.act_right(basis_vec(dm, u[i]), b));
            vec_add_scaled(accP, Rational(1), apply_with_slot(c1.P, rest, i, arg, dm));
            vec_add_scaled(accQ, Rational(1), apply_with_slot(c1.Q, rest, i, arg, dm));
        }
        std::vector<size_t> full(u.begin(), u.end());
        Vec pu = apply_on_basis(c1.P, full, dm);
        vec_add_scaled(accP, Rational(1), alg.mul(pu, a));
        vec_add_scaled(accP, Rational(-1), alg.mul(a, pu));
        Vec qu = apply_on_basis(c1.Q, full, dm);
        vec_add_scaled(accQ, Rational(1), alg.mul(qu, b));
        vec_add_scaled(accQ, Rational(-1), alg.mul(b, qu));
        accumulate(out.P, da, u, accP, Rational(1));
        accumulate(out.Q, da, u, accQ, Rational(1));
    });
    return out;
}

} // namespace

Cochain derived_bracket(const Cochain& c1, const Cochain& c2, const Algebra& alg,
                        const Bimodule& mod) {
    if (c1.P.input_dim() != mod.dim || c2.P.input_dim() != mod.dim ||
        c1.P.output_dim() != alg.dim || c2.P.output_dim() != alg.dim)
        throw InputError("cochain dimensions do not match the model");
    size_t m = c1.arity, n = c2.arity;
    if (m >= 1 && n >= 1) return bracket_positive(c1, c2, alg, mod);
    if (m >= 1 && n == 0) return bracket_with_constant(c1, c2, alg, mod);
    if (m == 0 && n >= 1) {
        // graded antisymmetry with deg = arity: ⟦x,y⟧ = −(−1)^{mn} ⟦y,x⟧, mn = 0 here
        Cochain r = bracket_with_constant(c2, c1, alg, mod);
        return make_cochain(r.arity, mod.dim, alg.dim).add_scaled(Rational(-1), r);
    }
    // ⟦(a,b),(c,d)⟧ = (ac − ca, bd − db)
    auto [a, b] = cochain_elements(c1, alg.dim);
    auto [c, d] = cochain_elements(c2, alg.dim);
    Vec first = vec_sub(alg.mul(a, c), alg.mul(c, a));
    Vec second = vec_sub(alg.mul(b, d), alg.mul(d, b));
    return cochain_from_elements(first, second, mod.dim);
}

namespace {

// Lift of a cochain into Hom(V^{⊗m}, V), V = A ⊕ A ⊕ M: reads only the
// M-components and lands in the A ⊕ A block.
MultiTensor lift_cochain(const Cochain& c, size_t dim_a, size_t dim_m) {
    size_t dv = 2 * dim_a + dim_m;
    MultiTensor out(c.arity, dv, dv);
    auto shift = [&](const MultiTensor& src, size_t out_off) {
        for (const auto& [k, v] : src.coefficients()) {
            std::vector<size_t> idx;
            for (size_t t = 1; t < k.size(); ++t) idx.push_back(2 * dim_a + k[t]);
            out.add(k[0] + out_off, idx, v);
        }
    };
    shift(c.P, 0);
    shift(c.Q, dim_a);
    return out;
}

} // namespace

Cochain derived_bracket_semidirect(const Cochain& c1, const Cochain& c2, const Algebra& alg,
                                   const Bimodule& mod) {
    size_t da = alg.dim, dm = mod.dim;
    Algebra tri = semidirect_triple(alg, mod);
    MultiTensor mu = tri.mult.as_multitensor();
    MultiTensor l1 = lift_cochain(c1, da, dm);
    MultiTensor l2 = lift_cochain(c2, da, dm);
    MultiTensor inner = gerstenhaber_bracket(mu, l1);
    MultiTensor full = gerstenhaber_bracket(inner, l2);
    full = full.scaled(sign_pow(static_cast<long>(c1.arity)));

    // The result must again live in the abelian subalgebra: inputs read from
    // the M block, outputs in A ⊕ A.
    Cochain out = make_cochain(c1.arity + c2.arity, dm, da);
    for (const auto& [k, v] : full.coefficients()) {
        if (k[0] >= 2 * da)
            throw Error("semidirect bracket escaped the A ⊕ A block");
        std::vector<size_t> idx;
        for (size_t t = 1; t < k.size(); ++t) {
            if (k[t] < 2 * da)
                throw Error("semidirect bracket depends on an A ⊕ A input");
            idx.push_back(k[t] - 2 * da);
        }
        if (k[0] < da)
            out.P.add(k[0], idx, v);
        else
            out.Q.add(k[0] - da, idx, v);
    }
    return out;
}

Cochain rbs_differential(const RBSPair& pair, const Cochain& c, const Algebra& alg,
                         const Bimodule& mod) {
    auto rep = grbs_defect(alg, mod, pair);
    if (!rep.is_rbs)
        throw PreconditionError("differential needs a Rota-Baxter system: " + rep.witness);
    return derived_bracket(cochain_from_pair(pair), c, alg, mod);
}

Cochain hochschild_differential(const RBSPair& pair, const Cochain& c, const Algebra& alg,
                                const Bimodule& mod) {
    size_t dm = mod.dim, da = alg.dim;
    long n = static_cast<long>(c.arity);
    Cochain out = make_cochain(c.arity + 1, dm, da);
    for_tuples(c.arity + 1, dm, [&](std::span<const size_t> u) {
        auto seg = [&](size_t from, size_t len) {
            return std::vector<size_t>(u.begin() + from, u.begin() + from + len);
        };
        Vec accP(da), accQ(da);
        Vec u1 = basis_vec(dm, u[0]);
        Vec ulast = basis_vec(dm, u[c.arity]);

        Vec f_tail = apply_on_basis(c.P, seg(1, c.arity), dm);
        Vec g_tail = apply_on_basis(c.Q, seg(1, c.arity), dm);
        // R(u_1) f(u_2..) − R(u_1 · g(u_2..))
        vec_add_scaled(accP, Rational(1), alg.mul(pair.R.apply(u1), f_tail));
        vec_add_scaled(accP, Rational(-1), pair.R.apply(mod.act_right(u1, g_tail)));
        // S(u_1) g(u_2..) − S(u_1 · g(u_2..))
        vec_add_scaled(accQ, Rational(1), alg.mul(pair.S.apply(u1), g_tail));
        vec_add_scaled(accQ, Rational(-1), pair.S.apply(mod.act_right(u1, g_tail)));

        // Σ (−1)^i f(u_1,..., R(u_i)·u_{i+1} + u_i·S(u_{i+1}), ..., u_{n+1})
        for (long i = 1; i <= n; ++i) {
            std::vector<size_t> rest;
            for (long t = 0; t < i - 1; ++t) rest.push_back(u[t]);
            for (long t = i + 1; t <= n; ++t) rest.push_back(u[t]);
            Vec ui = basis_vec(dm, u[i - 1]), uj = basis_vec(dm, u[i]);
            Vec arg = vec_add(mod.act_left(pair.R.apply(ui), uj),
                              mod.act_right(ui, pair.S.apply(uj)));
            Rational s = sign_pow(i);
            vec_add_scaled(accP, s, apply_with_slot(c.P, rest, i - 1, arg, dm));
            vec_add_scaled(accQ, s, apply_with_slot(c.Q, rest, i - 1, arg, dm));
        }

        Vec f_front = apply_on_basis(c.P, seg(0, c.arity), dm);
        Vec g_front = apply_on_basis(c.Q, seg(0, c.arity), dm);
        Rational sn = sign_pow(n + 1);
        // (−1)^{n+1} f(u_1..u_n) R(u_{n+1}) − (−1)^{n+1} R(f(u_1..u_n)·u_{n+1})
        vec_add_scaled(accP, sn, alg.mul(f_front, pair.R.apply(ulast)));
        vec_add_scaled(accP, -sn, pair.R.apply(mod.act_left(f_front, ulast)));
        // (−1)^{n+1} g(u_1..u_n) S(u_{n+1}) − (−1)^{n+1} S(f(u_1..u_n)·u_{n+1})
        vec_add_scaled(accQ, sn, alg.mul(g_front, pair.S.apply(ulast)));
        vec_add_scaled(accQ, -sn, pair.S.apply(mod.act_left(f_front, ulast)));

        accumulate(out.P, da, u, accP, Rational(1));
        accumulate(out.Q, da, u, accQ, Rational(1));
    });
    return out;
}

size_t cochain_space_dim(size_t arity, size_t dim_m, size_t dim_a) {
    size_t p = 1;
    for (size_t t = 0; t < arity; ++t) p *= dim_m;
    return 2 * dim_a * p;
}

Vec cochain_flatten(const Cochain& c, size_t dim_m, size_t dim_a) {
    size_t block = cochain_space_dim(c.arity, dim_m, dim_a) / 2;
    Vec v(2 * block);
    auto put = [&](const MultiTensor& t, size_t off) {
        for (const auto& [k, val] : t.coefficients()) {
            size_t pos = k[0];
            for (size_t i = 1; i < k.size(); ++i) pos = pos * dim_m + k[i];
            v[off + pos] = val;
        }
    };
    put(c.P, 0);
    put(c.Q, block);
    return v;
}

Cochain cochain_unflatten(const Vec& v, size_t arity, size_t dim_m, size_t dim_a) {
    Cochain c = make_cochain(arity, dim_m, dim_a);
    size_t block = v.size() / 2;
    for (size_t pos = 0; pos < v.size(); ++pos) {
        if (v[pos].is_zero()) continue;
        size_t rel = pos % block;
        std::vector<size_t> idx(arity);
        size_t x = rel;
        for (size_t t = arity; t > 0; --t) {
            idx[t - 1] = x % dim_m;
            x /= dim_m;
        }
        size_t out = x;
        if (pos < block)
            c.P.add(out, idx, v[pos]);
        else
            c.Q.add(out, idx, v[pos]);
    }
    return c;
}

Matrix differential_matrix(const RBSPair& pair, const Algebra& alg, const Bimodule& mod,
                           size_t arity) {
    size_t cols = cochain_space_dim(arity, mod.dim, alg.dim);
    size_t rows = cochain_space_dim(arity + 1, mod.dim, alg.dim);
    Matrix D(rows, cols);
    for (size_t j = 0; j < cols; ++j) {
        Vec e(cols);
        e[j] = Rational(1);
        Cochain cj = cochain_unflatten(e, arity, mod.dim, alg.dim);
        // All columns use the Hochschild form; the derived bracket equals it
        // up to the global (−1)^n, which cancels in every rank.
        Cochain d = hochschild_differential(pair, cj, alg, mod);
        Vec col = cochain_flatten(d, mod.dim, alg.dim);
        for (size_t i = 0; i < rows; ++i) D.at(i, j) = col[i];
    }
    return D;
}

std::vector<size_t> cohomology_dimensions(const RBSPair& pair, const Algebra& alg,
                                          const Bimodule& mod, size_t max_degree,
                                          size_t max_space_dim) {
    auto rep = grbs_defect(alg, mod, pair);
    if (!rep.is_rbs)
        throw PreconditionError("cohomology needs a Rota-Baxter system: " + rep.witness);
    if (cochain_space_dim(max_degree + 1, mod.dim, alg.dim) > max_space_dim)
        throw ResourceError("cochain space at degree " + std::to_string(max_degree + 1) +
                            " exceeds the configured budget");
    std::vector<size_t> ranks(max_degree + 1); // rank of d^n for n = 0..N
    for (size_t n = 0; n <= max_degree; ++n) {
        Matrix D = differential_matrix(pair, alg, mod, n);
        ranks[n] = linear_solve_suite(D).rank;
    }
    std::vector<size_t> dims;
    for (size_t n = 0; n <= max_degree; ++n) {
        size_t cn = cochain_space_dim(n, mod.dim, alg.dim);
        size_t ker = cn - ranks[n];
        size_t im_prev = (n == 0) ? 0 : ranks[n - 1];
        dims.push_back(ker - im_prev);
    }
    return dims;
}

std::vector<Cochain> cohomology_representatives(const RBSPair& pair, const Algebra& alg,
                                                const Bimodule& mod, size_t degree,
                                                size_t max_space_dim) {
    auto rep = grbs_defect(alg, mod, pair);
    if (!rep.is_rbs)
        throw PreconditionError("cohomology needs a Rota-Baxter system: " + rep.witness);
    if (cochain_space_dim(degree + 1, mod.dim, alg.dim) > max_space_dim)
        throw ResourceError("cochain space at degree " + std::to_string(degree + 1) +
                            " exceeds the configured budget");
    Matrix D = differential_matrix(pair, alg, mod, degree);
    auto kernel = linear_solve_suite(D).kernel_basis;
    std::vector<Vec> span;
    if (degree > 0) {
        Matrix Dprev = differential_matrix(pair, alg, mod, degree - 1);
        for (size_t j = 0; j < Dprev.cols(); ++j) {
            Vec col = Dprev.col(j);
            if (!in_span(span, col)) span.push_back(std::move(col));
        }
    }
    std::vector<Cochain> reps;
    for (const auto& k : kernel) {
        if (in_span(span, k)) continue;
        span.push_back(k);
        reps.push_back(cochain_unflatten(k, degree, mod.dim, alg.dim));
    }
    return reps;
}

// ---- dendriform operad complex ----

bool DendCochain::is_zero() const {
    for (const auto& t : comp)
        if (!t.is_zero()) return false;
    return true;
}

DendCochain& DendCochain::add_scaled(const Rational& c, const DendCochain& o) {
    if (arity != o.arity) throw InputError("dendriform cochain arity mismatch");
    for (size_t r = 0; r < comp.size(); ++r) comp[r].add_scaled(c, o.comp[r]);
    return *this;
}

DendCochain make_dend_cochain(size_t arity, size_t dim) {
    DendCochain f;
    f.arity = arity;
    for (size_t r = 0; r < arity; ++r) f.comp.emplace_back(arity, dim, dim);
    return f;
}

DendCochain dend_partial_compose(const DendCochain& f, const DendCochain& g, size_t i) {
    size_t m = f.arity, n = g.arity;
    if (i < 1 || i > m) throw InputError("partial composition slot out of range");
    size_t dim = f.comp[0].input_dim();
    DendCochain out = make_dend_cochain(m + n - 1, dim);
    MultiTensor gsum(n, dim, dim);
    for (const auto& t : g.comp) gsum.add_scaled(Rational(1), t);
    for (size_t r = 1; r <= m + n - 1; ++r) {
        MultiTensor& dst = out.comp[r - 1];
        if (r <= i - 1)
            dst.add_scaled(Rational(1), tensor_plug(f.comp[r - 1], gsum, i));
        else if (r <= i + n - 1)
            dst.add_scaled(Rational(1), tensor_plug(f.comp[i - 1], g.comp[r - i], i));
        else
            dst.add_scaled(Rational(1), tensor_plug(f.comp[r - n], gsum, i));
    }
    return out;
}

DendCochain dend_bracket(const DendCochain& f, const DendCochain& g) {
    long a = static_cast<long>(f.arity), b = static_cast<long>(g.arity);
    size_t dim = f.comp.empty() ? 0 : f.comp[0].input_dim();
    DendCochain out = make_dend_cochain(f.arity + g.arity - 1, dim);
    for (long i = 1; i <= a; ++i)
        out.add_scaled(sign_pow((i - 1) * (b - 1)),
                       dend_partial_compose(f, g, static_cast<size_t>(i)));
    Rational outer = -sign_pow((a - 1) * (b - 1));
    for (long i = 1; i <= b; ++i)
        out.add_scaled(outer * sign_pow((i - 1) * (a - 1)),
                       dend_partial_compose(g, f, static_cast<size_t>(i)));
    return out;
}

DendCochain dend_pi(const BinaryStructure& dend) {
    if (dend.kind != StructureKind::Dendriform) throw InputError("dend_pi needs a dendriform structure");
    DendCochain pi = make_dend_cochain(2, dend.dim);
    pi.comp[0] = dend.table("prec").as_multitensor();
    pi.comp[1] = dend.table("succ").as_multitensor();
    return pi;
}

DendCochain dend_differential(const DendCochain& pi, const DendCochain& f) {
    DendCochain out = make_dend_cochain(f.arity + 1, f.comp[0].input_dim());
    out.add_scaled(sign_pow(static_cast<long>(f.arity) - 1), dend_bracket(pi, f));
    return out;
}

DendCochain theta_map(const Cochain& c, const Algebra& alg, const Bimodule& mod) {
    size_t n = c.arity, dm = mod.dim;
    if (c.P.input_dim() != dm || c.P.output_dim() != alg.dim)
        throw InputError("cochain dimensions do not match the model");
    DendCochain out = make_dend_cochain(n + 1, dm);
    Rational head_sign = sign_pow(static_cast<long>(n) + 1);
    // r = 1: (−1)^{n+1} u_1 · Q(u_2, ..., u_{n+1})
    for (const auto& [qk, qv] : c.Q.coefficients())
        for (const auto& [rk, rv] : mod.right.coefficients()) {
            if (rk[1] != qk[0]) continue; // action slot matches Q's output
            for (size_t u1 = 0; u1 < dm; ++u1) {
                if (rk[0] != u1) continue;
                std::vector<size_t> idx;
                idx.push_back(u1);
                for (size_t t = 1; t < qk.size(); ++t) idx.push_back(qk[t]);
                out.comp[0].add(rk[2], idx, head_sign * qv * rv);
            }
        }
    // r = n+1: P(u_1, ..., u_n) · u_{n+1}
    for (const auto& [pk, pv] : c.P.coefficients())
        for (const auto& [lk, lv] : mod.left.coefficients()) {
            if (lk[0] != pk[0]) continue; // action slot matches P's output
            std::vector<size_t> idx;
            for (size_t t = 1; t < pk.size(); ++t) idx.push_back(pk[t]);
            idx.push_back(lk[1]);
            out.comp[n].add(lk[2], idx, pv * lv);
        }
    return out;
}

} // namespace rbsys
