#pragma once

// Deterministic random instances shared by the property and acceptance
// suites: small associative algebras from verified families, canonical
// bimodules, operator pairs (arbitrary and constructed Rota-Baxter ones),
// and random cochains.

#include <random>

#include "rbsys/algebra.hpp"
#include "rbsys/cohomology.hpp"
#include "rbsys/rbs.hpp"
#include "rbsys/yang_baxter.hpp"

namespace testsupport {

using namespace rbsys;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, int lo = -3, int hi = 3, int max_den = 2) {
    return Rational(rand_int(rng, lo, hi), rand_int(rng, 1, max_den));
}

inline Matrix rand_matrix(Rng& rng, size_t rows, size_t cols, int lo = -2, int hi = 2) {
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(rand_int(rng, lo, hi));
    return m;
}

// ---- verified algebra families (all associative by construction) ----

inline Algebra zero_algebra(size_t dim) { return make_algebra(dim); }

// Q[x]/(x^{k+1}) on basis 1, x, ..., x^k.
inline Algebra truncated_poly(size_t k) {
    Algebra a = make_algebra(k + 1);
    for (size_t i = 0; i <= k; ++i)
        for (size_t j = 0; i + j <= k; ++j) a.mult.add(i, j, i + j, Rational(1));
    return a;
}

// x Q[x]/(x^{d+1}): nilpotent, basis x, ..., x^d.
inline Algebra nilpotent_poly(size_t d) {
    Algebra a = make_algebra(d);
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = 1; i + j <= d; ++j) a.mult.add(i - 1, j - 1, i + j - 1, Rational(1));
    return a;
}

// Strictly upper triangular 3x3 matrices on basis e12, e23, e13.
inline Algebra strict_upper3() {
    Algebra a = make_algebra(3, {"e12", "e23", "e13"});
    a.mult.add(0, 1, 2, Rational(1)); // e12 e23 = e13
    return a;
}

// Full upper triangular 2x2 matrices on basis a = e11, b = e12, c = e22.
inline Algebra upper2() {
    Algebra a = make_algebra(3, {"a", "b", "c"});
    a.mult.add(0, 0, 0, Rational(1)); // aa = a
    a.mult.add(0, 1, 1, Rational(1)); // ab = b
    a.mult.add(1, 2, 1, Rational(1)); // bc = b
    a.mult.add(2, 2, 2, Rational(1)); // cc = c
    return a;
}

inline Algebra diagonal_algebra(size_t n) {
    Algebra a = make_algebra(n);
    for (size_t i = 0; i < n; ++i) a.mult.add(i, i, i, Rational(1));
    return a;
}

// dim 2, e1 a left unit on everything, e2 nilpotent.
inline Algebra left_unit2() {
    Algebra a = make_algebra(2);
    a.mult.add(0, 0, 0, Rational(1));
    a.mult.add(0, 1, 1, Rational(1));
    return a;
}

inline Algebra random_algebra(Rng& rng, size_t max_dim = 3) {
    switch (rand_int(rng, 0, 7)) {
    case 0: return zero_algebra(1 + rand_int(rng, 0, (int)max_dim - 1));
    case 1: return truncated_poly(std::min<size_t>(max_dim - 1, 2));
    case 2: return nilpotent_poly(std::min<size_t>(max_dim, 3));
    case 3: return max_dim >= 3 ? strict_upper3() : nilpotent_poly(2);
    case 4: return max_dim >= 3 ? upper2() : left_unit2();
    case 5: return diagonal_algebra(1 + rand_int(rng, 0, (int)max_dim - 1));
    case 6: return left_unit2();
    default: return truncated_poly(1);
    }
}

inline Bimodule zero_bimodule(const Algebra& alg, size_t dim) { return make_bimodule(alg, dim); }

inline Bimodule random_bimodule(Rng& rng, const Algebra& alg, size_t max_dim = 3) {
    switch (rand_int(rng, 0, 5)) {
    case 0: return canonical_bimodule(alg, CanonicalBimodule::Adjoint);
    case 1: return canonical_bimodule(alg, CanonicalBimodule::Coadjoint);
    case 2: return left_only(canonical_bimodule(alg, CanonicalBimodule::Adjoint));
    case 3: return right_only(canonical_bimodule(alg, CanonicalBimodule::Coadjoint));
    case 4: return zero_bimodule(alg, 1 + rand_int(rng, 0, (int)max_dim - 1));
    default: return canonical_bimodule(alg, CanonicalBimodule::Adjoint);
    }
}

inline RBSPair rand_pair(Rng& rng, const Algebra& alg, const Bimodule& mod, int lo = -2,
                         int hi = 2) {
    return RBSPair{rand_matrix(rng, alg.dim, mod.dim, lo, hi),
                   rand_matrix(rng, alg.dim, mod.dim, lo, hi)};
}

// A principal 1-cocycle B(a1,a2) = a1·m0 − m0·a2 for a random m0 ∈ M.
inline Matrix coboundary_cocycle(Rng& rng, const Algebra& alg, const Bimodule& mod) {
    Vec m0(mod.dim);
    for (auto& x : m0) x = Rational(rand_int(rng, -2, 2));
    Matrix B(mod.dim, 2 * alg.dim);
    for (size_t i = 0; i < alg.dim; ++i) {
        Vec lm = mod.act_left(basis_vec(alg.dim, i), m0);
        Vec rm = mod.act_right(m0, basis_vec(alg.dim, i));
        for (size_t t = 0; t < mod.dim; ++t) {
            B.at(t, i) = lm[t];
            B.at(t, alg.dim + i) = -rm[t];
        }
    }
    return B;
}

// A constructed Rota-Baxter pair on (alg, mod). Always succeeds (the zero
// pair closes the family); other members come from scalar identity pairs
// on the adjoint module and gauge transforms by coboundary cocycles.
inline RBSPair random_rbs(Rng& rng, const Algebra& alg, const Bimodule& mod) {
    std::vector<RBSPair> candidates;
    size_t n = alg.dim, m = mod.dim;
    candidates.push_back(RBSPair{Matrix(n, m), Matrix(n, m)});
    bool adjoint_like = (m == n);
    if (adjoint_like) {
        Rational c(rand_int(rng, -2, 2));
        candidates.push_back(RBSPair{Matrix::identity(n).scaled(c), Matrix(n, n)});
        candidates.push_back(RBSPair{Matrix(n, n), Matrix::identity(n).scaled(c)});
        candidates.push_back(RBSPair{Matrix::identity(n), Matrix::identity(n).scaled(Rational(-1))});
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (auto& cand : candidates) {
        if (!grbs_defect(alg, mod, cand).is_rbs) continue;
        // try to twist it by a gauge transformation
        if (rand_int(rng, 0, 1) == 1) {
            Matrix B = coboundary_cocycle(rng, alg, mod);
            auto g = gauge_transform(alg, mod, cand, B);
            if (g.pair && grbs_defect(alg, mod, *g.pair).is_rbs) return *g.pair;
        }
        return cand;
    }
    return RBSPair{Matrix(n, m), Matrix(n, m)};
}

inline Cochain rand_cochain(Rng& rng, size_t arity, size_t dim_m, size_t dim_a,
                            int entries = 6) {
    Cochain c = make_cochain(arity, dim_m, dim_a);
    for (int t = 0; t < entries; ++t) {
        std::vector<size_t> idx(arity);
        for (auto& i : idx) i = static_cast<size_t>(rand_int(rng, 0, (int)dim_m - 1));
        size_t out = static_cast<size_t>(rand_int(rng, 0, (int)dim_a - 1));
        Rational v(rand_int(rng, -2, 2));
        if (rand_int(rng, 0, 1))
            c.P.add(out, idx, v);
        else
            c.Q.add(out, idx, v);
    }
    return c;
}

inline Tensor2 rand_skew_tensor(Rng& rng, size_t dim) {
    Tensor2 t = make_tensor2(dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j) {
            Rational v(rand_int(rng, -2, 2));
            t.grid.at(i, j) = v;
            t.grid.at(j, i) = -v;
        }
    return t;
}

// (R,S) = (identity minus nilpotent shift, ...) on the truncated Jackson
// model; handy as a nontrivial Rota-Baxter instance with dim 4.
inline std::tuple<Algebra, Bimodule, RBSPair> jackson_instance(size_t degree, long q) {
    auto jm = jackson_example(degree, Rational(q));
    Bimodule adj = canonical_bimodule(jm.alg, CanonicalBimodule::Adjoint);
    RBSPair pair{jm.J, jm.sigma.mul(jm.J)};
    return {jm.alg, adj, pair};
}

} // namespace testsupport
