#include "rbsys/algebra.hpp"

#include "rbsys/errors.hpp"

namespace rbsys {

Algebra make_algebra(size_t dim, std::vector<std::string> basis) {
    Algebra a;
    a.dim = dim;
    if (basis.empty()) {
        for (size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i + 1));
    }
    if (basis.size() != dim) throw InputError("basis name count does not match dimension");
    a.basis = std::move(basis);
    a.mult = Bilinear(dim, dim, dim);
    return a;
}

Bimodule make_bimodule(const Algebra& alg, size_t dim) {
    Bimodule m;
    m.dim = dim;
    m.alg_dim = alg.dim;
    m.left = Bilinear(alg.dim, dim, dim);
    m.right = Bilinear(dim, alg.dim, dim);
    return m;
}

ValidationReport validate_model(const Algebra& alg, const Bimodule* mod) {
    if (alg.mult.dim_x() != alg.dim || alg.mult.dim_y() != alg.dim || alg.mult.dim_out() != alg.dim)
        throw InputError("algebra structure tensor has wrong shape");
    if (mod) {
        if (mod->alg_dim != alg.dim) throw InputError("bimodule is over an algebra of different dimension");
        if (mod->left.dim_x() != alg.dim || mod->left.dim_y() != mod->dim || mod->left.dim_out() != mod->dim)
            throw InputError("left action tensor has wrong shape");
        if (mod->right.dim_x() != mod->dim || mod->right.dim_y() != alg.dim || mod->right.dim_out() != mod->dim)
            throw InputError("right action tensor has wrong shape");
    }

    ValidationReport rep;
    size_t n = alg.dim;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec eij = alg.mul_basis(i, j);
            for (size_t k = 0; k < n; ++k) {
                Vec lhs = alg.mul(eij, basis_vec(n, k));
                Vec rhs = alg.mul(basis_vec(n, i), alg.mul_basis(j, k));
                if (lhs != rhs) {
                    rep.associative = false;
                    rep.failing_triples.push_back({"associativity", i, j, k});
                }
            }
        }

    if (mod) {
        size_t m = mod->dim;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec eij = alg.mul_basis(i, j);
                for (size_t u = 0; u < m; ++u) {
                    Vec mu = basis_vec(m, u);
                    // (ab)·u = a·(b·u)
                    if (mod->act_left(eij, mu) !=
                        mod->act_left(basis_vec(n, i), mod->left.apply_basis(j, u))) {
                        rep.bimodule = false;
                        rep.failing_triples.push_back({"left-left", i, j, u});
                    }
                    // (a·u)·b = a·(u·b)
                    if (mod->act_right(mod->left.apply_basis(i, u), basis_vec(n, j)) !=
                        mod->act_left(basis_vec(n, i), mod->right.apply_basis(u, j))) {
                        rep.bimodule = false;
                        rep.failing_triples.push_back({"left-right", i, u, j});
                    }
                    // (u·a)·b = u·(ab)
                    if (mod->act_right(mod->right.apply_basis(u, i), basis_vec(n, j)) !=
                        mod->act_right(mu, eij)) {
                        rep.bimodule = false;
                        rep.failing_triples.push_back({"right-right", u, i, j});
                    }
                }
            }
    }
    return rep;
}

Bimodule canonical_bimodule(const Algebra& alg, CanonicalBimodule kind) {
    Bimodule m = make_bimodule(alg, alg.dim);
    size_t n = alg.dim;
    switch (kind) {
    case CanonicalBimodule::Adjoint:
        for (const auto& [k, v] : alg.mult.coefficients()) {
            m.left.add(k[0], k[1], k[2], v);
            m.right.add(k[0], k[1], k[2], v);
        }
        break;
    case CanonicalBimodule::Coadjoint:
        // On the dual basis: (e_i · f_j)(e_b) = f_j(e_b e_i) and
        // (f_j · e_i)(e_b) = f_j(e_i e_b).
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t b = 0; b < n; ++b) {
                    Rational cl = alg.mult.coefficient(b, i, j);
                    if (!cl.is_zero()) m.left.add(i, j, b, cl);
                    Rational cr = alg.mult.coefficient(i, b, j);
                    if (!cr.is_zero()) m.right.add(j, i, b, cr);
                }
        break;
    }
    return m;
}

Bimodule left_only(const Bimodule& mod) {
    Bimodule m = mod;
    m.right = Bilinear(mod.dim, mod.alg_dim, mod.dim);
    return m;
}

Bimodule right_only(const Bimodule& mod) {
    Bimodule m = mod;
    m.left = Bilinear(mod.alg_dim, mod.dim, mod.dim);
    return m;
}

Algebra semidirect_triple(const Algebra& alg, const Bimodule& mod) {
    size_t n = alg.dim, m = mod.dim;
    std::vector<std::string> names;
    for (const auto& b : alg.basis) names.push_back(b + "'");
    for (const auto& b : alg.basis) names.push_back(b + "''");
    for (size_t u = 0; u < m; ++u) names.push_back("m" + std::to_string(u + 1));
    Algebra s = make_algebra(2 * n + m, std::move(names));
    for (const auto& [k, v] : alg.mult.coefficients()) {
        s.mult.add(k[0], k[1], k[2], v);             // first copy
        s.mult.add(n + k[0], n + k[1], n + k[2], v); // second copy
    }
    for (const auto& [k, v] : mod.left.coefficients())
        s.mult.add(k[0], 2 * n + k[1], 2 * n + k[2], v); // a1 · v
    for (const auto& [k, v] : mod.right.coefficients())
        s.mult.add(2 * n + k[0], n + k[1], 2 * n + k[2], v); // u · b2
    return s;
}

JacksonModel jackson_example(size_t truncation_degree, const Rational& q) {
    size_t d = truncation_degree;
    // Coefficients (1-q)/(1-q^{n+1}) need q^n != 1 for 1 <= n <= d+1.
    Rational qpow(1);
    for (size_t n = 1; n <= d + 1; ++n) {
        qpow *= q;
        if (qpow == Rational(1))
            throw InputError("jackson model: q^" + std::to_string(n) +
                             " = 1 makes an integration coefficient degenerate");
    }

    std::vector<std::string> names;
    for (size_t i = 0; i <= d; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));

    JacksonModel jm;
    jm.alg = make_algebra(d + 1, std::move(names));
    for (size_t i = 0; i <= d; ++i)
        for (size_t j = 0; i + j <= d; ++j) jm.alg.mult.add(i, j, i + j, Rational(1));

    jm.sigma = Matrix(d + 1, d + 1);
    Rational p(1);
    for (size_t nn = 0; nn <= d; ++nn) {
        jm.sigma.at(nn, nn) = p;
        p *= q;
    }

    jm.J = Matrix(d + 1, d + 1);
    Rational qn1 = q; // q^{n+1}
    for (size_t nn = 0; nn + 1 <= d; ++nn) {
        jm.J.at(nn + 1, nn) = (Rational(1) - q) / (Rational(1) - qn1);
        qn1 *= q;
    }
    // J(x^d) lands on x^{d+1} ≡ 0.
    return jm;
}

} // namespace rbsys
