#pragma once

#include <string>
#include <vector>

#include "rbsys/linalg.hpp"
#include "rbsys/tensor.hpp"

namespace rbsys {

// Associative algebra given by structure constants on a named basis:
// e_i e_j = sum_k c_{ij}^k e_k.
struct Algebra {
    size_t dim = 0;
    std::vector<std::string> basis;
    Bilinear mult; // A ⊗ A -> A

    Vec mul(const Vec& a, const Vec& b) const { return mult.apply(a, b); }
    Vec mul_basis(size_t i, size_t j) const { return mult.apply_basis(i, j); }
};

Algebra make_algebra(size_t dim, std::vector<std::string> basis = {});

// Bimodule over an algebra, as explicit action tensors.
struct Bimodule {
    size_t dim = 0;      // dim M
    size_t alg_dim = 0;  // dim A, for shape checks
    Bilinear left;       // A ⊗ M -> M
    Bilinear right;      // M ⊗ A -> M

    Vec act_left(const Vec& a, const Vec& u) const { return left.apply(a, u); }
    Vec act_right(const Vec& u, const Vec& a) const { return right.apply(u, a); }
};

Bimodule make_bimodule(const Algebra& alg, size_t dim);

struct FailingTriple {
    std::string identity; // which axiom failed
    size_t i = 0, j = 0, k = 0;
};

struct ValidationReport {
    bool associative = true;
    bool bimodule = true;
    std::vector<FailingTriple> failing_triples;
    bool pass() const { return associative && bimodule; }
};

// Checks associativity of the algebra and, when given, the three bimodule
// compatibilities, by full enumeration over basis triples.
ValidationReport validate_model(const Algebra& alg, const Bimodule* mod = nullptr);

enum class CanonicalBimodule { Adjoint, Coadjoint };

Bimodule canonical_bimodule(const Algebra& alg, CanonicalBimodule kind);
// (M, l, 0) and (M, 0, r): the one-sided truncations of an existing bimodule.
Bimodule left_only(const Bimodule& mod);
Bimodule right_only(const Bimodule& mod);

// The associative algebra A ⊕ A ⊕ M with
// (a1,a2,u)(b1,b2,v) = (a1 b1, a2 b2, a1·v + u·b2).
Algebra semidirect_triple(const Algebra& alg, const Bimodule& mod);

// Truncated polynomial algebra Q[x]/(x^{d+1}) with the algebra map
// sigma(x^n) = q^n x^n and the q-integration operator
// J(x^n) = (1-q)/(1-q^{n+1}) x^{n+1}; (J, sigma∘J) is a Rota-Baxter
// system on the adjoint bimodule.
struct JacksonModel {
    Algebra alg;
    Matrix sigma;
    Matrix J;
};

JacksonModel jackson_example(size_t truncation_degree, const Rational& q);

} // namespace rbsys
