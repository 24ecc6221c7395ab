#pragma once

#include <string>
#include <vector>

#include "rbsys/loday.hpp"
#include "rbsys/rbs.hpp"

namespace rbsys {

// Element of Hom(M^{⊗n}, A ⊕ A); at arity 0 a pair of algebra elements.
struct Cochain {
    size_t arity = 0;
    MultiTensor P, Q; // M^{⊗n} -> A each

    bool is_zero() const { return P.is_zero() && Q.is_zero(); }
    Cochain& add_scaled(const Rational& c, const Cochain& o);
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity == b.arity && a.P == b.P && a.Q == b.Q;
    }
};

Cochain make_cochain(size_t arity, size_t dim_m, size_t dim_a);
Cochain cochain_from_elements(const Vec& a, const Vec& b, size_t dim_m);
Cochain cochain_from_pair(const RBSPair& pair); // arity 1
// Degree-0 values as algebra elements.
std::pair<Vec, Vec> cochain_elements(const Cochain& c, size_t dim_a);

// Gerstenhaber bracket [f,g] = f•g − (−1)^{(m−1)(n−1)} g•f on multilinear
// maps of one space, arities m and n.
MultiTensor gerstenhaber_circ(const MultiTensor& f, const MultiTensor& g);
MultiTensor gerstenhaber_bracket(const MultiTensor& f, const MultiTensor& g);
// g plugged into slot i (1-based) of f, no sign.
MultiTensor tensor_plug(const MultiTensor& f, const MultiTensor& g, size_t i);

// The graded Lie bracket on ⊕_n Hom(M^{⊗n}, A ⊕ A), by the explicit
// closed formulas (all arities, including the degree-0 extensions).
Cochain derived_bracket(const Cochain& c1, const Cochain& c2, const Algebra& alg,
                        const Bimodule& mod);

// Independent route: (-1)^m [[μ̂, ĉ1], ĉ2] inside the Gerstenhaber algebra
// of the semidirect triple A ⊕ A ⊕ M.
Cochain derived_bracket_semidirect(const Cochain& c1, const Cochain& c2, const Algebra& alg,
                                   const Bimodule& mod);

// d_{(R,S)} = ⟦(R,S), ·⟧; refuses pairs that are not Rota-Baxter systems.
Cochain rbs_differential(const RBSPair& pair, const Cochain& c, const Algebra& alg,
                         const Bimodule& mod);

// Hochschild differential of (M,*) with coefficients in A ⊕ A; satisfies
// d_{(R,S)} = (-1)^n δ_Hoch on arity-n cochains.
Cochain hochschild_differential(const RBSPair& pair, const Cochain& c, const Algebra& alg,
                                const Bimodule& mod);

size_t cochain_space_dim(size_t arity, size_t dim_m, size_t dim_a);
Vec cochain_flatten(const Cochain& c, size_t dim_m, size_t dim_a);
Cochain cochain_unflatten(const Vec& v, size_t arity, size_t dim_m, size_t dim_a);
// Matrix of d_{(R,S)} : C^n -> C^{n+1} in the flattened bases.
Matrix differential_matrix(const RBSPair& pair, const Algebra& alg, const Bimodule& mod,
                           size_t arity);

// dim H^0 .. dim H^max_degree as exact ranks; refuses degrees whose
// cochain spaces exceed `max_space_dim`.
std::vector<size_t> cohomology_dimensions(const RBSPair& pair, const Algebra& alg,
                                          const Bimodule& mod, size_t max_degree,
                                          size_t max_space_dim = 4096);

// Representative cocycles spanning H^degree: kernel elements of d^degree
// that stay independent modulo the image of d^{degree-1}.
std::vector<Cochain> cohomology_representatives(const RBSPair& pair, const Algebra& alg,
                                                const Bimodule& mod, size_t degree,
                                                size_t max_space_dim = 4096);

// ---- Dendriform operad complex O(n) = Hom(K[C_n] ⊗ D^{⊗n}, D) ----

struct DendCochain {
    size_t arity = 0;                 // n
    std::vector<MultiTensor> comp;    // comp[r-1] = f([r]; ...), r = 1..n

    bool is_zero() const;
    DendCochain& add_scaled(const Rational& c, const DendCochain& o);
    friend bool operator==(const DendCochain& a, const DendCochain& b) {
        return a.arity == b.arity && a.comp == b.comp;
    }
};

DendCochain make_dend_cochain(size_t arity, size_t dim);

// Partial composition f ∘_i g with the three-case index bookkeeping.
DendCochain dend_partial_compose(const DendCochain& f, const DendCochain& g, size_t i);
// ⌈f,g⌉ = Σ (−1)^{(i−1)(b−1)} f∘_i g − (−1)^{(a−1)(b−1)} Σ (−1)^{(i−1)(a−1)} g∘_i f.
DendCochain dend_bracket(const DendCochain& f, const DendCochain& g);
// π([1];a,b) = a≺b, π([2];a,b) = a≻b.
DendCochain dend_pi(const BinaryStructure& dend);
// δ_π(f) = (−1)^{n−1} ⌈π, f⌉ for f of arity n.
DendCochain dend_differential(const DendCochain& pi, const DendCochain& f);

// Θ_n : Hom(M^{⊗n}, A⊕A) -> O(n+1); r = 1 carries (−1)^{n+1} u_1·Q(...),
// middle components vanish, r = n+1 carries P(...)·u_{n+1}.
DendCochain theta_map(const Cochain& c, const Algebra& alg, const Bimodule& mod);

} // namespace rbsys
