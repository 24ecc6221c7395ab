#pragma once

#include <map>
#include <string>

#include "rbsys/loday.hpp"
#include "rbsys/rbs.hpp"

namespace rbsys {

// Element of A ⊗ A as a coefficient grid r = Σ r_{ij} e_i ⊗ e_j.
struct Tensor2 {
    Matrix grid; // grid.at(i, j) = r_{ij}
    size_t dim() const { return grid.rows(); }
};

Tensor2 make_tensor2(size_t dim);
bool is_skew(const Tensor2& r);
Tensor2 tensor2_sub(const Tensor2& a, const Tensor2& b);

// Dense element of A ⊗ A ⊗ A.
class Tensor3 {
  public:
    Tensor3() : dim_(0) {}
    explicit Tensor3(size_t dim) : dim_(dim), a_(dim * dim * dim) {}
    size_t dim() const { return dim_; }
    Rational& at(size_t i, size_t j, size_t k) { return a_[(i * dim_ + j) * dim_ + k]; }
    const Rational& at(size_t i, size_t j, size_t k) const {
        return a_[(i * dim_ + j) * dim_ + k];
    }
    bool is_zero() const;
    Tensor3& add_scaled(const Rational& c, const Tensor3& o);
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

  private:
    size_t dim_;
    std::vector<Rational> a_;
};

// Positions of a 2-tensor inside A^{⊗3}: one of (1,2), (1,3), (2,3).
struct SlotPair {
    int first, second;
};

// Product X_{p} Y_{q} in A^{⊗3} with the written-order convention: in a slot
// carrying components of both factors, X's component multiplies on the left
// (e.g. r_{13} s_{12} = r_(1) s_(1) ⊗ s_(2) ⊗ r_(2)).
Tensor3 slot_product(const Algebra& alg, const Tensor2& x, SlotPair px, const Tensor2& y,
                     SlotPair qy);

// Bimodule structure of A on A^{⊗3}: a·(b⊗c⊗d) = ab⊗c⊗d, (b⊗c⊗d)·a = b⊗c⊗da.
Tensor3 act_left3(const Algebra& alg, const Vec& a, const Tensor3& t);
Tensor3 act_right3(const Algebra& alg, const Tensor3& t, const Vec& a);

// Coproduct-style map A -> A ⊗ A: component grids per input basis vector.
using CoMap = std::vector<Tensor2>;

CoMap make_comap(size_t dim);
Tensor2 comap_apply(const CoMap& d, const Vec& a);
bool comap_is_zero(const CoMap& d);
CoMap comap_add(const CoMap& a, const CoMap& b);

Tensor3 id_otimes_comap(const Algebra& alg, const CoMap& d, const Tensor2& r); // (id ⊗ Δ)(r)
Tensor3 comap_otimes_id(const Algebra& alg, const CoMap& d, const Tensor2& r); // (Δ ⊗ id)(r)

enum class AybpMode { Aybp, FrobeniusSeparability };

struct AybpReport {
    // aybp: defect_1 = r13 r12 − r12 r23 + s23 r13, defect_2 = s13 r12 − s12 s23 + s23 s13.
    // frobenius: pairwise differences of the two equality chains.
    std::map<std::string, Tensor3> defects;
    bool pass = true;
};

AybpReport aybp_defect(const Tensor2& r, const Tensor2& s, const Algebra& alg,
                       AybpMode mode = AybpMode::Aybp);

enum class TensorRbsFlavor { RotaBaxterSystem, LeftAveraging };

// R(a) = r_(1) a r_(2), S(a) = s_(1) a s_(2); preconditions per flavor.
RBSPair rbs_from_tensors(const Tensor2& r, const Tensor2& s, const Algebra& alg,
                         TensorRbsFlavor flavor);

// r^♯(α) = α(r_(2)) r_(1) as a matrix A* -> A on dual bases.
Matrix sharp_map(const Tensor2& r);

struct SkewAybpGrbsReport {
    bool aybp_pass = false;
    bool grbs_pass = false;
    bool agree = false;
};

// Both sides of: (r,s) is an AYBP iff (r♯,s♯) is a generalized Rota-Baxter
// system on the coadjoint module. Requires skew-symmetric input.
SkewAybpGrbsReport skew_aybp_grbs_check(const Tensor2& r, const Tensor2& s, const Algebra& alg);

struct CovariantBialgebra {
    Algebra alg;
    CoMap coproduct; // Δ
    CoMap delta1, delta2;
};

struct CovariantReport {
    bool derivation1 = true, derivation2 = true;
    bool covariance = true;
    bool coassociative = true;
    bool compatible = true; // (id ⊗ δ1)∘Δ = (δ2 ⊗ id)∘Δ
    std::string witness;
    bool pass() const { return derivation1 && derivation2 && covariance && coassociative; }
};

CovariantReport covariant_bialgebra_check(const CovariantBialgebra& cb);

// Δ̄(a) = a·r − s·a, δ_r(a) = a·r − r·a, δ_s(a) = a·s − s·a; needs an AYBP.
CovariantBialgebra quasitriangular_build(const Tensor2& r, const Tensor2& s, const Algebra& alg);

struct PerturbationReport {
    bool condition_holds = false;
    bool direct_check = false;
    bool agree = false;
};

// The perturbation criterion: (A, μ, Δ+Δ̄, δ1+δ_r, δ2+δ_s) is a covariant
// bialgebra iff a·((id⊗Δ)⁻(r) − aybp_1) − ((id⊗Δ)⁻(s) − aybp_2)·a
// = s23 Δ(a)13 + Δ(a)13 r12 for all a.
PerturbationReport perturbation_check(const CovariantBialgebra& cb, const Tensor2& r,
                                      const Tensor2& s);

// a ⋄ b = b_(1) a b_(2) over Δ(b); needs the compatibility flag.
BinaryStructure compatible_prelie(const CovariantBialgebra& cb);

// Product on A* dual to the coproduct under Ξ(α⊗β)(a⊗b) = α(b)β(a);
// set `standard_pairing` for Ξ(α⊗β)(a⊗b) = α(a)β(b) instead.
Bilinear dual_product(const Algebra& alg, const CoMap& coproduct, bool standard_pairing = false);

struct WeakMorphismData {
    Matrix phi, varphi, psi;
};

bool weak_morphism_check_aybp(const Algebra& alg, const Tensor2& r, const Tensor2& s,
                              const Tensor2& r2, const Tensor2& s2, const WeakMorphismData& w);
bool weak_morphism_check_covariant(const CovariantBialgebra& src, const CovariantBialgebra& dst,
                                   const WeakMorphismData& w);

} // namespace rbsys
