#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbsys/algebra.hpp"
#include "rbsys/loday.hpp"

namespace rbsys {

// A pair (R, S) of linear maps M -> A. It is a generalized Rota-Baxter
// system when R(u)R(v) = R(R(u)·v + u·S(v)) and
// S(u)S(v) = S(R(u)·v + u·S(v)) for all u, v.
struct RBSPair {
    Matrix R, S;
};

struct GrbsReport {
    MultiTensor defect_R, defect_S; // M ⊗ M -> A
    bool is_rbs = true;
    // Textual witness for the first failing basis pair, empty when is_rbs.
    std::string witness;
};

GrbsReport grbs_defect(const Algebra& alg, const Bimodule& mod, const RBSPair& pair);

// u * v = R(u)·v + u·S(v), the candidate associative product on M.
Bilinear star_product(const Algebra& alg, const Bimodule& mod, const RBSPair& pair);

// Graph characterization: {(Ru, Su, u)} is a subalgebra of A ⊕ A ⊕ M.
bool graph_subalgebra_check(const Algebra& alg, const Bimodule& mod, const RBSPair& pair);

// Nijenhuis characterization: (a1,a2,u) -> (Ru, Su, 0) is a Nijenhuis
// operator on the semidirect triple.
bool nijenhuis_lift_check(const Algebra& alg, const Bimodule& mod, const RBSPair& pair);

// Invertible pair (θ0, θ1) of maps A -> M subject to
//   θ0(xy) = x·θ0(y) + θ0(x)·(θ1⁻¹ θ0)(y)
//   θ1(xy) = (θ0⁻¹ θ1)(x)·θ1(y) + θ1(x)·y.
struct CocycleSystemPair {
    Matrix theta0, theta1;
};

bool cocycle_system_check(const Algebra& alg, const Bimodule& mod, const CocycleSystemPair& p);
// (R, S) invertible -> (R⁻¹, S⁻¹); requires dim A = dim M.
CocycleSystemPair inverse_correspondence(const Algebra& alg, const Bimodule& mod,
                                         const RBSPair& pair);
RBSPair rbs_from_cocycle_system(const Algebra& alg, const Bimodule& mod,
                                const CocycleSystemPair& p);

struct InducedStructures {
    BinaryStructure dendriform; // u≺v = u·S(v), u≻v = R(u)·v
    BinaryStructure prelie;     // u⋄v = u≻v − v≺u = R(u)·v − v·S(u)
    BinaryStructure assoc;      // u∗v = u≺v + u≻v
};

// Refuses non-Rota-Baxter input (PreconditionError with witness).
InducedStructures induce_structures(const Algebra& alg, const Bimodule& mod,
                                    const RBSPair& pair);

struct ModelTriple {
    const Algebra& alg;
    const Bimodule& mod;
    const RBSPair& pair;
};

// Morphism of generalized Rota-Baxter systems: algebra maps φ, ϕ and a
// linear map ψ with R'ψ = φR, S'ψ = ϕS, ψ(a·u) = φ(a)·ψ(u),
// ψ(u·a) = ψ(u)·ϕ(a). Throws InputError when φ or ϕ is not an algebra map.
bool morphism_check(const ModelTriple& src, const ModelTriple& dst, const Matrix& phi,
                    const Matrix& varphi, const Matrix& psi);

bool is_algebra_map(const Algebra& src, const Algebra& dst, const Matrix& phi);

struct GaugeResult {
    std::optional<RBSPair> pair;
    std::string reason; // "inadmissible" when id + B∘(R,S) is singular
};

// Gauge transformation by a Hochschild 1-cocycle B : A ⊕ A -> M (matrix of
// shape dim M × 2 dim A). Throws PreconditionError when B is not a cocycle.
GaugeResult gauge_transform(const Algebra& alg, const Bimodule& mod, const RBSPair& pair,
                            const Matrix& B);

bool is_one_cocycle(const Algebra& alg, const Bimodule& mod, const Matrix& B);

struct ReduceResult {
    Algebra quotient;                // B/(E∩B) on a chosen complement basis
    std::vector<Vec> quotient_basis; // representatives inside A
    Bimodule annihilator_module;     // (E∩B)⁰_N as a quotient-algebra bimodule
    std::vector<Vec> annihilator_basis; // inside M
    RBSPair reduced_pair;
};

// Marsden-Ratiu style reduction. Subspaces are given by spanning rows.
// Every hypothesis (subalgebra, quotient well-defined, sub-bimodule,
// image conditions) is checked; failures name the hypothesis.
ReduceResult reduce(const Algebra& alg, const Bimodule& mod, const RBSPair& pair,
                    const std::vector<Vec>& b_sub, const std::vector<Vec>& e_sub,
                    const std::vector<Vec>& n_sub);

enum class AveragingSide { Left, Right, Both };

struct AveragingReport {
    // Defects of R(u)R(v) = R(R(u)·v), S(u)S(v) = S(R(u)·v) (left) and
    // R(u)R(v) = R(u·S(v)), S(u)S(v) = S(u·S(v)) (right).
    std::map<std::string, MultiTensor> defects;
    bool left_pass = true;
    bool right_pass = true;
    bool pass(AveragingSide side) const;
};

AveragingReport averaging_defect(const Algebra& alg, const Bimodule& mod, const RBSPair& pair,
                                 AveragingSide side = AveragingSide::Both);

} // namespace rbsys
