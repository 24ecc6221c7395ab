#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbsys/algebra.hpp"

namespace rbsys {

enum class StructureKind { Associative, Dendriform, PreLie, Dialgebra, Quadri };

std::string to_string(StructureKind k);
StructureKind structure_kind_from_string(const std::string& s);
// Primary table names for a kind ("mul"; "prec","succ"; "diamond";
// "dashv","vdash"; "nw","ne","sw","se").
const std::vector<std::string>& table_names(StructureKind k);

// A vector space with a kind-dependent family of binary operations.
struct BinaryStructure {
    StructureKind kind = StructureKind::Associative;
    size_t dim = 0;
    std::map<std::string, Bilinear> tables;

    const Bilinear& table(const std::string& name) const;
    // Derived operation as a formal sum of primaries ("star", "sqsubset",
    // "sqsupset", "wedge", "vee"), always recomputed, never stored.
    Bilinear derived(const std::string& name) const;
};

BinaryStructure make_structure(StructureKind kind, size_t dim);

struct AxiomFailure {
    std::string identity;
    size_t i = 0, j = 0, k = 0;
    Vec lhs, rhs;
};

struct AxiomReport {
    bool pass = true;
    std::optional<AxiomFailure> failing_identity;
    size_t identities_checked = 0;
};

// Full enumeration of every defining identity of the structure's kind
// over basis triples.
AxiomReport axiom_check(const BinaryStructure& s);

// ---- Rota-Baxter systems on dendriform algebras and quadri-algebras ----

struct RBSPair; // defined in rbs.hpp

struct DendriformRBSReport {
    // Defects of the four identities R(a)∘R(b) = R(R(a)∘b + a∘S(b)),
    // S(a)∘S(b) = S(R(a)∘b + a∘S(b)) for ∘ in {≺, ≻}.
    std::map<std::string, MultiTensor> defects;
    bool is_rbs = true;
};

DendriformRBSReport rbs_on_dendriform_defect(const BinaryStructure& dend, const Matrix& R,
                                             const Matrix& S);

// a↖b = a≺S(b), a↗b = a≻S(b), a↙b = R(a)≺b, a↘b = R(a)≻b.
BinaryStructure quadri_from_rbs_on_dendriform(const BinaryStructure& dend, const Matrix& R,
                                              const Matrix& S);

struct CommutingQuadriResult {
    bool commute = false;
    std::optional<BinaryStructure> quadri;
};

// For two commuting Rota-Baxter systems (P,Q), (R,S) on an algebra:
// a↖b = aQS(b), a↗b = P(a)S(b), a↙b = R(a)Q(b), a↘b = PR(a)b.
CommutingQuadriResult commuting_rbs_quadri(const Algebra& alg, const RBSPair& pq,
                                           const RBSPair& rs);

// Extract the two dendriform halves (⊏,⊐) and (∧,∨) of a quadri-algebra.
BinaryStructure quadri_horizontal_dendriform(const BinaryStructure& q);
BinaryStructure quadri_vertical_dendriform(const BinaryStructure& q);

// u⊣v = u·S(v), u⊢v = R(u)·v for a two-sided averaging system.
BinaryStructure dialgebra_from_averaging(const Algebra& alg, const Bimodule& mod,
                                         const RBSPair& pair);

} // namespace rbsys
