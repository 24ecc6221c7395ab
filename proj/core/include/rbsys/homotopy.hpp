#pragma once

#include <optional>
#include <string>

#include "rbsys/loday.hpp"
#include "rbsys/rbs.hpp"

namespace rbsys {

// Finitely supported graded vector space; the flattened basis lists the
// degree blocks in declaration order.
struct GradedSpace {
    std::vector<std::pair<int, size_t>> degrees; // (degree, dimension)

    size_t total() const;
    int degree_of(size_t flat) const;
    static GradedSpace concentrated(size_t dim, int degree = 0);
};

enum class HomotopyKind { AInf, AInfBimodule, DendInf, QuadInf };

std::string to_string(HomotopyKind k);

// Key of one operation table: arity k, the C_k index r (Dend_∞), the pair
// (r, s) (Quad_∞), or the module-slot position (bimodule η_k). Unused
// components stay 0.
struct OpKey {
    uint32_t k = 0;
    uint32_t r = 0;
    uint32_t s = 0;
    uint32_t pos = 0;
    auto operator<=>(const OpKey&) const = default;
};

struct HomotopyStructure {
    HomotopyKind kind = HomotopyKind::AInf;
    GradedSpace space;                       // the underlying space (algebra part)
    std::optional<GradedSpace> module_space; // bimodule kind only
    size_t arity_bound = 0;
    std::map<OpKey, MixedTensor> ops;        // absent tables are zero

    const MixedTensor* op(const OpKey& key) const;
    MixedTensor zero_op(const OpKey& key) const; // correctly shaped zero table
};

// Checks deg(output) = Σ deg(inputs) + (k − 2) on every stored coefficient.
std::optional<std::string> homogeneity_violation(const HomotopyStructure& h);

struct HomotopyReport {
    bool pass = true;
    size_t arity_checked = 0;
    std::string witness;
};

// Enumerates the degree-(k−2) coherence identities through arity n_max.
// The arity-n identity involves only operations of arity <= n, so passing
// through n_max is exact for the truncation.
HomotopyReport homotopy_axiom_defect(const HomotopyStructure& h, size_t n_max);

// Degree-0 pair of maps M -> A on the flattened bases.
struct HomotopyRBS {
    Matrix R, S;
};

bool degree_preserving(const GradedSpace& src, const GradedSpace& dst, const Matrix& f);

// μ_k(R u_1, ..., R u_k) = R( Σ_i η_k(R u_1, .., R u_{i-1}, u_i, S u_{i+1}, .., S u_k) )
// and the S analogue, enumerated for k <= k_max.
HomotopyReport homotopy_grbs_defect(const HomotopyStructure& ainf,
                                    const HomotopyStructure& bimod, const HomotopyRBS& pair,
                                    size_t k_max);

// The index-transport table behind the Dend_∞ identities: the block of
// arity `block` sits at position `pos` inside an outer operation of arity
// `outer`; `r` ranges over C_{outer+block-1}. Returns the outer index and
// the formal sum of inner indices (all with coefficient 1).
struct IndexTableEntry {
    size_t r0 = 0;
    std::vector<size_t> inner;
};

IndexTableEntry index_table(size_t outer, size_t block, size_t pos, size_t r);

// μ_{k,[r]}(u_1..u_k) = η_k(R u_1, .., R u_{r-1}, u_r, S u_{r+1}, .., S u_k).
HomotopyStructure dendinf_from_grbs(const HomotopyStructure& ainf,
                                    const HomotopyStructure& bimod, const HomotopyRBS& pair,
                                    size_t k_max);

// μ_k = μ_{k,[1]} + ... + μ_{k,[k]} (also collapses Quad_∞ structures).
HomotopyStructure ainf_collapse(const HomotopyStructure& h);

// Rota-Baxter system on a Dend_∞-algebra, per C_k component.
HomotopyReport rbs_on_dendinf_defect(const HomotopyStructure& dendinf, const HomotopyRBS& pair,
                                     size_t k_max);

// μ_{k,([r],[s])}(a_1..a_k) = μ_{k,[r]}(R a_1, .., R a_{s-1}, a_s, S a_{s+1}, .., S a_k).
HomotopyStructure quadinf_from_rbs(const HomotopyStructure& dendinf, const HomotopyRBS& pair,
                                   size_t k_max);

HomotopyStructure quadinf_project_first(const HomotopyStructure& quadinf);  // Σ over s
HomotopyStructure quadinf_project_second(const HomotopyStructure& quadinf); // Σ over r

// ---- classical structures as degree-0-concentrated homotopy ones ----

HomotopyStructure ainf_from_algebra(const Algebra& alg);
HomotopyStructure bimodule_from_classical(const Algebra& alg, const Bimodule& mod);
HomotopyStructure adjoint_bimodule(const HomotopyStructure& ainf);
HomotopyStructure dendinf_from_dendriform(const BinaryStructure& dend);

// ---- the two-term example M --d--> A ⊕ N ----

// A bimodule over the triple (A, R, S): module maps R_M, S_M subject to
//   R(a)·R_M(u) = R_M(R(a)·u + a·S_M(u)),  S(a)·S_M(u) = S_M(R(a)·u + a·S_M(u)),
//   R_M(u)·R(a) = R_M(R_M(u)·a + u·S(a)),  S_M(u)·S(a) = S_M(R_M(u)·a + u·S(a)).
struct TripleModuleData {
    Bimodule mod;
    Matrix RM, SM;
};

struct TwoTermResult {
    HomotopyStructure ainf;   // degrees 0 (A ⊕ N) and 1 (M), μ_2 the semidirect product
    HomotopyStructure bimod;  // adjoint
    HomotopyRBS pair;         // R̄ = ((R ⊕ R_N), R_M), S̄ likewise
};

// Every violated hypothesis is named in the thrown error.
TwoTermResult two_term_builder(const Algebra& alg, const RBSPair& pairA,
                               const TripleModuleData& m_data, const TripleModuleData& n_data,
                               const Matrix& d);

// Names the first violated bimodule-over-triple identity, if any.
std::optional<std::string> triple_module_violation(const Algebra& alg, const RBSPair& pairA,
                                                   const TripleModuleData& data);

} // namespace rbsys
