#pragma once

#include "rbsys/cohomology.hpp"

namespace rbsys {

// Truncated formal deformation R_t = R + t R_1 + ... + t^N R_N (same for S).
struct DeformationSeries {
    RBSPair base;
    std::vector<RBSPair> terms; // terms[i] is order i+1
    size_t order() const { return terms.size(); }
    const RBSPair& at(size_t i) const { return i == 0 ? base : terms[i - 1]; }
};

struct OrderDefect {
    size_t order = 0;
    MultiTensor defect_R, defect_S;
    bool pass() const { return defect_R.is_zero() && defect_S.is_zero(); }
};

// Order-by-order defects Σ_{i+j=n} [R_i(u)R_j(v) − R_i(R_j(u)·v + u·S_j(v))]
// (and the S analogue); each order is cross-checked against the bracket
// form ⟦(R,S),(R_n,S_n)⟧ + ½ Σ_{i+j=n,i,j≥1} ⟦(R_i,S_i),(R_j,S_j)⟧.
std::vector<OrderDefect> deformation_defects(const DeformationSeries& ds, const Algebra& alg,
                                             const Bimodule& mod);

bool is_valid_deformation(const DeformationSeries& ds, const Algebra& alg, const Bimodule& mod);

// Ob = −½ Σ_{i+j=N+1, i,j≥1} ⟦(R_i,S_i),(R_j,S_j)⟧, an arity-2 cochain;
// verified to be a d_{(R,S)}-cocycle. Refuses invalid deformations.
Cochain obstruction_cocycle(const DeformationSeries& ds, const Algebra& alg,
                            const Bimodule& mod);

// Solves d_{(R,S)}(X) = Ob for an arity-1 cochain X; when solvable the
// returned pair extends the deformation one order further.
std::optional<RBSPair> extend_step(const DeformationSeries& ds, const Algebra& alg,
                                   const Bimodule& mod);

// First-order equivalence: (R_1 − R_1', S_1 − S_1') = δ_Hoch(a, b).
bool equivalence_first_order_check(const DeformationSeries& ds, const DeformationSeries& ds2,
                                   const Vec& a, const Vec& b, const Algebra& alg,
                                   const Bimodule& mod);

} // namespace rbsys
