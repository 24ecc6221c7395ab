#include "rbsys/deformation.hpp"

#include "rbsys/errors.hpp"

namespace rbsys {

namespace {

void check_series(const DeformationSeries& ds, const Algebra& alg, const Bimodule& mod) {
    auto shape = [&](const RBSPair& p) {
        return p.R.rows() == alg.dim && p.R.cols() == mod.dim && p.S.rows() == alg.dim &&
               p.S.cols() == mod.dim;
    };
    if (!shape(ds.base)) throw InputError("deformation base has wrong shape");
    for (const auto& t : ds.terms)
        if (!shape(t)) throw InputError("deformation term has wrong shape");
}

} // namespace

std::vector<OrderDefect> deformation_defects(const DeformationSeries& ds, const Algebra& alg,
                                             const Bimodule& mod) {
    check_series(ds, alg, mod);
    size_t n_a = alg.dim, m = mod.dim, N = ds.order();
    std::vector<OrderDefect> out;
    for (size_t order = 0; order <= N; ++order) {
        OrderDefect od{order, MultiTensor(2, m, n_a), MultiTensor(2, m, n_a)};
        for (size_t u = 0; u < m; ++u)
            for (size_t v = 0; v < m; ++v) {
                Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
                Vec dR(n_a), dS(n_a);
                for (size_t i = 0; i <= order; ++i) {
                    size_t j = order - i;
                    const RBSPair &pi = ds.at(i), &pj = ds.at(j);
                    Vec inner = vec_add(mod.act_left(pj.R.apply(eu), ev),
                                        mod.act_right(eu, pj.S.apply(ev)));
                    vec_add_scaled(dR, Rational(1), alg.mul(pi.R.apply(eu), pj.R.apply(ev)));
                    vec_add_scaled(dR, Rational(-1), pi.R.apply(inner));
                    vec_add_scaled(dS, Rational(1), alg.mul(pi.S.apply(eu), pj.S.apply(ev)));
                    vec_add_scaled(dS, Rational(-1), pi.S.apply(inner));
                }
                for (size_t k = 0; k < n_a; ++k) {
                    if (!dR[k].is_zero()) od.defect_R.add(k, {u, v}, dR[k]);
                    if (!dS[k].is_zero()) od.defect_S.add(k, {u, v}, dS[k]);
                }
            }

        // Bracket form of the same order: the order-n defect equals
        // −½ pr(Σ_{i+j=n} ⟦(R_i,S_i),(R_j,S_j)⟧); the two routes must agree.
        Cochain sum = make_cochain(2, m, n_a);
        for (size_t i = 0; i <= order; ++i) {
            size_t j = order - i;
            sum.add_scaled(Rational(1),
                           derived_bracket(cochain_from_pair(ds.at(i)),
                                           cochain_from_pair(ds.at(j)), alg, mod));
        }
        MultiTensor expectP = od.defect_R.scaled(Rational(-2));
        MultiTensor expectQ = od.defect_S.scaled(Rational(-2));
        if (!(sum.P == expectP) || !(sum.Q == expectQ))
            throw Error("deformation defect and bracket form disagree at order " +
                        std::to_string(order));
        out.push_back(std::move(od));
    }
    return out;
}

bool is_valid_deformation(const DeformationSeries& ds, const Algebra& alg, const Bimodule& mod) {
    for (const auto& od : deformation_defects(ds, alg, mod))
        if (!od.pass()) return false;
    return true;
}

Cochain obstruction_cocycle(const DeformationSeries& ds, const Algebra& alg,
                            const Bimodule& mod) {
    if (!is_valid_deformation(ds, alg, mod))
        throw PreconditionError("series is not a deformation through its stated order");
    size_t N = ds.order();
    Cochain ob = make_cochain(2, mod.dim, alg.dim);
    for (size_t i = 1; i + 1 <= N + 1; ++i) {
        size_t j = N + 1 - i;
        if (j < 1 || j > N) continue;
        ob.add_scaled(Rational(-1, 2),
                      derived_bracket(cochain_from_pair(ds.at(i)), cochain_from_pair(ds.at(j)),
                                      alg, mod));
    }
    Cochain dob = rbs_differential(ds.base, ob, alg, mod);
    if (!dob.is_zero()) throw Error("obstruction failed its cocycle check");
    return ob;
}

std::optional<RBSPair> extend_step(const DeformationSeries& ds, const Algebra& alg,
                                   const Bimodule& mod) {
    Cochain ob = obstruction_cocycle(ds, alg, mod);
    // d(R_{N+1}, S_{N+1}) = Ob, an exact linear system over arity-1 cochains.
    Matrix D = differential_matrix(ds.base, alg, mod, 1);
    // differential_matrix carries δ_Hoch = (−1)^1 d at arity 1.
    Vec rhs = cochain_flatten(ob, mod.dim, alg.dim);
    for (auto& x : rhs) x = -x;
    auto sol = linear_solve_suite(D, rhs);
    if (!sol.particular_solution) return std::nullopt;
    Cochain x = cochain_unflatten(*sol.particular_solution, 1, mod.dim, alg.dim);
    RBSPair next{Matrix(alg.dim, mod.dim), Matrix(alg.dim, mod.dim)};
    for (const auto& [k, v] : x.P.coefficients()) next.R.at(k[0], k[1]) = v;
    for (const auto& [k, v] : x.Q.coefficients()) next.S.at(k[0], k[1]) = v;
    return next;
}

bool equivalence_first_order_check(const DeformationSeries& ds, const DeformationSeries& ds2,
                                   const Vec& a, const Vec& b, const Algebra& alg,
                                   const Bimodule& mod) {
    check_series(ds, alg, mod);
    check_series(ds2, alg, mod);
    if (!(ds.base.R == ds2.base.R) || !(ds.base.S == ds2.base.S))
        throw InputError("equivalence check needs deformations of the same base pair");
    if (ds.order() < 1 || ds2.order() < 1)
        throw InputError("equivalence check needs first-order terms");
    Cochain diff = cochain_from_pair(ds.at(1));
    diff.add_scaled(Rational(-1), cochain_from_pair(ds2.at(1)));
    Cochain delta = hochschild_differential(ds.base, cochain_from_elements(a, b, mod.dim),
                                            alg, mod);
    return diff == delta;
}

} // namespace rbsys
