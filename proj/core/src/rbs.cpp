#include "rbsys/rbs.hpp"

#include "rbsys/errors.hpp"

namespace rbsys {

namespace {

void check_shapes(const Algebra& alg, const Bimodule& mod, const RBSPair& pair) {
    if (mod.alg_dim != alg.dim) throw InputError("bimodule is over a different algebra");
    if (pair.R.rows() != alg.dim || pair.R.cols() != mod.dim || pair.S.rows() != alg.dim ||
        pair.S.cols() != mod.dim)
        throw InputError("operator pair shape does not match (A, M)");
}

std::string pair_witness(const Algebra& alg, const Bimodule& mod, const char* which,
                         size_t u, size_t v, const Rational& val, size_t out) {
    (void)mod;
    return std::string(which) + "[" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
           "] has coefficient " + val.str() + " on " + alg.basis[out];
}

} // namespace

GrbsReport grbs_defect(const Algebra& alg, const Bimodule& mod, const RBSPair& pair) {
    check_shapes(alg, mod, pair);
    size_t n = alg.dim, m = mod.dim;
    GrbsReport rep{MultiTensor(2, m, n), MultiTensor(2, m, n), true, ""};
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
            Vec ru = pair.R.apply(eu), sv = pair.S.apply(ev);
            // R(u)·v + u·S(v)
            Vec inner = vec_add(mod.act_left(ru, ev), mod.act_right(eu, sv));
            Vec dR = vec_sub(alg.mul(ru, pair.R.apply(ev)), pair.R.apply(inner));
            Vec dS = vec_sub(alg.mul(pair.S.apply(eu), sv), pair.S.apply(inner));
            for (size_t k = 0; k < n; ++k) {
                if (!dR[k].is_zero()) {
                    rep.defect_R.add(k, {u, v}, dR[k]);
                    if (rep.is_rbs) rep.witness = pair_witness(alg, mod, "defect_R", u, v, dR[k], k);
                    rep.is_rbs = false;
                }
                if (!dS[k].is_zero()) {
                    rep.defect_S.add(k, {u, v}, dS[k]);
                    if (rep.is_rbs) rep.witness = pair_witness(alg, mod, "defect_S", u, v, dS[k], k);
                    rep.is_rbs = false;
                }
            }
        }
    return rep;
}

Bilinear star_product(const Algebra& alg, const Bimodule& mod, const RBSPair& pair) {
    check_shapes(alg, mod, pair);
    size_t m = mod.dim;
    Bilinear star(m, m, m);
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
            Vec prod = vec_add(mod.act_left(pair.R.apply(eu), ev),
                               mod.act_right(eu, pair.S.apply(ev)));
            for (size_t k = 0; k < m; ++k)
                if (!prod[k].is_zero()) star.add(u, v, k, prod[k]);
        }
    return star;
}

bool graph_subalgebra_check(const Algebra& alg, const Bimodule& mod, const RBSPair& pair) {
    check_shapes(alg, mod, pair);
    Algebra tri = semidirect_triple(alg, mod);
    size_t n = alg.dim, m = mod.dim;
    std::vector<Vec> graph;
    for (size_t u = 0; u < m; ++u) {
        Vec g(2 * n + m);
        Vec ru = pair.R.apply(basis_vec(m, u)), su = pair.S.apply(basis_vec(m, u));
        for (size_t i = 0; i < n; ++i) {
            g[i] = ru[i];
            g[n + i] = su[i];
        }
        g[2 * n + u] = Rational(1);
        graph.push_back(std::move(g));
    }
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            Vec prod = tri.mul(graph[u], graph[v]);
            if (!in_span(graph, prod)) return false;
        }
    return true;
}

bool nijenhuis_lift_check(const Algebra& alg, const Bimodule& mod, const RBSPair& pair) {
    check_shapes(alg, mod, pair);
    Algebra tri = semidirect_triple(alg, mod);
    size_t n = alg.dim, m = mod.dim, dim = 2 * n + m;
    // N(a1,a2,u) = (Ru, Su, 0)
    Matrix N(dim, dim);
    for (size_t u = 0; u < m; ++u) {
        Vec ru = pair.R.apply(basis_vec(m, u)), su = pair.S.apply(basis_vec(m, u));
        for (size_t i = 0; i < n; ++i) {
            N.at(i, 2 * n + u) = ru[i];
            N.at(n + i, 2 * n + u) = su[i];
        }
    }
    for (size_t x = 0; x < dim; ++x)
        for (size_t y = 0; y < dim; ++y) {
            Vec ex = basis_vec(dim, x), ey = basis_vec(dim, y);
            Vec nx = N.apply(ex), ny = N.apply(ey);
            Vec lhs = tri.mul(nx, ny);
            Vec inner = vec_add(tri.mul(nx, ey), tri.mul(ex, ny));
            vec_add_scaled(inner, Rational(-1), N.apply(tri.mul(ex, ey)));
            if (lhs != N.apply(inner)) return false;
        }
    return true;
}

bool cocycle_system_check(const Algebra& alg, const Bimodule& mod, const CocycleSystemPair& p) {
    if (alg.dim != mod.dim)
        throw InputError("the 1-cocycle-system characterization needs dim A = dim M");
    if (p.theta0.rows() != mod.dim || p.theta0.cols() != alg.dim || p.theta1.rows() != mod.dim ||
        p.theta1.cols() != alg.dim)
        throw InputError("cocycle system maps must go from A to M");
    auto inv0 = try_inverse(p.theta0);
    auto inv1 = try_inverse(p.theta1);
    if (!inv0 || !inv1)
        throw InputError("cocycle system maps must be invertible; the characterization "
                         "does not apply");
    Matrix t1inv_t0 = inv1->mul(p.theta0); // A -> A
    Matrix t0inv_t1 = inv0->mul(p.theta1);
    size_t n = alg.dim;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            Vec ex = basis_vec(n, x), ey = basis_vec(n, y);
            Vec xy = alg.mul_basis(x, y);
            Vec lhs0 = p.theta0.apply(xy);
            Vec rhs0 = vec_add(mod.act_left(ex, p.theta0.apply(ey)),
                               mod.act_right(p.theta0.apply(ex), t1inv_t0.apply(ey)));
            if (lhs0 != rhs0) return false;
            Vec lhs1 = p.theta1.apply(xy);
            Vec rhs1 = vec_add(mod.act_left(t0inv_t1.apply(ex), p.theta1.apply(ey)),
                               mod.act_right(p.theta1.apply(ex), ey));
            if (lhs1 != rhs1) return false;
        }
    return true;
}

CocycleSystemPair inverse_correspondence(const Algebra& alg, const Bimodule& mod,
                                         const RBSPair& pair) {
    check_shapes(alg, mod, pair);
    if (alg.dim != mod.dim)
        throw InputError("the 1-cocycle-system characterization needs dim A = dim M");
    auto rinv = try_inverse(pair.R);
    auto sinv = try_inverse(pair.S);
    if (!rinv || !sinv)
        throw InputError("pair is not invertible; the characterization does not apply");
    return CocycleSystemPair{*rinv, *sinv};
}

RBSPair rbs_from_cocycle_system(const Algebra& alg, const Bimodule& mod,
                                const CocycleSystemPair& p) {
    if (alg.dim != mod.dim)
        throw InputError("the 1-cocycle-system characterization needs dim A = dim M");
    auto inv0 = try_inverse(p.theta0);
    auto inv1 = try_inverse(p.theta1);
    if (!inv0 || !inv1)
        throw InputError("cocycle system maps must be invertible; the characterization "
                         "does not apply");
    return RBSPair{*inv0, *inv1};
}

InducedStructures induce_structures(const Algebra& alg, const Bimodule& mod,
                                    const RBSPair& pair) {
    auto rep = grbs_defect(alg, mod, pair);
    if (!rep.is_rbs)
        throw PreconditionError("pair is not a generalized Rota-Baxter system: " + rep.witness);
    size_t m = mod.dim;
    InducedStructures out{make_structure(StructureKind::Dendriform, m),
                          make_structure(StructureKind::PreLie, m),
                          make_structure(StructureKind::Associative, m)};
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
            Vec prec = mod.act_right(eu, pair.S.apply(ev));
            Vec succ = mod.act_left(pair.R.apply(eu), ev);
            // u ⋄ v = u≻v − v≺u; the variant u≻v − u≺v fails the left
            // pre-Lie identity already on the truncated q-integration model.
            Vec prec_vu = mod.act_right(ev, pair.S.apply(eu));
            for (size_t k = 0; k < m; ++k) {
                if (!prec[k].is_zero()) out.dendriform.tables["prec"].add(u, v, k, prec[k]);
                if (!succ[k].is_zero()) out.dendriform.tables["succ"].add(u, v, k, succ[k]);
                Rational dia = succ[k] - prec_vu[k];
                if (!dia.is_zero()) out.prelie.tables["diamond"].add(u, v, k, dia);
                Rational st = succ[k] + prec[k];
                if (!st.is_zero()) out.assoc.tables["mul"].add(u, v, k, st);
            }
        }
    return out;
}

bool is_algebra_map(const Algebra& src, const Algebra& dst, const Matrix& phi) {
    if (phi.rows() != dst.dim || phi.cols() != src.dim)
        throw InputError("algebra map has wrong shape");
    for (size_t i = 0; i < src.dim; ++i)
        for (size_t j = 0; j < src.dim; ++j) {
            Vec lhs = phi.apply(src.mul_basis(i, j));
            Vec rhs = dst.mul(phi.apply(basis_vec(src.dim, i)), phi.apply(basis_vec(src.dim, j)));
            if (lhs != rhs) return false;
        }
    return true;
}

bool morphism_check(const ModelTriple& src, const ModelTriple& dst, const Matrix& phi,
                    const Matrix& varphi, const Matrix& psi) {
    if (!is_algebra_map(src.alg, dst.alg, phi))
        throw InputError("phi is not an algebra map");
    if (!is_algebra_map(src.alg, dst.alg, varphi))
        throw InputError("varphi is not an algebra map");
    if (psi.rows() != dst.mod.dim || psi.cols() != src.mod.dim)
        throw InputError("psi has wrong shape");

    if (!(dst.pair.R.mul(psi) == phi.mul(src.pair.R))) return false;
    if (!(dst.pair.S.mul(psi) == varphi.mul(src.pair.S))) return false;
    size_t n = src.alg.dim, m = src.mod.dim;
    for (size_t a = 0; a < n; ++a)
        for (size_t u = 0; u < m; ++u) {
            Vec ea = basis_vec(n, a), eu = basis_vec(m, u);
            if (psi.apply(src.mod.act_left(ea, eu)) !=
                dst.mod.act_left(phi.apply(ea), psi.apply(eu)))
                return false;
            if (psi.apply(src.mod.act_right(eu, ea)) !=
                dst.mod.act_right(psi.apply(eu), varphi.apply(ea)))
                return false;
        }
    return true;
}

bool is_one_cocycle(const Algebra& alg, const Bimodule& mod, const Matrix& B) {
    size_t n = alg.dim, m = mod.dim;
    if (B.rows() != m || B.cols() != 2 * n) throw InputError("B must map A ⊕ A to M");
    // On A ⊕ A, M carries (a1,a2)·u = a1·u and u·(a1,a2) = u·a2; the cocycle
    // condition reads a1·B(b1,b2) − B(a1 b1, a2 b2) + B(a1,a2)·b2 = 0.
    auto apply_B = [&](const Vec& a1, const Vec& a2) {
        Vec x(2 * n);
        for (size_t i = 0; i < n; ++i) {
            x[i] = a1[i];
            x[n + i] = a2[i];
        }
        return B.apply(x);
    };
    for (size_t p = 0; p < 2 * n; ++p)
        for (size_t q = 0; q < 2 * n; ++q) {
            Vec a1 = p < n ? basis_vec(n, p) : zero_vec(n);
            Vec a2 = p < n ? zero_vec(n) : basis_vec(n, p - n);
            Vec b1 = q < n ? basis_vec(n, q) : zero_vec(n);
            Vec b2 = q < n ? zero_vec(n) : basis_vec(n, q - n);
            Vec lhs = mod.act_left(a1, apply_B(b1, b2));
            vec_add_scaled(lhs, Rational(-1), apply_B(alg.mul(a1, b1), alg.mul(a2, b2)));
            vec_add_scaled(lhs, Rational(1), mod.act_right(apply_B(a1, a2), b2));
            if (!is_zero_vec(lhs)) return false;
        }
    return true;
}

GaugeResult gauge_transform(const Algebra& alg, const Bimodule& mod, const RBSPair& pair,
                            const Matrix& B) {
    check_shapes(alg, mod, pair);
    if (!is_one_cocycle(alg, mod, B))
        throw PreconditionError("B is not a Hochschild 1-cocycle of A ⊕ A with values in M");
    size_t n = alg.dim, m = mod.dim;
    // id + B∘(R,S), with (R,S) stacked M -> A ⊕ A.
    Matrix stacked(2 * n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t u = 0; u < m; ++u) {
            stacked.at(i, u) = pair.R.at(i, u);
            stacked.at(n + i, u) = pair.S.at(i, u);
        }
    Matrix T = Matrix::identity(m).add(B.mul(stacked));
    auto Tinv = try_inverse(T);
    if (!Tinv) return GaugeResult{std::nullopt, "inadmissible"};
    return GaugeResult{RBSPair{pair.R.mul(*Tinv), pair.S.mul(*Tinv)}, ""};
}

ReduceResult reduce(const Algebra& alg, const Bimodule& mod, const RBSPair& pair,
                    const std::vector<Vec>& b_sub, const std::vector<Vec>& e_sub,
                    const std::vector<Vec>& n_sub) {
    check_shapes(alg, mod, pair);
    size_t n = alg.dim, m = mod.dim;
    for (const auto& v : b_sub)
        if (v.size() != n) throw InputError("B basis vector has wrong dimension");
    for (const auto& v : e_sub)
        if (v.size() != n) throw InputError("E basis vector has wrong dimension");
    for (const auto& v : n_sub)
        if (v.size() != m) throw InputError("N basis vector has wrong dimension");

    std::vector<Vec> B = independent_subset(b_sub);
    std::vector<Vec> E = independent_subset(e_sub);
    std::vector<Vec> N = independent_subset(n_sub);

    // 1. B is a subalgebra.
    for (const auto& x : B)
        for (const auto& y : B)
            if (!in_span(B, alg.mul(x, y)))
                throw PreconditionError("reduction hypothesis failed: B is not a subalgebra");

    // 2. N is a B-sub-bimodule.
    for (const auto& x : B)
        for (const auto& u : N) {
            if (!in_span(N, mod.act_left(x, u)) || !in_span(N, mod.act_right(u, x)))
                throw PreconditionError("reduction hypothesis failed: N is not a B-sub-bimodule");
        }

    // 3. E ∩ B, then a complement of it inside B as quotient representatives.
    std::vector<Vec> EB = B.empty() || E.empty() ? std::vector<Vec>{} : intersect_spans(E, B, n);
    std::vector<Vec> reps; // basis of B extending EB, complement part
    {
        std::vector<Vec> span = EB;
        for (const auto& b : B)
            if (!in_span(span, b)) {
                span.push_back(b);
                reps.push_back(b);
            }
    }

    // 4. B/(E∩B) must be an algebra with an algebra-map projection, i.e. the
    // product of representatives must be well defined mod E∩B: E∩B absorbs
    // products with B on both sides.
    for (const auto& x : EB)
        for (const auto& y : B) {
            if (!in_span(EB, alg.mul(x, y)) || !in_span(EB, alg.mul(y, x)))
                throw PreconditionError("reduction hypothesis failed: B/(E∩B) is not an "
                                        "algebra (E∩B is not an ideal of B)");
        }

    size_t qdim = reps.size();
    std::vector<Vec> full = EB;
    for (const auto& r : reps) full.push_back(r);
    // coordinates of v ∈ span(B) in [EB | reps]; quotient class keeps the tail.
    auto project = [&](const Vec& v) {
        auto coords = coordinates_in(full, v);
        if (!coords) throw PreconditionError("internal: product escaped span(B)");
        Vec q(qdim);
        for (size_t t = 0; t < qdim; ++t) q[t] = (*coords)[EB.size() + t];
        return q;
    };

    std::vector<std::string> qnames;
    for (size_t t = 0; t < qdim; ++t) qnames.push_back("q" + std::to_string(t + 1));
    Algebra quotient = make_algebra(qdim, qnames);
    for (size_t i = 0; i < qdim; ++i)
        for (size_t j = 0; j < qdim; ++j) {
            Vec prod = project(alg.mul(reps[i], reps[j]));
            for (size_t k = 0; k < qdim; ++k)
                if (!prod[k].is_zero()) quotient.mult.add(i, j, k, prod[k]);
        }
    auto qval = validate_model(quotient);
    if (!qval.associative)
        throw PreconditionError("reduction hypothesis failed: quotient product is not "
                                "associative");

    // 5. Annihilator (E∩B)⁰_N = {u ∈ N : a·u = u·a = 0 for all a ∈ E∩B}.
    std::vector<Vec> ann;
    if (EB.empty()) {
        ann = N;
    } else {
        // Solve inside coordinates of N.
        size_t rows = 2 * EB.size() * m, cc = N.size();
        Matrix sys(rows, cc);
        for (size_t a = 0; a < EB.size(); ++a)
            for (size_t t = 0; t < cc; ++t) {
                Vec lu = mod.act_left(EB[a], N[t]);
                Vec ru = mod.act_right(N[t], EB[a]);
                for (size_t r = 0; r < m; ++r) {
                    sys.at(2 * a * m + r, t) = lu[r];
                    sys.at((2 * a + 1) * m + r, t) = ru[r];
                }
            }
        auto sol = linear_solve_suite(sys);
        for (const auto& kv : sol.kernel_basis) {
            Vec u(m);
            for (size_t t = 0; t < cc; ++t) vec_add_scaled(u, kv[t], N[t]);
            ann.push_back(std::move(u));
        }
        ann = independent_subset(ann);
    }

    // 6. Image conditions R(ann) ⊂ B and S(ann) ⊂ B.
    for (const auto& u : ann) {
        if (!in_span(B, pair.R.apply(u)))
            throw PreconditionError("reduction hypothesis failed: R((E∩B)⁰_N) is not "
                                    "contained in B");
        if (!in_span(B, pair.S.apply(u)))
            throw PreconditionError("reduction hypothesis failed: S((E∩B)⁰_N) is not "
                                    "contained in B");
    }

    // 7. Assemble the reduced bimodule and pair on the annihilator.
    size_t adim = ann.size();
    auto ann_coords = [&](const Vec& v) {
        auto c = coordinates_in(ann, v);
        if (!c)
            throw PreconditionError("reduction hypothesis failed: the quotient action does "
                                    "not preserve the annihilator");
        return *c;
    };
    Bimodule annmod;
    annmod.dim = adim;
    annmod.alg_dim = qdim;
    annmod.left = Bilinear(qdim, adim, adim);
    annmod.right = Bilinear(adim, qdim, adim);
    for (size_t i = 0; i < qdim; ++i)
        for (size_t t = 0; t < adim; ++t) {
            Vec lu = ann_coords(mod.act_left(reps[i], ann[t]));
            Vec ru = ann_coords(mod.act_right(ann[t], reps[i]));
            for (size_t k = 0; k < adim; ++k) {
                if (!lu[k].is_zero()) annmod.left.add(i, t, k, lu[k]);
                if (!ru[k].is_zero()) annmod.right.add(t, i, k, ru[k]);
            }
        }

    RBSPair reduced;
    reduced.R = Matrix(qdim, adim);
    reduced.S = Matrix(qdim, adim);
    for (size_t t = 0; t < adim; ++t) {
        Vec rq = project(pair.R.apply(ann[t]));
        Vec sq = project(pair.S.apply(ann[t]));
        for (size_t k = 0; k < qdim; ++k) {
            reduced.R.at(k, t) = rq[k];
            reduced.S.at(k, t) = sq[k];
        }
    }

    return ReduceResult{std::move(quotient), reps, std::move(annmod), ann, std::move(reduced)};
}

bool AveragingReport::pass(AveragingSide side) const {
    switch (side) {
    case AveragingSide::Left: return left_pass;
    case AveragingSide::Right: return right_pass;
    case AveragingSide::Both: return left_pass && right_pass;
    }
    return false;
}

AveragingReport averaging_defect(const Algebra& alg, const Bimodule& mod, const RBSPair& pair,
                                 AveragingSide side) {
    check_shapes(alg, mod, pair);
    size_t n = alg.dim, m = mod.dim;
    AveragingReport rep;
    auto make = [&]() { return MultiTensor(2, m, n); };
    bool want_left = side != AveragingSide::Right;
    bool want_right = side != AveragingSide::Left;
    if (want_left) {
        rep.defects.emplace("left_R", make());
        rep.defects.emplace("left_S", make());
    }
    if (want_right) {
        rep.defects.emplace("right_R", make());
        rep.defects.emplace("right_S", make());
    }
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
            Vec ru = pair.R.apply(eu), rv = pair.R.apply(ev);
            Vec su = pair.S.apply(eu), sv = pair.S.apply(ev);
            auto put = [&](const char* name, Vec diff) {
                auto& t = rep.defects.at(name);
                for (size_t k = 0; k < n; ++k)
                    if (!diff[k].is_zero()) t.add(k, {u, v}, diff[k]);
            };
            if (want_left) {
                Vec inner = mod.act_left(ru, ev);
                put("left_R", vec_sub(alg.mul(ru, rv), pair.R.apply(inner)));
                put("left_S", vec_sub(alg.mul(su, sv), pair.S.apply(inner)));
            }
            if (want_right) {
                Vec inner = mod.act_right(eu, sv);
                put("right_R", vec_sub(alg.mul(ru, rv), pair.R.apply(inner)));
                put("right_S", vec_sub(alg.mul(su, sv), pair.S.apply(inner)));
            }
        }
    if (want_left)
        rep.left_pass = rep.defects.at("left_R").is_zero() && rep.defects.at("left_S").is_zero();
    if (want_right)
        rep.right_pass =
            rep.defects.at("right_R").is_zero() && rep.defects.at("right_S").is_zero();
    return rep;
}

} // namespace rbsys
