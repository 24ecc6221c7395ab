#include "rbsys/commands.hpp"

#include <algorithm>
#include <sstream>

#include "rbsys/cohomology.hpp"
#include "rbsys/deformation.hpp"
#include "rbsys/errors.hpp"

namespace rbsys {

namespace {

constexpr size_t kMaxWitnesses = 4;

std::vector<std::string> tensor_witnesses(const MultiTensor& defect, const std::string& name,
                                          const std::vector<std::string>& in_names,
                                          const std::vector<std::string>& out_names) {
    std::vector<std::string> w;
    for (const auto& [k, v] : defect.coefficients()) {
        if (w.size() >= kMaxWitnesses) break;
        std::ostringstream os;
        os << name << "[";
        for (size_t t = 1; t < k.size(); ++t) os << (t > 1 ? "," : "") << in_names[k[t]];
        os << "] = " << v.str() << " " << out_names[k[0]];
        w.push_back(os.str());
    }
    return w;
}

RBSPair pair_from_doc(const ModelDocument& doc, const Algebra& alg, const Bimodule& mod,
                      const std::string& r_name = "R", const std::string& s_name = "S") {
    Matrix R = model_map(doc, r_name), S = model_map(doc, s_name);
    if (R.rows() != alg.dim || R.cols() != mod.dim || S.rows() != alg.dim ||
        S.cols() != mod.dim)
        throw InputError("maps " + r_name + ", " + s_name + " must have shape dim A × dim M");
    return RBSPair{R, S};
}

bool maurer_cartan_zero(const Algebra& alg, const Bimodule& mod, const RBSPair& pair) {
    Cochain c = cochain_from_pair(pair);
    return derived_bracket(c, c, alg, mod).is_zero();
}

void add_axiom_check(Report& rep, const std::string& name, const BinaryStructure& s,
                     const std::string& statement) {
    auto ax = axiom_check(s);
    std::vector<std::string> w;
    if (ax.failing_identity) {
        const auto& f = *ax.failing_identity;
        std::ostringstream os;
        os << f.identity << " fails on basis triple (" << f.i + 1 << "," << f.j + 1 << ","
           << f.k + 1 << ")";
        w.push_back(os.str());
    }
    rep.add_check(name, ax.pass, statement, std::move(w));
}

void cmd_validate(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    auto v = validate_model(alg, &mod);
    std::vector<std::string> aw, bw;
    for (const auto& f : v.failing_triples) {
        std::ostringstream os;
        os << f.identity << " fails on basis triple (" << f.i << "," << f.j << "," << f.k << ")";
        (f.identity == "associativity" ? aw : bw).push_back(os.str());
        if (aw.size() + bw.size() >= kMaxWitnesses) break;
    }
    rep.add_check("associative", v.associative, "(e_i e_j) e_k = e_i (e_j e_k) on all triples",
                  std::move(aw));
    rep.add_check("bimodule", v.bimodule,
                  "(ab)·u = a·(b·u), (a·u)·b = a·(u·b), (u·a)·b = u·(ab) on all triples",
                  std::move(bw));
}

void cmd_check_rbs(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    auto names = model_module_names(doc, alg);
    auto g = grbs_defect(alg, mod, pair);
    rep.add_check("rbs_identity_R", g.defect_R.is_zero(),
                  "R(u)R(v) = R(R(u)·v + u·S(v)) on all basis pairs",
                  tensor_witnesses(g.defect_R, "defect_R", names, alg.basis));
    rep.add_check("rbs_identity_S", g.defect_S.is_zero(),
                  "S(u)S(v) = S(R(u)·v + u·S(v)) on all basis pairs",
                  tensor_witnesses(g.defect_S, "defect_S", names, alg.basis));
}

void cmd_characterize(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    auto names = model_module_names(doc, alg);
    auto g = grbs_defect(alg, mod, pair);
    bool graph = graph_subalgebra_check(alg, mod, pair);
    bool nij = nijenhuis_lift_check(alg, mod, pair);
    bool mc = maurer_cartan_zero(alg, mod, pair);
    rep.add_check("rota_baxter_identities", g.is_rbs,
                  "the two defining identities of a generalized Rota-Baxter system",
                  tensor_witnesses(g.defect_R, "defect_R", names, alg.basis));
    rep.add_check("graph_subalgebra", graph,
                  "{(Ru, Su, u)} is a subalgebra of the semidirect triple A ⊕ A ⊕ M");
    rep.add_check("nijenhuis_lift", nij,
                  "(a1,a2,u) -> (Ru, Su, 0) is a Nijenhuis operator on A ⊕ A ⊕ M");
    rep.add_check("maurer_cartan", mc,
                  "(R,S) squares to zero under the graded Lie bracket on ⊕ Hom(M^n, A ⊕ A)");
    bool all_equal = (g.is_rbs == graph) && (graph == nij) && (nij == mc);
    rep.add_check("four_way_equal", all_equal,
                  "the four characterizations agree on this instance");
}

void cmd_induce(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    try {
        auto ind = induce_structures(alg, mod, pair);
        rep.add_check("rota_baxter", true, "the pair is a generalized Rota-Baxter system");
        add_axiom_check(rep, "dendriform_axioms", ind.dendriform,
                        "u≺v = u·S(v), u≻v = R(u)·v satisfy the three dendriform identities");
        add_axiom_check(rep, "star_associative", ind.assoc, "u∗v = u≺v + u≻v is associative");
        add_axiom_check(rep, "prelie_axiom", ind.prelie,
                        "u⋄v = u≻v − v≺u satisfies the left pre-Lie identity");
        // R and S are algebra morphisms (M,*) -> A.
        bool morph = true;
        Bilinear star = star_product(alg, mod, pair);
        for (size_t u = 0; u < mod.dim && morph; ++u)
            for (size_t v = 0; v < mod.dim && morph; ++v) {
                Vec uv = star.apply_basis(u, v);
                Vec ru = pair.R.apply(basis_vec(mod.dim, u));
                Vec rv = pair.R.apply(basis_vec(mod.dim, v));
                Vec su = pair.S.apply(basis_vec(mod.dim, u));
                Vec sv = pair.S.apply(basis_vec(mod.dim, v));
                morph = pair.R.apply(uv) == alg.mul(ru, rv) &&
                        pair.S.apply(uv) == alg.mul(su, sv);
            }
        rep.add_check("operators_are_morphisms", morph,
                      "R and S are algebra morphisms from (M,∗) to A");
        for (const auto& [name, table] : ind.dendriform.tables)
            for (const auto& [k, val] : table.coefficients()) {
                auto names = model_module_names(doc, alg);
                rep.add_field("dendriform." + name + "[" + names[k[0]] + "," + names[k[1]] + "]",
                              val.str() + " " + names[k[2]]);
            }
    } catch (const PreconditionError& e) {
        rep.add_check("rota_baxter", false, "the pair is a generalized Rota-Baxter system",
                      {e.what()});
    }
}

void cmd_gauge(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    Matrix B = model_map(doc, "B");
    if (!is_one_cocycle(alg, mod, B)) {
        rep.add_check("cocycle_B", false,
                      "B is a Hochschild 1-cocycle of A ⊕ A with values in M");
        return;
    }
    rep.add_check("cocycle_B", true, "B is a Hochschild 1-cocycle of A ⊕ A with values in M");
    auto g = gauge_transform(alg, mod, pair, B);
    rep.add_field("admissible", g.pair ? "true" : "false");
    if (!g.pair) {
        rep.add_check("admissible", false, "id + B∘(R,S) is invertible", {g.reason});
        return;
    }
    rep.add_check("admissible", true, "id + B∘(R,S) is invertible");
    auto check = grbs_defect(alg, mod, *g.pair);
    rep.add_check("gauge_pair_rbs", check.is_rbs,
                  "the gauge-transformed pair is again a generalized Rota-Baxter system");
}

void cmd_reduce(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    auto rows_of = [&](const std::string& name) {
        Matrix m = model_map(doc, name);
        std::vector<Vec> rows;
        for (size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
        return rows;
    };
    try {
        auto red = reduce(alg, mod, pair, rows_of("Bsub"), rows_of("E"), rows_of("Nsub"));
        rep.add_check("reduction_hypotheses", true,
                      "B subalgebra, B/(E∩B) an algebra, N a sub-bimodule, R/S image conditions");
        rep.add_field("quotient_dim", std::to_string(red.quotient.dim));
        rep.add_field("annihilator_dim", std::to_string(red.annihilator_basis.size()));
        auto g = grbs_defect(red.quotient, red.annihilator_module, red.reduced_pair);
        rep.add_check("reduced_pair_rbs", g.is_rbs,
                      "the reduced pair is a generalized Rota-Baxter system on the quotient");
        // compatibility: the reduced operators act like the originals on the annihilator
        bool compat = true;
        size_t adim = red.annihilator_basis.size();
        for (size_t u = 0; u < adim && compat; ++u)
            for (size_t v = 0; v < adim && compat; ++v) {
                Vec eu = basis_vec(adim, u);
                Vec mv = red.annihilator_basis[v];
                Vec ru_q = red.reduced_pair.R.apply(eu);
                Vec su_q = red.reduced_pair.S.apply(eu);
                Vec ru_a(alg.dim), su_a(alg.dim);
                for (size_t t = 0; t < red.quotient.dim; ++t) {
                    vec_add_scaled(ru_a, ru_q[t], red.quotient_basis[t]);
                    vec_add_scaled(su_a, su_q[t], red.quotient_basis[t]);
                }
                Vec orig_r = pair.R.apply(red.annihilator_basis[u]);
                Vec orig_s = pair.S.apply(red.annihilator_basis[u]);
                compat = mod.act_left(ru_a, mv) == mod.act_left(orig_r, mv) &&
                         mod.act_right(mv, ru_a) == mod.act_right(mv, orig_r) &&
                         mod.act_left(su_a, mv) == mod.act_left(orig_s, mv) &&
                         mod.act_right(mv, su_a) == mod.act_right(mv, orig_s);
            }
        rep.add_check("reduction_compatibility", compat,
                      "representatives of the reduced operators act like R and S on the "
                      "annihilator");
    } catch (const PreconditionError& e) {
        rep.add_check("reduction_hypotheses", false,
                      "B subalgebra, B/(E∩B) an algebra, N a sub-bimodule, R/S image conditions",
                      {e.what()});
    }
}

void cmd_cohomology(Report& rep, const ModelDocument& doc, const CommandOptions& opts) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    try {
        rep.cohomology_dims = cohomology_dimensions(pair, alg, mod, opts.max_degree);
        rep.has_dims = true;
        rep.add_check("cohomology_computed", true,
                      "exact ranks of the Rota-Baxter-system differential");
    } catch (const PreconditionError& e) {
        rep.add_check("cohomology_computed", false,
                      "exact ranks of the Rota-Baxter-system differential", {e.what()});
    }
}

void cmd_deform(Report& rep, const ModelDocument& doc, const CommandOptions& opts) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    DeformationSeries ds;
    ds.base = pair_from_doc(doc, alg, mod);
    size_t order = opts.order ? std::min(opts.order, doc.series.size()) : doc.series.size();
    for (size_t t = 0; t < order; ++t) {
        RBSPair term{model_map(doc, doc.series[t].first), model_map(doc, doc.series[t].second)};
        ds.terms.push_back(std::move(term));
    }
    auto names = model_module_names(doc, alg);
    auto defects = deformation_defects(ds, alg, mod);
    bool valid = true;
    for (const auto& od : defects) {
        rep.add_check("order_" + std::to_string(od.order), od.pass(),
                      "the order-" + std::to_string(od.order) + " deformation equation",
                      tensor_witnesses(od.defect_R, "defect_R", names, alg.basis));
        valid = valid && od.pass();
    }
    if (!valid) return;
    Cochain ob = obstruction_cocycle(ds, alg, mod);
    Cochain dob = rbs_differential(ds.base, ob, alg, mod);
    rep.add_check("obstruction_cocycle", dob.is_zero(),
                  "the obstruction is a 2-cocycle of the Rota-Baxter-system differential");
    auto ext = extend_step(ds, alg, mod);
    rep.add_field("extensible", ext ? "true" : "false");
    if (ext) {
        DeformationSeries extended = ds;
        extended.terms.push_back(*ext);
        rep.add_check("extension_roundtrip", is_valid_deformation(extended, alg, mod),
                      "the extended series solves the deformation equations one order higher");
    }
}

void cmd_aybp(Report& rep, const ModelDocument& doc, const CommandOptions& opts) {
    Algebra alg = model_algebra(doc);
    Tensor2 r = model_tensor2(doc, "r", alg.dim);
    Tensor2 s = model_tensor2(doc, "s", alg.dim);
    AybpMode mode = AybpMode::Aybp;
    if (opts.mode == "frobenius" || opts.mode == "frobenius_separability")
        mode = AybpMode::FrobeniusSeparability;
    else if (!opts.mode.empty() && opts.mode != "aybp")
        throw InputError("aybp mode must be 'aybp' or 'frobenius'");
    auto rep_t = aybp_defect(r, s, alg, mode);
    for (const auto& [name, t] : rep_t.defects) {
        std::vector<std::string> w;
        if (!t.is_zero()) {
            for (size_t i = 0; i < alg.dim && w.size() < kMaxWitnesses; ++i)
                for (size_t j = 0; j < alg.dim && w.size() < kMaxWitnesses; ++j)
                    for (size_t k = 0; k < alg.dim && w.size() < kMaxWitnesses; ++k)
                        if (!t.at(i, j, k).is_zero())
                            w.push_back(name + "[" + alg.basis[i] + "," + alg.basis[j] + "," +
                                        alg.basis[k] + "] = " + t.at(i, j, k).str());
        }
        rep.add_check(name, t.is_zero(), "tensor identity component", std::move(w));
    }
    if (mode == AybpMode::Aybp && rep_t.pass) {
        RBSPair pair = rbs_from_tensors(r, s, alg, TensorRbsFlavor::RotaBaxterSystem);
        Bimodule adj = canonical_bimodule(alg, CanonicalBimodule::Adjoint);
        rep.add_check("induced_pair_rbs", grbs_defect(alg, adj, pair).is_rbs,
                      "R(a) = r_(1) a r_(2), S(a) = s_(1) a s_(2) form a Rota-Baxter system");
    }
}

void cmd_covariant(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    CovariantBialgebra cb{alg, model_comap(doc, "Delta", alg.dim),
                          model_comap(doc, "delta1", alg.dim),
                          model_comap(doc, "delta2", alg.dim)};
    auto c = covariant_bialgebra_check(cb);
    std::vector<std::string> w;
    if (!c.witness.empty()) w.push_back(c.witness);
    rep.add_check("derivations", c.derivation1 && c.derivation2,
                  "delta1 and delta2 are derivations valued in A ⊗ A", w);
    rep.add_check("covariance", c.covariance,
                  "Δ(ab) = a·δ1(b) + Δ(a)·b = a·Δ(b) + δ2(a)·b");
    rep.add_check("coassociative", c.coassociative, "(id ⊗ Δ)Δ = (Δ ⊗ id)Δ");
    rep.add_field("compatible", c.compatible ? "true" : "false");
}

void cmd_perturb(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    CovariantBialgebra cb{alg, model_comap(doc, "Delta", alg.dim),
                          model_comap(doc, "delta1", alg.dim),
                          model_comap(doc, "delta2", alg.dim)};
    Tensor2 r = model_tensor2(doc, "r", alg.dim);
    Tensor2 s = model_tensor2(doc, "s", alg.dim);
    try {
        auto p = perturbation_check(cb, r, s);
        rep.add_field("condition_holds", p.condition_holds ? "true" : "false");
        rep.add_field("perturbed_is_covariant", p.direct_check ? "true" : "false");
        rep.add_check("perturbation_iff", p.agree,
                      "the perturbed tuple is a covariant bialgebra exactly when the "
                      "closed-form condition holds");
    } catch (const PreconditionError& e) {
        rep.add_check("covariant_input", false, "the unperturbed tuple is a covariant bialgebra",
                      {e.what()});
    }
}

void cmd_averaging(Report& rep, const ModelDocument& doc, const CommandOptions& opts) {
    Algebra alg = model_algebra(doc);
    Bimodule mod = model_bimodule(doc, alg);
    RBSPair pair = pair_from_doc(doc, alg, mod);
    AveragingSide side = AveragingSide::Both;
    if (opts.mode == "left")
        side = AveragingSide::Left;
    else if (opts.mode == "right")
        side = AveragingSide::Right;
    else if (!opts.mode.empty() && opts.mode != "both")
        throw InputError("averaging mode must be left, right or both");
    auto names = model_module_names(doc, alg);
    auto av = averaging_defect(alg, mod, pair, side);
    for (const auto& [name, t] : av.defects)
        rep.add_check(name, t.is_zero(), "averaging identity component",
                      tensor_witnesses(t, name, names, alg.basis));
    if (side == AveragingSide::Both && av.left_pass && av.right_pass) {
        auto dia = dialgebra_from_averaging(alg, mod, pair);
        add_axiom_check(rep, "dialgebra_axioms", dia,
                        "u⊣v = u·S(v), u⊢v = R(u)·v satisfy the five dialgebra identities");
    }
}

void cmd_homotopy(Report& rep, const ModelDocument& doc, const CommandOptions& opts) {
    HomotopyStructure h = model_homotopy(doc);
    size_t n_max = std::min(opts.arity_bound, h.arity_bound);
    auto ax = homotopy_axiom_defect(h, n_max);
    rep.add_field("arity_checked", std::to_string(ax.arity_checked));
    rep.add_check("homotopy_axioms", ax.pass,
                  "the arity-graded coherence identities through the checked arity",
                  ax.pass ? std::vector<std::string>{} : std::vector<std::string>{ax.witness});
    if (doc.maps.count("R") && doc.maps.count("S")) {
        HomotopyRBS pair{model_map(doc, "R"), model_map(doc, "S")};
        if (h.kind == HomotopyKind::AInf) {
            auto adj = adjoint_bimodule(h);
            auto g = homotopy_grbs_defect(h, adj, pair, n_max);
            rep.add_check("homotopy_rbs", g.pass,
                          "the homotopy Rota-Baxter identities on the adjoint bimodule",
                          g.pass ? std::vector<std::string>{}
                                 : std::vector<std::string>{g.witness});
        } else if (h.kind == HomotopyKind::DendInf) {
            auto g = rbs_on_dendinf_defect(h, pair, n_max);
            rep.add_check("homotopy_rbs_on_dendinf", g.pass,
                          "the Rota-Baxter identities on the Dend-infinity structure",
                          g.pass ? std::vector<std::string>{}
                                 : std::vector<std::string>{g.witness});
        }
    }
}

void cmd_quadri(Report& rep, const ModelDocument& doc) {
    Algebra alg = model_algebra(doc);
    if (doc.maps.count("P") && doc.maps.count("Q")) {
        Bimodule adj = canonical_bimodule(alg, CanonicalBimodule::Adjoint);
        RBSPair pq = pair_from_doc(doc, alg, adj, "P", "Q");
        RBSPair rs = pair_from_doc(doc, alg, adj, "R", "S");
        try {
            auto res = commuting_rbs_quadri(alg, pq, rs);
            rep.add_check("pairs_are_rbs", true, "both pairs are Rota-Baxter systems");
            rep.add_field("commute", res.commute ? "true" : "false");
            if (!res.commute) {
                rep.add_check("commuting", false, "PR = RP, PS = SP, QR = RQ, QS = SQ");
                return;
            }
            rep.add_check("commuting", true, "PR = RP, PS = SP, QR = RQ, QS = SQ");
            add_axiom_check(rep, "quadri_axioms", *res.quadri,
                            "the nine quadri-algebra identities");
            add_axiom_check(rep, "horizontal_dendriform",
                            quadri_horizontal_dendriform(*res.quadri),
                            "(⊏,⊐) is a dendriform algebra");
            add_axiom_check(rep, "vertical_dendriform", quadri_vertical_dendriform(*res.quadri),
                            "(∧,∨) is a dendriform algebra");
            // intermediate statement: (R,S) is a Rota-Baxter system on the
            // dendriform algebra induced from (P,Q)
            BinaryStructure dend = make_structure(StructureKind::Dendriform, alg.dim);
            for (size_t a = 0; a < alg.dim; ++a)
                for (size_t b = 0; b < alg.dim; ++b) {
                    Vec prec = alg.mul(basis_vec(alg.dim, a), pq.S.apply(basis_vec(alg.dim, b)));
                    Vec succ = alg.mul(pq.R.apply(basis_vec(alg.dim, a)), basis_vec(alg.dim, b));
                    for (size_t k = 0; k < alg.dim; ++k) {
                        if (!prec[k].is_zero()) dend.tables["prec"].add(a, b, k, prec[k]);
                        if (!succ[k].is_zero()) dend.tables["succ"].add(a, b, k, succ[k]);
                    }
                }
            auto drep = rbs_on_dendriform_defect(dend, rs.R, rs.S);
            rep.add_check("rbs_on_induced_dendriform", drep.is_rbs,
                          "(R,S) is a Rota-Baxter system on the dendriform algebra induced "
                          "from (P,Q)");
        } catch (const PreconditionError& e) {
            rep.add_check("pairs_are_rbs", false, "both pairs are Rota-Baxter systems",
                          {e.what()});
        }
        return;
    }
    // dendriform tables + (R,S)
    BinaryStructure dend = make_structure(StructureKind::Dendriform, alg.dim);
    dend.tables["prec"] = model_bilinear(doc, "prec", alg.dim);
    dend.tables["succ"] = model_bilinear(doc, "succ", alg.dim);
    add_axiom_check(rep, "dendriform_axioms", dend, "the three dendriform identities");
    Matrix R = model_map(doc, "R"), S = model_map(doc, "S");
    auto drep = rbs_on_dendriform_defect(dend, R, S);
    rep.add_check("rbs_on_dendriform", drep.is_rbs,
                  "the four Rota-Baxter identities on the dendriform algebra");
    if (!drep.is_rbs) return;
    auto q = quadri_from_rbs_on_dendriform(dend, R, S);
    add_axiom_check(rep, "quadri_axioms", q, "the nine quadri-algebra identities");
    add_axiom_check(rep, "horizontal_dendriform", quadri_horizontal_dendriform(q),
                    "(⊏,⊐) is a dendriform algebra");
    add_axiom_check(rep, "vertical_dendriform", quadri_vertical_dendriform(q),
                    "(∧,∨) is a dendriform algebra");
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{
        "validate", "check-rbs", "characterize", "induce",    "gauge",
        "reduce",   "cohomology", "deform",      "aybp",      "covariant",
        "perturb",  "averaging",  "homotopy",    "quadri"};
    return names;
}

Report run_command(const std::string& cmd, const ModelDocument& doc,
                   const CommandOptions& opts) {
    Report rep;
    rep.command = cmd;
    rep.seed = opts.seed;
    rep.input_digest = digest_hex(emit_model(doc));

    if (cmd == "validate")
        cmd_validate(rep, doc);
    else if (cmd == "check-rbs")
        cmd_check_rbs(rep, doc);
    else if (cmd == "characterize")
        cmd_characterize(rep, doc);
    else if (cmd == "induce")
        cmd_induce(rep, doc);
    else if (cmd == "gauge")
        cmd_gauge(rep, doc);
    else if (cmd == "reduce")
        cmd_reduce(rep, doc);
    else if (cmd == "cohomology")
        cmd_cohomology(rep, doc, opts);
    else if (cmd == "deform")
        cmd_deform(rep, doc, opts);
    else if (cmd == "aybp")
        cmd_aybp(rep, doc, opts);
    else if (cmd == "covariant")
        cmd_covariant(rep, doc);
    else if (cmd == "perturb")
        cmd_perturb(rep, doc);
    else if (cmd == "averaging")
        cmd_averaging(rep, doc, opts);
    else if (cmd == "homotopy")
        cmd_homotopy(rep, doc, opts);
    else if (cmd == "quadri")
        cmd_quadri(rep, doc);
    else
        throw InputError("unknown command '" + cmd + "'");
    return rep;
}

int exit_code_for(const Report& rep) { return rep.all_pass() ? 0 : 1; }

} // namespace rbsys
