#include "rbsys/loday.hpp"

#include <array>

#include "rbsys/errors.hpp"
#include "rbsys/rbs.hpp"

namespace rbsys {

std::string to_string(StructureKind k) {
    switch (k) {
    case StructureKind::Associative: return "associative";
    case StructureKind::Dendriform: return "dendriform";
    case StructureKind::PreLie: return "prelie";
    case StructureKind::Dialgebra: return "dialgebra";
    case StructureKind::Quadri: return "quadri";
    }
    return "?";
}

StructureKind structure_kind_from_string(const std::string& s) {
    if (s == "associative") return StructureKind::Associative;
    if (s == "dendriform") return StructureKind::Dendriform;
    if (s == "prelie") return StructureKind::PreLie;
    if (s == "dialgebra") return StructureKind::Dialgebra;
    if (s == "quadri") return StructureKind::Quadri;
    throw InputError("unknown structure kind '" + s + "'");
}

const std::vector<std::string>& table_names(StructureKind k) {
    static const std::vector<std::string> assoc{"mul"};
    static const std::vector<std::string> dend{"prec", "succ"};
    static const std::vector<std::string> prelie{"diamond"};
    static const std::vector<std::string> dialg{"dashv", "vdash"};
    static const std::vector<std::string> quadri{"nw", "ne", "sw", "se"};
    switch (k) {
    case StructureKind::Associative: return assoc;
    case StructureKind::Dendriform: return dend;
    case StructureKind::PreLie: return prelie;
    case StructureKind::Dialgebra: return dialg;
    case StructureKind::Quadri: return quadri;
    }
    return assoc;
}

const Bilinear& BinaryStructure::table(const std::string& name) const {
    auto it = tables.find(name);
    if (it == tables.end()) throw InputError("structure has no table '" + name + "'");
    return it->second;
}

Bilinear BinaryStructure::derived(const std::string& name) const {
    auto sum = [&](std::initializer_list<const char*> parts) {
        Bilinear acc(dim, dim, dim);
        for (const char* p : parts) acc.add_scaled(Rational(1), table(p));
        return acc;
    };
    if (kind == StructureKind::Dendriform && name == "star") return sum({"prec", "succ"});
    if (kind == StructureKind::Quadri) {
        if (name == "sqsubset") return sum({"nw", "sw"});
        if (name == "sqsupset") return sum({"ne", "se"});
        if (name == "wedge") return sum({"nw", "ne"});
        if (name == "vee") return sum({"sw", "se"});
        if (name == "star") return sum({"nw", "ne", "sw", "se"});
    }
    throw InputError("no derived operation '" + name + "' for kind " + to_string(kind));
}

BinaryStructure make_structure(StructureKind kind, size_t dim) {
    BinaryStructure s;
    s.kind = kind;
    s.dim = dim;
    for (const auto& n : table_names(kind)) s.tables.emplace(n, Bilinear(dim, dim, dim));
    return s;
}

namespace {

// One side of an identity: outer(inner(x,y),z) or outer(x,inner(y,z)),
// with arguments drawn from the triple (a,b,c) in a fixed order.
struct Term {
    enum Assoc { LeftNested, RightNested } assoc;
    std::string outer, inner; // table names, possibly derived
    std::array<int, 3> args{0, 1, 2};
    int sign = 1;
};

struct Identity {
    std::string name;
    std::vector<Term> lhs, rhs;
};

const Bilinear& resolve(const BinaryStructure& s, std::map<std::string, Bilinear>& cache,
                        const std::string& name) {
    if (s.tables.count(name)) return s.table(name);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, s.derived(name)).first;
    return it->second;
}

Vec eval_terms(const BinaryStructure& s, std::map<std::string, Bilinear>& cache,
               const std::vector<Term>& terms, const std::array<Vec, 3>& abc) {
    Vec acc(s.dim);
    for (const auto& t : terms) {
        const Bilinear& out = resolve(s, cache, t.outer);
        const Bilinear& in = resolve(s, cache, t.inner);
        const Vec& x = abc[t.args[0]];
        const Vec& y = abc[t.args[1]];
        const Vec& z = abc[t.args[2]];
        Vec v = (t.assoc == Term::LeftNested) ? out.apply(in.apply(x, y), z)
                                              : out.apply(x, in.apply(y, z));
        vec_add_scaled(acc, Rational(t.sign), v);
    }
    return acc;
}

std::vector<Identity> identities_for(StructureKind kind) {
    using T = Term;
    auto L = [](std::string outer, std::string inner) {
        return T{T::LeftNested, std::move(outer), std::move(inner), {0, 1, 2}, 1};
    };
    auto R = [](std::string outer, std::string inner) {
        return T{T::RightNested, std::move(outer), std::move(inner), {0, 1, 2}, 1};
    };
    switch (kind) {
    case StructureKind::Associative:
        return {{"(ab)c = a(bc)", {L("mul", "mul")}, {R("mul", "mul")}}};
    case StructureKind::Dendriform:
        return {
            {"(a<b)<c = a<(b*c)", {L("prec", "prec")}, {R("prec", "star")}},
            {"(a>b)<c = a>(b<c)", {L("prec", "succ")}, {R("succ", "prec")}},
            {"(a*b)>c = a>(b>c)", {L("succ", "star")}, {R("succ", "succ")}},
        };
    case StructureKind::PreLie: {
        // (a⋄b)⋄c − a⋄(b⋄c) = (b⋄a)⋄c − b⋄(a⋄c)
        T l1 = L("diamond", "diamond");
        T l2 = R("diamond", "diamond");
        l2.sign = -1;
        T r1 = L("diamond", "diamond");
        r1.args = {1, 0, 2};
        T r2 = R("diamond", "diamond");
        r2.args = {1, 0, 2};
        r2.sign = -1;
        return {{"left pre-Lie", {l1, l2}, {r1, r2}}};
    }
    case StructureKind::Dialgebra:
        return {
            {"a-|(b-|c) = (a-|b)-|c", {R("dashv", "dashv")}, {L("dashv", "dashv")}},
            {"(a-|b)-|c = a-|(b|-c)", {L("dashv", "dashv")}, {R("dashv", "vdash")}},
            {"(a|-b)-|c = a|-(b-|c)", {L("dashv", "vdash")}, {R("vdash", "dashv")}},
            {"(a-|b)|-c = a|-(b|-c)", {L("vdash", "dashv")}, {R("vdash", "vdash")}},
            {"a|-(b|-c) = (a|-b)|-c", {R("vdash", "vdash")}, {L("vdash", "vdash")}},
        };
    case StructureKind::Quadri:
        return {
            {"(a.nw b).nw c = a.nw (b*c)", {L("nw", "nw")}, {R("nw", "star")}},
            {"(a.ne b).nw c = a.ne (b.sqsubset c)", {L("nw", "ne")}, {R("ne", "sqsubset")}},
            {"(a.wedge b).ne c = a.ne (b.sqsupset c)", {L("ne", "wedge")}, {R("ne", "sqsupset")}},
            {"(a.sw b).nw c = a.sw (b.wedge c)", {L("nw", "sw")}, {R("sw", "wedge")}},
            {"(a.se b).nw c = a.se (b.nw c)", {L("nw", "se")}, {R("se", "nw")}},
            {"(a.vee b).ne c = a.se (b.ne c)", {L("ne", "vee")}, {R("se", "ne")}},
            {"(a.sqsubset b).sw c = a.sw (b.vee c)", {L("sw", "sqsubset")}, {R("sw", "vee")}},
            {"(a.sqsupset b).sw c = a.se (b.sw c)", {L("sw", "sqsupset")}, {R("se", "sw")}},
            {"(a*b).se c = a.se (b.se c)", {L("se", "star")}, {R("se", "se")}},
        };
    }
    throw InputError("unknown structure kind");
}

} // namespace

AxiomReport axiom_check(const BinaryStructure& s) {
    for (const auto& n : table_names(s.kind)) s.table(n); // shape/presence check
    auto ids = identities_for(s.kind);
    std::map<std::string, Bilinear> cache;
    AxiomReport rep;
    rep.identities_checked = ids.size();
    std::array<Vec, 3> abc;
    for (size_t i = 0; i < s.dim; ++i)
        for (size_t j = 0; j < s.dim; ++j)
            for (size_t k = 0; k < s.dim; ++k) {
                abc = {basis_vec(s.dim, i), basis_vec(s.dim, j), basis_vec(s.dim, k)};
                for (const auto& id : ids) {
                    Vec lhs = eval_terms(s, cache, id.lhs, abc);
                    Vec rhs = eval_terms(s, cache, id.rhs, abc);
                    if (lhs != rhs) {
                        rep.pass = false;
                        if (!rep.failing_identity)
                            rep.failing_identity = AxiomFailure{id.name, i, j, k, lhs, rhs};
                    }
                }
            }
    return rep;
}

namespace {

// Defect tensor of O(R(a),R(b)) - O(R(a) op b + a op S(b)) style identities
// on a dendriform table, for maps R,S: D -> D.
MultiTensor dendriform_rbs_defect_one(const Bilinear& op, const Matrix& R, const Matrix& S,
                                      const Matrix& outer) {
    size_t d = op.dim_x();
    MultiTensor defect(2, d, d);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) {
            Vec ea = basis_vec(d, a), eb = basis_vec(d, b);
            Vec lhs = op.apply(outer.apply(ea), outer.apply(eb));
            Vec inner = vec_add(op.apply(R.apply(ea), eb), op.apply(ea, S.apply(eb)));
            Vec rhs = outer.apply(inner);
            Vec diff = vec_sub(lhs, rhs);
            for (size_t k = 0; k < d; ++k)
                if (!diff[k].is_zero()) defect.add(k, {a, b}, diff[k]);
        }
    return defect;
}

} // namespace

DendriformRBSReport rbs_on_dendriform_defect(const BinaryStructure& dend, const Matrix& R,
                                             const Matrix& S) {
    if (dend.kind != StructureKind::Dendriform)
        throw InputError("rbs_on_dendriform_defect needs a dendriform structure");
    if (R.rows() != dend.dim || R.cols() != dend.dim || S.rows() != dend.dim ||
        S.cols() != dend.dim)
        throw InputError("operator shape does not match the dendriform dimension");
    DendriformRBSReport rep;
    rep.defects.emplace("R_prec", dendriform_rbs_defect_one(dend.table("prec"), R, S, R));
    rep.defects.emplace("S_prec", dendriform_rbs_defect_one(dend.table("prec"), R, S, S));
    rep.defects.emplace("R_succ", dendriform_rbs_defect_one(dend.table("succ"), R, S, R));
    rep.defects.emplace("S_succ", dendriform_rbs_defect_one(dend.table("succ"), R, S, S));
    for (const auto& [name, t] : rep.defects)
        if (!t.is_zero()) rep.is_rbs = false;
    return rep;
}

BinaryStructure quadri_from_rbs_on_dendriform(const BinaryStructure& dend, const Matrix& R,
                                              const Matrix& S) {
    auto rep = rbs_on_dendriform_defect(dend, R, S);
    if (!rep.is_rbs) {
        for (const auto& [name, t] : rep.defects)
            if (!t.is_zero()) {
                auto [key, val] = t.first_nonzero();
                throw PreconditionError("pair is not a Rota-Baxter system on the dendriform "
                                        "algebra; defect " +
                                        name + " has coefficient " + val.str());
            }
    }
    size_t d = dend.dim;
    BinaryStructure q = make_structure(StructureKind::Quadri, d);
    const Bilinear& prec = dend.table("prec");
    const Bilinear& succ = dend.table("succ");
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) {
            Vec ea = basis_vec(d, a), eb = basis_vec(d, b);
            Vec sb = S.apply(eb), ra = R.apply(ea);
            auto put = [&](const char* name, const Vec& v) {
                for (size_t k = 0; k < d; ++k)
                    if (!v[k].is_zero()) q.tables[name].add(a, b, k, v[k]);
            };
            put("nw", prec.apply(ea, sb));
            put("ne", succ.apply(ea, sb));
            put("sw", prec.apply(ra, eb));
            put("se", succ.apply(ra, eb));
        }
    return q;
}

CommutingQuadriResult commuting_rbs_quadri(const Algebra& alg, const RBSPair& pq,
                                           const RBSPair& rs) {
    Bimodule adj = canonical_bimodule(alg, CanonicalBimodule::Adjoint);
    auto check = [&](const RBSPair& p, const char* which) {
        auto rep = grbs_defect(alg, adj, p);
        if (!rep.is_rbs)
            throw PreconditionError(std::string("pair ") + which +
                                    " is not a Rota-Baxter system: " + rep.witness);
    };
    check(pq, "(P,Q)");
    check(rs, "(R,S)");

    CommutingQuadriResult out;
    const Matrix &P = pq.R, &Q = pq.S, &R = rs.R, &S = rs.S;
    out.commute = P.mul(R) == R.mul(P) && P.mul(S) == S.mul(P) && Q.mul(R) == R.mul(Q) &&
                  Q.mul(S) == S.mul(Q);
    if (!out.commute) return out;

    size_t d = alg.dim;
    BinaryStructure q = make_structure(StructureKind::Quadri, d);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) {
            Vec ea = basis_vec(d, a), eb = basis_vec(d, b);
            auto put = [&](const char* name, const Vec& v) {
                for (size_t k = 0; k < d; ++k)
                    if (!v[k].is_zero()) q.tables[name].add(a, b, k, v[k]);
            };
            put("nw", alg.mul(ea, Q.apply(S.apply(eb))));
            put("ne", alg.mul(P.apply(ea), S.apply(eb)));
            put("sw", alg.mul(R.apply(ea), Q.apply(eb)));
            put("se", alg.mul(P.apply(R.apply(ea)), eb));
        }
    out.quadri = std::move(q);
    return out;
}

namespace {

BinaryStructure quadri_half(const BinaryStructure& q, const char* first, const char* second) {
    if (q.kind != StructureKind::Quadri) throw InputError("expected a quadri-algebra");
    BinaryStructure d = make_structure(StructureKind::Dendriform, q.dim);
    d.tables["prec"] = q.derived(first);
    d.tables["succ"] = q.derived(second);
    return d;
}

} // namespace

BinaryStructure quadri_horizontal_dendriform(const BinaryStructure& q) {
    return quadri_half(q, "sqsubset", "sqsupset");
}

BinaryStructure quadri_vertical_dendriform(const BinaryStructure& q) {
    return quadri_half(q, "wedge", "vee");
}

BinaryStructure dialgebra_from_averaging(const Algebra& alg, const Bimodule& mod,
                                         const RBSPair& pair) {
    auto rep = averaging_defect(alg, mod, pair, AveragingSide::Both);
    if (!rep.left_pass || !rep.right_pass) {
        for (const auto& [name, t] : rep.defects)
            if (!t.is_zero()) {
                auto [key, val] = t.first_nonzero();
                throw PreconditionError(
                    "pair is not a two-sided averaging system; defect " + name +
                    " has coefficient " + val.str());
            }
    }
    size_t m = mod.dim;
    BinaryStructure d = make_structure(StructureKind::Dialgebra, m);
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
            Vec dashv = mod.act_right(eu, pair.S.apply(ev));
            Vec vdash = mod.act_left(pair.R.apply(eu), ev);
            for (size_t k = 0; k < m; ++k) {
                if (!dashv[k].is_zero()) d.tables["dashv"].add(u, v, k, dashv[k]);
                if (!vdash[k].is_zero()) d.tables["vdash"].add(u, v, k, vdash[k]);
            }
        }
    return d;
}

} // namespace rbsys
