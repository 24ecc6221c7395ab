#include <doctest.h>

#include "gen.hpp"
#include "rbsys/errors.hpp"
#include "rbsys/homotopy.hpp"

using namespace rbsys;
using namespace testsupport;

namespace {

Algebra idem1() {
    Algebra a = make_algebra(1, {"e"});
    a.mult.add(0, 0, 0, Rational(1));
    return a;
}

// Hand-assembled two-term structure on [A | N | M] with scalar module maps,
// independent of two_term_builder; the oracle for the parameter sweep.
struct TwoTermByHand {
    HomotopyStructure ainf;
    HomotopyStructure bimod;
    HomotopyRBS pair;
};

TwoTermByHand assemble_two_term(const Algebra& alg, const RBSPair& pairA, const Bimodule& modM,
                                const Matrix& RM, const Matrix& SM, const Bimodule& modN,
                                const Matrix& RN, const Matrix& SN, const Matrix& d) {
    size_t n = alg.dim, mM = modM.dim, mN = modN.dim;
    size_t deg0 = n + mN, total = deg0 + mM;
    TwoTermByHand out;
    out.ainf.kind = HomotopyKind::AInf;
    out.ainf.space = GradedSpace{{{0, deg0}, {1, mM}}};
    out.ainf.arity_bound = 4;

    MixedTensor mu1({total}, total);
    for (size_t u = 0; u < mM; ++u)
        for (size_t t = 0; t < mN; ++t)
            if (!d.at(t, u).is_zero())
                mu1.add(n + t, std::array<size_t, 1>{deg0 + u}, d.at(t, u));
    if (!mu1.is_zero()) out.ainf.ops.emplace(OpKey{1, 0, 0, 0}, mu1);

    MixedTensor mu2({total, total}, total);
    for (const auto& [k, v] : alg.mult.coefficients())
        mu2.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
    for (const auto& [k, v] : modN.left.coefficients())
        mu2.add(n + k[2], std::array<size_t, 2>{k[0], n + k[1]}, v);
    for (const auto& [k, v] : modN.right.coefficients())
        mu2.add(n + k[2], std::array<size_t, 2>{n + k[0], k[1]}, v);
    for (const auto& [k, v] : modM.left.coefficients())
        mu2.add(deg0 + k[2], std::array<size_t, 2>{k[0], deg0 + k[1]}, v);
    for (const auto& [k, v] : modM.right.coefficients())
        mu2.add(deg0 + k[2], std::array<size_t, 2>{deg0 + k[0], k[1]}, v);
    if (!mu2.is_zero()) out.ainf.ops.emplace(OpKey{2, 0, 0, 0}, mu2);

    out.bimod = adjoint_bimodule(out.ainf);
    out.pair.R = Matrix(total, total);
    out.pair.S = Matrix(total, total);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            out.pair.R.at(i, j) = pairA.R.at(i, j);
            out.pair.S.at(i, j) = pairA.S.at(i, j);
        }
    for (size_t i = 0; i < mN; ++i)
        for (size_t j = 0; j < mN; ++j) {
            out.pair.R.at(n + i, n + j) = RN.at(i, j);
            out.pair.S.at(n + i, n + j) = SN.at(i, j);
        }
    for (size_t i = 0; i < mM; ++i)
        for (size_t j = 0; j < mM; ++j) {
            out.pair.R.at(deg0 + i, deg0 + j) = RM.at(i, j);
            out.pair.S.at(deg0 + i, deg0 + j) = SM.at(i, j);
        }
    return out;
}

} // namespace

TEST_CASE("degree-0 ainf with a binary product reduces to associativity") {
    Rng rng(401);
    for (int t = 0; t < 25; ++t) {
        Algebra a = random_algebra(rng);
        auto h = ainf_from_algebra(a);
        CHECK(homotopy_axiom_defect(h, 3).pass);
    }
    Algebra bad = make_algebra(2);
    bad.mult.add(0, 0, 1, Rational(1));
    bad.mult.add(1, 0, 0, Rational(1));
    REQUIRE(!validate_model(bad).associative);
    auto h = ainf_from_algebra(bad);
    auto rep = homotopy_axiom_defect(h, 3);
    CHECK(!rep.pass); // the arity-3 identity is the associator
}

TEST_CASE("degree-0 bimodule identities reduce to the classical compatibilities") {
    Rng rng(409);
    for (int t = 0; t < 25; ++t) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        auto h = bimodule_from_classical(a, m);
        CHECK(homotopy_axiom_defect(h, 3).pass);
    }
}

TEST_CASE("degree-0 dendinf reduces to the dendriform axioms") {
    auto [alg, adj, pair] = jackson_instance(3, 2);
    auto dend = induce_structures(alg, adj, pair).dendriform;
    auto h = dendinf_from_dendriform(dend);
    CHECK(homotopy_axiom_defect(h, 3).pass);

    BinaryStructure bad = make_structure(StructureKind::Dendriform, 2);
    bad.tables["prec"].add(0, 0, 0, Rational(1));
    bad.tables["succ"].add(0, 0, 1, Rational(1));
    REQUIRE(!axiom_check(bad).pass);
    CHECK(!homotopy_axiom_defect(dendinf_from_dendriform(bad), 3).pass);
}

TEST_CASE("homogeneity violations are rejected") {
    HomotopyStructure h;
    h.kind = HomotopyKind::AInf;
    h.space = GradedSpace{{{0, 1}, {1, 1}}};
    h.arity_bound = 3;
    MixedTensor mu2({2, 2}, 2);
    mu2.add(1, std::array<size_t, 2>{0, 0}, Rational(1)); // deg 1 output from deg 0 inputs
    h.ops.emplace(OpKey{2, 0, 0, 0}, mu2);
    CHECK(homogeneity_violation(h).has_value());
    CHECK_THROWS_AS(homotopy_axiom_defect(h, 2), InputError);

    // truncation is refused beyond the arity bound
    auto ok = ainf_from_algebra(idem1());
    CHECK_THROWS_AS(homotopy_axiom_defect(ok, 7), ResourceError);
}

TEST_CASE("degree-0 homotopy rbs reduces exactly to the classical check") {
    Rng rng(419);
    int done = 0, passing = 0;
    while (done < 100) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        RBSPair p = (done % 3 == 0) ? random_rbs(rng, a, m) : rand_pair(rng, a, m);
        auto ha = ainf_from_algebra(a);
        auto hm = bimodule_from_classical(a, m);
        HomotopyRBS hp{p.R, p.S};
        bool classical = grbs_defect(a, m, p).is_rbs;
        bool homotopy = homotopy_grbs_defect(ha, hm, hp, 3).pass;
        CHECK(classical == homotopy);
        if (classical) ++passing;
        ++done;
    }
    CHECK(passing > 10);
}

TEST_CASE("trivial homotopy pair with eta_1 present requires the k = 1 identity") {
    // R = S = 0 passes all k >= 2 identities trivially; at k = 1 the identity
    // reads mu_1(R u) = R(eta_1(u)), which holds since both sides vanish.
    Algebra a = idem1();
    Bimodule adj = canonical_bimodule(a, CanonicalBimodule::Adjoint);
    auto ha = ainf_from_algebra(a);
    auto hm = bimodule_from_classical(a, adj);
    HomotopyRBS zero{Matrix(1, 1), Matrix(1, 1)};
    CHECK(homotopy_grbs_defect(ha, hm, zero, 3).pass);
}

TEST_CASE("index table rows") {
    // outer j = 3, block i = 2 at position 2: C_4 -> C_3 and K[C_2]
    auto e1 = index_table(3, 2, 2, 1); // r <= pos-1
    CHECK(e1.r0 == 1);
    CHECK(e1.inner == std::vector<size_t>{1, 2});
    auto e2 = index_table(3, 2, 2, 2); // pos <= r <= pos+block-1
    CHECK(e2.r0 == 2);
    CHECK(e2.inner == std::vector<size_t>{1});
    auto e3 = index_table(3, 2, 2, 3);
    CHECK(e3.r0 == 2);
    CHECK(e3.inner == std::vector<size_t>{2});
    auto e4 = index_table(3, 2, 2, 4); // r >= pos+block
    CHECK(e4.r0 == 3);
    CHECK(e4.inner == std::vector<size_t>{1, 2});
    CHECK_THROWS_AS(index_table(3, 2, 2, 5), InputError);
    CHECK_THROWS_AS(index_table(3, 2, 4, 1), InputError);
}

TEST_CASE("dendinf induced from a homotopy rbs in degree 0 matches the classical tables") {
    Rng rng(431);
    int done = 0;
    while (done < 40) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        RBSPair p = random_rbs(rng, a, m);
        if (!grbs_defect(a, m, p).is_rbs) continue;
        ++done;
        auto ha = ainf_from_algebra(a);
        auto hm = bimodule_from_classical(a, m);
        HomotopyRBS hp{p.R, p.S};
        auto dendinf = dendinf_from_grbs(ha, hm, hp, 3);
        CHECK(homotopy_axiom_defect(dendinf, 3).pass);

        auto classical = induce_structures(a, m, p).dendriform;
        auto expected = dendinf_from_dendriform(classical);
        const MixedTensor* prec = dendinf.op({2, 1, 0, 0});
        const MixedTensor* eprec = expected.op({2, 1, 0, 0});
        CHECK(((prec == nullptr && eprec == nullptr) ||
               (prec && eprec && *prec == *eprec)));
        const MixedTensor* succ = dendinf.op({2, 2, 0, 0});
        const MixedTensor* esucc = expected.op({2, 2, 0, 0});
        CHECK(((succ == nullptr && esucc == nullptr) ||
               (succ && esucc && *succ == *esucc)));

        // the collapse mu_k = sum_r mu_{k,[r]} is an A-infinity structure
        auto collapsed = ainf_collapse(dendinf);
        CHECK(homotopy_axiom_defect(collapsed, 3).pass);
    }
}

TEST_CASE("two-term builder on the zero-product data") {
    Algebra z = zero_algebra(2);
    Bimodule zmod = make_bimodule(z, 1);
    TripleModuleData md{zmod, Matrix(1, 1), Matrix(1, 1)};
    auto res = two_term_builder(z, RBSPair{Matrix(2, 2), Matrix(2, 2)}, md, md, Matrix(1, 1));
    CHECK(homotopy_axiom_defect(res.ainf, 3).pass);
    CHECK(homotopy_grbs_defect(res.ainf, res.bimod, res.pair, 3).pass);
}

TEST_CASE("two-term scalar parameter sweep on the idempotent line") {
    // A = Qe with e² = e, R = 2id, S = 0; M = N the one-dimensional module
    // with both actions the identity; R_M = λ, S_M = μ. The builder accepts
    // exactly the (λ, μ) whose hand-assembled two-term structure passes the
    // homotopy checks.
    Algebra a = idem1();
    Bimodule mod = make_bimodule(a, 1);
    mod.left.add(0, 0, 0, Rational(1));
    mod.right.add(0, 0, 0, Rational(1));
    RBSPair pairA{Matrix::identity(1).scaled(Rational(2)), Matrix(1, 1)};
    REQUIRE(validate_model(a, &mod).pass());

    std::vector<std::pair<long, long>> accepted;
    for (long lam = -3; lam <= 3; ++lam)
        for (long mu = -3; mu <= 3; ++mu) {
            Matrix RM = Matrix::identity(1).scaled(Rational(lam));
            Matrix SM = Matrix::identity(1).scaled(Rational(mu));
            TripleModuleData data{mod, RM, SM};
            bool builder_ok = true;
            try {
                auto res = two_term_builder(a, pairA, data, data, Matrix(1, 1));
                CHECK(homotopy_axiom_defect(res.ainf, 3).pass);
                CHECK(homotopy_grbs_defect(res.ainf, res.bimod, res.pair, 3).pass);
            } catch (const PreconditionError&) {
                builder_ok = false;
            }
            auto hand = assemble_two_term(a, pairA, mod, RM, SM, mod, RM, SM, Matrix(1, 1));
            bool hand_ok = homotopy_axiom_defect(hand.ainf, 3).pass &&
                           homotopy_grbs_defect(hand.ainf, hand.bimod, hand.pair, 3).pass;
            CHECK(builder_ok == hand_ok);
            if (builder_ok) accepted.emplace_back(lam, mu);
        }
    // R_M = S_M = 0 always qualifies; the sweep finds the full solution set
    // {(0,0), (0,-2), (2,0)} of the four scalar identities.
    CHECK(accepted == std::vector<std::pair<long, long>>{{-0, -2}, {0, 0}, {2, 0}});
}

TEST_CASE("two-term builder with a nonzero differential") {
    // M = N = adjoint of the Jackson algebra, d = multiplication by x
    // commutes with both actions and with J and σJ by commutativity.
    auto [alg, adj, pair] = jackson_instance(2, 2);
    Matrix d(3, 3);
    d.at(1, 0) = Rational(1); // d(x^k) = x^{k+1}
    d.at(2, 1) = Rational(1);
    TripleModuleData data{adj, Matrix(3, 3), Matrix(3, 3)};
    // zero module operators satisfy the triple-module identities trivially
    auto res = two_term_builder(alg, pair, data, data, d);
    CHECK(homotopy_axiom_defect(res.ainf, 3).pass);
    CHECK(homotopy_grbs_defect(res.ainf, res.bimod, res.pair, 3).pass);

    // the induced Dend-infinity structure passes through arity 3
    auto dendinf = dendinf_from_grbs(res.ainf, res.bimod, res.pair, 3);
    CHECK(homotopy_axiom_defect(dendinf, 3).pass);
    auto collapsed = ainf_collapse(dendinf);
    CHECK(homotopy_axiom_defect(collapsed, 3).pass);
}

TEST_CASE("two-term builder names violated hypotheses") {
    auto [alg, adj, pair] = jackson_instance(2, 2);
    TripleModuleData data{adj, Matrix(3, 3), Matrix(3, 3)};

    // d failing to intertwine the actions
    Matrix badd(3, 3);
    badd.at(0, 1) = Rational(1); // x -> 1 is not a bimodule map
    CHECK_THROWS_WITH_AS(two_term_builder(alg, pair, data, data, badd),
                         doctest::Contains("does not intertwine the actions"),
                         PreconditionError);

    // d failing to intertwine the operator pairs: d = x· but R_M on one side only
    Matrix d(3, 3);
    d.at(1, 0) = Rational(1);
    d.at(2, 1) = Rational(1);
    TripleModuleData m2{adj, Matrix::identity(3).scaled(Rational(0)), Matrix(3, 3)};
    TripleModuleData n2{adj, Matrix::identity(3), Matrix(3, 3)};
    if (!triple_module_violation(alg, pair, n2))
        CHECK_THROWS_WITH_AS(two_term_builder(alg, pair, m2, n2, d),
                             doctest::Contains("intertwine"), PreconditionError);

    // non-rbs base pair
    RBSPair bad{Matrix::identity(3), Matrix::identity(3)};
    CHECK_THROWS_WITH_AS(two_term_builder(alg, bad, data, data, d),
                         doctest::Contains("Rota-Baxter"), PreconditionError);
}

TEST_CASE("rbs on dendinf and the induced quadinf in degree 0") {
    Rng rng(443);
    int done = 0;
    while (done < 30) {
        Algebra a = random_algebra(rng);
        Bimodule adj = canonical_bimodule(a, CanonicalBimodule::Adjoint);
        RBSPair pq = random_rbs(rng, a, adj);
        RBSPair rs = random_rbs(rng, a, adj);
        if (!grbs_defect(a, adj, pq).is_rbs || !grbs_defect(a, adj, rs).is_rbs) continue;
        bool commute = pq.R.mul(rs.R) == rs.R.mul(pq.R) && pq.R.mul(rs.S) == rs.S.mul(pq.R) &&
                       pq.S.mul(rs.R) == rs.R.mul(pq.S) && pq.S.mul(rs.S) == rs.S.mul(pq.S);
        if (!commute) continue;
        ++done;

        auto dend = induce_structures(a, adj, pq).dendriform;
        auto hd = dendinf_from_dendriform(dend);
        HomotopyRBS hp{rs.R, rs.S};
        auto rep = rbs_on_dendinf_defect(hd, hp, 3);
        CHECK(rep.pass);

        auto quadinf = quadinf_from_rbs(hd, hp, 3);
        CHECK(homotopy_axiom_defect(quadinf, 3).pass);

        // degree-0 comparison with the classical quadri construction
        auto quad = quadri_from_rbs_on_dendriform(dend, rs.R, rs.S);
        auto names = table_names(StructureKind::Quadri);
        // nw = (r,s) = ([1],[1]), ne = ([2],[1]), sw = ([1],[2]), se = ([2],[2])
        struct KeyOf { const char* name; uint32_t r, s; };
        for (auto [name, r, s] : {KeyOf{"nw", 1, 1}, KeyOf{"ne", 2, 1}, KeyOf{"sw", 1, 2},
                                  KeyOf{"se", 2, 2}}) {
            MixedTensor expect({a.dim, a.dim}, a.dim);
            for (const auto& [k, v] : quad.table(name).coefficients())
                expect.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
            const MixedTensor* got = quadinf.op({2, r, s, 0});
            if (got)
                CHECK(*got == expect);
            else
                CHECK(expect.is_zero());
        }

        // both projections are Dend-infinity structures with equal collapses
        auto proj1 = quadinf_project_first(quadinf);
        auto proj2 = quadinf_project_second(quadinf);
        CHECK(homotopy_axiom_defect(proj1, 3).pass);
        CHECK(homotopy_axiom_defect(proj2, 3).pass);
        auto c1 = ainf_collapse(proj1);
        auto c2 = ainf_collapse(proj2);
        auto eq = [&](const HomotopyStructure& x, const HomotopyStructure& y) {
            for (uint32_t k = 1; k <= 3; ++k) {
                const MixedTensor* a1 = x.op({k, 0, 0, 0});
                const MixedTensor* a2 = y.op({k, 0, 0, 0});
                if ((a1 == nullptr) != (a2 == nullptr)) return false;
                if (a1 && !(*a1 == *a2)) return false;
            }
            return true;
        };
        CHECK(eq(c1, c2));
        CHECK(homotopy_axiom_defect(c1, 3).pass);
        ++done;
    }
}

TEST_CASE("zero pair on a dendinf gives the zero quadinf") {
    auto [alg, adj, pair] = jackson_instance(2, 2);
    auto dend = induce_structures(alg, adj, pair).dendriform;
    auto hd = dendinf_from_dendriform(dend);
    HomotopyRBS zero{Matrix(3, 3), Matrix(3, 3)};
    auto q = quadinf_from_rbs(hd, zero, 3);
    CHECK(q.ops.empty());
}
