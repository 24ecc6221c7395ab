#include <doctest.h>

#include "gen.hpp"
#include "rbsys/cohomology.hpp"
#include "rbsys/errors.hpp"

using namespace rbsys;
using namespace testsupport;

namespace {

Algebra idem1() {
    Algebra a = make_algebra(1, {"e"});
    a.mult.add(0, 0, 0, Rational(1));
    return a;
}

} // namespace

TEST_CASE("gerstenhaber bracket of a product with itself detects associativity") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        Algebra a = random_algebra(rng);
        MultiTensor mu = a.mult.as_multitensor();
        MultiTensor self = gerstenhaber_bracket(mu, mu);
        CHECK(self.is_zero()); // associative by construction
    }
    // a non-associative table has [mu,mu] != 0
    Bilinear bad(2, 2, 2);
    bad.add(0, 0, 1, Rational(1));
    bad.add(1, 0, 0, Rational(1));
    CHECK(!gerstenhaber_bracket(bad.as_multitensor(), bad.as_multitensor()).is_zero());
}

TEST_CASE("self-bracket of odd-arity maps vanishes") {
    Rng rng(19);
    for (size_t arity : {1u, 3u}) {
        MultiTensor f(arity, 2, 2);
        for (int e = 0; e < 6; ++e) {
            std::vector<size_t> idx(arity);
            for (auto& i : idx) i = (size_t)rand_int(rng, 0, 1);
            f.add((size_t)rand_int(rng, 0, 1), idx, Rational(rand_int(rng, -2, 2)));
        }
        CHECK(gerstenhaber_bracket(f, f).is_zero());
    }
}

TEST_CASE("gerstenhaber graded antisymmetry") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        MultiTensor f(2, 2, 2), g(3, 2, 2);
        for (int e = 0; e < 5; ++e) {
            f.add(rand_int(rng, 0, 1),
                  {(size_t)rand_int(rng, 0, 1), (size_t)rand_int(rng, 0, 1)},
                  Rational(rand_int(rng, -2, 2)));
            g.add(rand_int(rng, 0, 1),
                  {(size_t)rand_int(rng, 0, 1), (size_t)rand_int(rng, 0, 1),
                   (size_t)rand_int(rng, 0, 1)},
                  Rational(rand_int(rng, -2, 2)));
        }
        // [f,g] = -(-1)^{(m-1)(n-1)} [g,f]
        MultiTensor fg = gerstenhaber_bracket(f, g);
        MultiTensor gf = gerstenhaber_bracket(g, f);
        MultiTensor expect = gf.scaled(-sign_pow((2 - 1) * (3 - 1)));
        CHECK(fg == expect);
    }
}

TEST_CASE("derived bracket equals the semidirect oracle") {
    Rng rng(41);
    int pairs = 0;
    while (pairs < 120) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        size_t m1 = (size_t)rand_int(rng, 0, 2), m2 = (size_t)rand_int(rng, 0, 2);
        Cochain c1 = rand_cochain(rng, m1, m.dim, a.dim);
        Cochain c2 = rand_cochain(rng, m2, m.dim, a.dim);
        Cochain lhs = derived_bracket(c1, c2, a, m);
        Cochain rhs = derived_bracket_semidirect(c1, c2, a, m);
        CHECK(lhs == rhs);
        ++pairs;
    }
}

TEST_CASE("degree-0 bracket on a commutative algebra vanishes") {
    Algebra a = idem1();
    Bimodule adj = canonical_bimodule(a, CanonicalBimodule::Adjoint);
    Cochain c1 = cochain_from_elements(Vec{Rational(2)}, Vec{Rational(-1)}, 1);
    Cochain c2 = cochain_from_elements(Vec{Rational(5)}, Vec{Rational(3)}, 1);
    CHECK(derived_bracket(c1, c2, a, adj).is_zero());
}

TEST_CASE("self-bracket of an arity-1 pair reproduces the defects") {
    Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        RBSPair p = rand_pair(rng, a, m);
        Cochain c = cochain_from_pair(p);
        Cochain sq = derived_bracket(c, c, a, m);
        auto g = grbs_defect(a, m, p);
        // (1/2) [[(R,S),(R,S)]] = (-defect_R, -defect_S)
        CHECK(sq.P == g.defect_R.scaled(Rational(-2)));
        CHECK(sq.Q == g.defect_S.scaled(Rational(-2)));
    }
}

TEST_CASE("graded antisymmetry and Jacobi for the derived bracket") {
    Rng rng(47);
    int done = 0;
    while (done < 40) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        size_t am = (size_t)rand_int(rng, 0, 2), an = (size_t)rand_int(rng, 0, 2);
        Cochain c1 = rand_cochain(rng, am, m.dim, a.dim, 4);
        Cochain c2 = rand_cochain(rng, an, m.dim, a.dim, 4);
        Cochain lhs = derived_bracket(c1, c2, a, m);
        Cochain rhs = derived_bracket(c2, c1, a, m);
        Cochain expect = make_cochain(lhs.arity, m.dim, a.dim);
        expect.add_scaled(-sign_pow((long)(am * an)), rhs);
        CHECK(lhs == expect);

        // Jacobi: [c1,[c2,c3]] = [[c1,c2],c3] + (-1)^{mn} [c2,[c1,c3]]
        size_t ak = (size_t)rand_int(rng, 0, 1);
        Cochain c3 = rand_cochain(rng, ak, m.dim, a.dim, 4);
        Cochain j1 = derived_bracket(c1, derived_bracket(c2, c3, a, m), a, m);
        Cochain j2 = derived_bracket(derived_bracket(c1, c2, a, m), c3, a, m);
        Cochain j3 = derived_bracket(c2, derived_bracket(c1, c3, a, m), a, m);
        Cochain sum = make_cochain(j1.arity, m.dim, a.dim);
        sum.add_scaled(Rational(1), j2);
        sum.add_scaled(sign_pow((long)(am * an)), j3);
        CHECK(j1 == sum);
        ++done;
    }
}

TEST_CASE("hochschild differential at degree zero matches the displayed formula") {
    auto [alg, adj, pair] = jackson_instance(3, 2);
    Rng rng(53);
    Vec a(4), b(4);
    for (auto& x : a) x = Rational(rand_int(rng, -2, 2));
    for (auto& x : b) x = Rational(rand_int(rng, -2, 2));
    Cochain c = cochain_from_elements(a, b, 4);
    Cochain d = hochschild_differential(pair, c, alg, adj);
    for (size_t u = 0; u < 4; ++u) {
        Vec eu = basis_vec(4, u);
        // pr1 = R(u)a - R(u.b) - aR(u) + R(a.u)
        Vec expect = alg.mul(pair.R.apply(eu), a);
        vec_add_scaled(expect, Rational(-1), pair.R.apply(adj.act_right(eu, b)));
        vec_add_scaled(expect, Rational(-1), alg.mul(a, pair.R.apply(eu)));
        vec_add_scaled(expect, Rational(1), pair.R.apply(adj.act_left(a, eu)));
        std::vector<Vec> arg{eu};
        CHECK(d.P.apply(arg) == expect);
        // pr2 = S(u)b - S(u.b) - bS(u) + S(a.u)
        Vec expect2 = alg.mul(pair.S.apply(eu), b);
        vec_add_scaled(expect2, Rational(-1), pair.S.apply(adj.act_right(eu, b)));
        vec_add_scaled(expect2, Rational(-1), alg.mul(b, pair.S.apply(eu)));
        vec_add_scaled(expect2, Rational(1), pair.S.apply(adj.act_left(a, eu)));
        CHECK(d.Q.apply(arg) == expect2);
    }
}

TEST_CASE("sign relation d = (-1)^n delta and both square to zero") {
    Rng rng(59);
    int done = 0;
    while (done < 40) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        RBSPair p = random_rbs(rng, a, m);
        if (!grbs_defect(a, m, p).is_rbs) continue;
        size_t arity = (size_t)rand_int(rng, 0, 3);
        Cochain c = rand_cochain(rng, arity, m.dim, a.dim, 5);

        Cochain d1 = rbs_differential(p, c, a, m);
        Cochain dh = hochschild_differential(p, c, a, m);
        Cochain expect = make_cochain(d1.arity, m.dim, a.dim);
        expect.add_scaled(sign_pow((long)arity), dh);
        CHECK(d1 == expect);

        CHECK(rbs_differential(p, d1, a, m).is_zero());
        CHECK(hochschild_differential(p, dh, a, m).is_zero());
        ++done;
    }

    Algebra a1 = idem1();
    Bimodule adj = canonical_bimodule(a1, CanonicalBimodule::Adjoint);
    RBSPair bad{Matrix::identity(1), Matrix::identity(1)};
    CHECK_THROWS_AS(
        rbs_differential(bad, cochain_from_elements(Vec{Rational(1)}, Vec{Rational(0)}, 1), a1,
                         adj),
        PreconditionError);
}

TEST_CASE("zero pair on the idempotent line has vanishing differential") {
    Algebra a = idem1();
    Bimodule adj = canonical_bimodule(a, CanonicalBimodule::Adjoint);
    RBSPair zero{Matrix(1, 1), Matrix(1, 1)};
    Rng rng(61);
    for (size_t arity = 0; arity <= 3; ++arity) {
        Cochain c = rand_cochain(rng, arity, 1, 1, 3);
        CHECK(rbs_differential(zero, c, a, adj).is_zero());
    }
}

TEST_CASE("cohomology dimensions") {
    Algebra a = idem1();
    Bimodule adj = canonical_bimodule(a, CanonicalBimodule::Adjoint);
    RBSPair zero{Matrix(1, 1), Matrix(1, 1)};
    auto dims = cohomology_dimensions(zero, a, adj, 3);
    CHECK(dims == std::vector<size_t>{2, 2, 2, 2}); // d = 0, dim C^n = 2

    auto [jalg, jadj, jpair] = jackson_instance(2, 2);
    auto jd = cohomology_dimensions(jpair, jalg, jadj, 2);
    for (size_t n = 0; n <= 2; ++n) CHECK(jd[n] <= cochain_space_dim(n, 3, 3));

    CHECK_THROWS_AS(cohomology_dimensions(jpair, jalg, jadj, 12), ResourceError);
}

TEST_CASE("cohomology representatives span the reported dimensions") {
    Rng rng(83);
    int done = 0;
    while (done < 15) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        RBSPair p = random_rbs(rng, a, m);
        if (!grbs_defect(a, m, p).is_rbs) continue;
        ++done;
        auto dims = cohomology_dimensions(p, a, m, 2);
        for (size_t n = 0; n <= 2; ++n) {
            auto reps = cohomology_representatives(p, a, m, n);
            CHECK(reps.size() == dims[n]);
            for (const auto& c : reps) CHECK(rbs_differential(p, c, a, m).is_zero());
        }
    }
}

TEST_CASE("dendriform operad complex") {
    auto [alg, adj, pair] = jackson_instance(3, 2);
    auto dend = induce_structures(alg, adj, pair).dendriform;
    DendCochain pi = dend_pi(dend);

    // pi is Maurer-Cartan exactly because the tables are dendriform
    CHECK(dend_bracket(pi, pi).is_zero());

    Rng rng(67);
    for (int t = 0; t < 12; ++t) {
        size_t n = 1 + (size_t)rand_int(rng, 0, 1);
        DendCochain f = make_dend_cochain(n, 4);
        for (int e = 0; e < 6; ++e) {
            std::vector<size_t> idx(n);
            for (auto& i : idx) i = (size_t)rand_int(rng, 0, 3);
            f.comp[(size_t)rand_int(rng, 0, (int)n - 1)].add((size_t)rand_int(rng, 0, 3), idx,
                                                             Rational(rand_int(rng, -2, 2)));
        }
        CHECK(dend_differential(pi, dend_differential(pi, f)).is_zero());
    }

    // a non-dendriform pair of tables fails the Maurer-Cartan equation
    BinaryStructure bad = make_structure(StructureKind::Dendriform, 2);
    bad.tables["prec"].add(0, 0, 0, Rational(1));
    bad.tables["succ"].add(0, 0, 1, Rational(1));
    REQUIRE(!axiom_check(bad).pass);
    CHECK(!dend_bracket(dend_pi(bad), dend_pi(bad)).is_zero());
}

TEST_CASE("partial composition index bookkeeping") {
    // f of arity 2, g of arity 1, slot i = 1: output component [2] falls in
    // the third case and reads g through the formal sum [1]+...+[n].
    size_t dim = 2;
    DendCochain f = make_dend_cochain(2, dim);
    DendCochain g = make_dend_cochain(1, dim);
    f.comp[0].add(0, {0, 1}, Rational(1)); // f([1]; e1, e2) = e1
    f.comp[1].add(1, {0, 1}, Rational(1)); // f([2]; e1, e2) = e2
    g.comp[0].add(0, {1}, Rational(1));    // g([1]; e2) = e1

    DendCochain h = dend_partial_compose(f, g, 1);
    REQUIRE(h.arity == 2);
    // r = 1 is the middle case: f([1]; g([1]; .), .)
    CHECK(h.comp[0].coefficient(0, std::vector<size_t>{1, 1}) == Rational(1));
    // r = 2 is the third case: f([2]; g-sum(.), .)
    CHECK(h.comp[1].coefficient(1, std::vector<size_t>{1, 1}) == Rational(1));

    CHECK_THROWS_AS(dend_partial_compose(f, g, 3), InputError);
}

TEST_CASE("theta is a chain map onto the dendriform complex") {
    Rng rng(73);
    int done = 0;
    while (done < 30) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        RBSPair p = random_rbs(rng, a, m);
        if (!grbs_defect(a, m, p).is_rbs) continue;
        auto dend = induce_structures(a, m, p).dendriform;
        DendCochain pi = dend_pi(dend);

        // Theta_1(R,S) = pi_M
        DendCochain theta1 = theta_map(cochain_from_pair(p), a, m);
        CHECK(theta1 == pi);

        // middle components of Theta vanish identically
        size_t arity = 1 + (size_t)rand_int(rng, 0, 1);
        Cochain c = rand_cochain(rng, arity, m.dim, a.dim, 5);
        DendCochain tc = theta_map(c, a, m);
        for (size_t r = 1; r + 1 < tc.arity; ++r) CHECK(tc.comp[r].is_zero());

        // chain square: Theta_{n+1}((-1)^n [[(R,S), c]]) = delta_pi(Theta_n(c))
        Cochain dc = derived_bracket(cochain_from_pair(p), c, a, m);
        Cochain scaled = make_cochain(dc.arity, m.dim, a.dim);
        scaled.add_scaled(sign_pow((long)arity), dc);
        DendCochain lhs = theta_map(scaled, a, m);
        DendCochain rhs = dend_differential(pi, tc);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("theta preserves the graded Lie brackets") {
    Rng rng(79);
    int done = 0;
    while (done < 30) {
        Algebra a = random_algebra(rng);
        Bimodule m = random_bimodule(rng, a);
        if (m.dim == 0) continue;
        Cochain c1 = rand_cochain(rng, 1, m.dim, a.dim, 4);
        Cochain c2 = rand_cochain(rng, 1, m.dim, a.dim, 4);
        DendCochain lhs = dend_bracket(theta_map(c1, a, m), theta_map(c2, a, m));
        DendCochain rhs = theta_map(derived_bracket(c1, c2, a, m), a, m);
        CHECK(lhs == rhs);
        ++done;
    }
}
