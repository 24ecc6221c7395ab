#include <benchmark/benchmark.h>

#include <random>

#include "rbsys/cohomology.hpp"
#include "rbsys/homotopy.hpp"

using namespace rbsys;

namespace {

std::mt19937_64 rng(20240);

Rational rnd() { return Rational(std::uniform_int_distribution<int>(-4, 4)(rng)); }

Matrix random_matrix(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = rnd();
    return m;
}

JacksonModel jackson() { return jackson_example(3, Rational(2)); }

void bm_rank(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    Matrix m = random_matrix(n);
    for (auto _ : state) {
        auto s = linear_solve_suite(m);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(bm_rank)->Arg(8)->Arg(16)->Arg(32);

void bm_grbs_defect(benchmark::State& state) {
    auto jm = jackson();
    Bimodule adj = canonical_bimodule(jm.alg, CanonicalBimodule::Adjoint);
    RBSPair pair{jm.J, jm.sigma.mul(jm.J)};
    for (auto _ : state) {
        auto rep = grbs_defect(jm.alg, adj, pair);
        benchmark::DoNotOptimize(rep.is_rbs);
    }
}
BENCHMARK(bm_grbs_defect);

void bm_derived_bracket(benchmark::State& state) {
    auto jm = jackson();
    Bimodule adj = canonical_bimodule(jm.alg, CanonicalBimodule::Adjoint);
    Cochain c1 = make_cochain(2, 4, 4), c2 = make_cochain(1, 4, 4);
    for (size_t i = 0; i < 4; ++i) {
        c1.P.add(i, {i, (i + 1) % 4}, Rational(1));
        c2.Q.add(i, {(i + 2) % 4}, Rational(2));
    }
    for (auto _ : state) {
        Cochain b = derived_bracket(c1, c2, jm.alg, adj);
        benchmark::DoNotOptimize(b.arity);
    }
}
BENCHMARK(bm_derived_bracket);

void bm_cohomology_dims(benchmark::State& state) {
    auto jm = jackson();
    Bimodule adj = canonical_bimodule(jm.alg, CanonicalBimodule::Adjoint);
    RBSPair pair{jm.J, jm.sigma.mul(jm.J)};
    for (auto _ : state) {
        auto dims = cohomology_dimensions(pair, jm.alg, adj, 2);
        benchmark::DoNotOptimize(dims.size());
    }
}
BENCHMARK(bm_cohomology_dims);

void bm_homotopy_defect(benchmark::State& state) {
    auto jm = jackson();
    auto h = ainf_from_algebra(jm.alg);
    for (auto _ : state) {
        auto rep = homotopy_axiom_defect(h, 4);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(bm_homotopy_defect);

void bm_quadri_axioms(benchmark::State& state) {
    auto jm = jackson();
    // (2·id, 0) is a Rota-Baxter system on any algebra and commutes with itself.
    RBSPair pair{Matrix::identity(4).scaled(Rational(2)), Matrix(4, 4)};
    auto res = commuting_rbs_quadri(jm.alg, pair, pair);
    for (auto _ : state) {
        auto rep = axiom_check(*res.quadri);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(bm_quadri_axioms);

} // namespace

BENCHMARK_MAIN();
