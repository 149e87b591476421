#include "grl/analysis.hpp"
#include "grl/constructions.hpp"
#include "grl/ideals.hpp"
#include "grl/matrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace grl;

GradedAlgebra make_example(const FieldDesc& f) {
    Groupoid g2 = build_thin_connected(2);
    // section (e, s, t, f, f) in morphism indices of the thin builder
    int e = g2.identity_of[0], ff = g2.identity_of[1], s = -1, t = -1;
    for (int m = 0; m < 4; ++m) {
        if (m == e || m == ff) continue;
        if (g2.cod[m] == 0)
            s = m;
        else
            t = m;
    }
    return build_matrix_graded({g2, f, {e, s, t, ff, ff}});
}

Matrix random_matrix(std::size_t n, const FieldDesc& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar::from_int(
                f, f.is_finite() ? std::int64_t(rng() % std::uint64_t(f.p))
                                 : std::int64_t(rng() % 19) - 9);
    return m;
}

void BM_rref_gfp(benchmark::State& state) {
    Matrix m = random_matrix(std::size_t(state.range(0)), FieldDesc::gfp(7), 99);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_gfp)->Arg(16)->Arg(32)->Arg(64);

void BM_rref_rational(benchmark::State& state) {
    Matrix m =
        random_matrix(std::size_t(state.range(0)), FieldDesc::rational(), 99);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_ideal_closure(benchmark::State& state) {
    GradedAlgebra a = make_example(FieldDesc::gfp(2));
    Element gen = a.basis_element(0) + a.basis_element(a.dim() - 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(ideal_closure(a, {gen}).basis.dim());
}
BENCHMARK(BM_ideal_closure);

void BM_center_via_sigma(benchmark::State& state) {
    GradedAlgebra a = make_example(FieldDesc::gfp(2));
    for (auto _ : state) benchmark::DoNotOptimize(center_via_sigma(a).dim());
}
BENCHMARK(BM_center_via_sigma);

void BM_theorem3_sampled(benchmark::State& state) {
    GradedAlgebra a = make_example(FieldDesc::gfp(2));
    for (auto _ : state) {
        auto rep = verify_theorem3(a, CheckMode::Sampled,
                                   std::uint64_t(state.range(0)), 1);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_theorem3_sampled)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
