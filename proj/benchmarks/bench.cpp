#include <spraylab/covering.hpp>
#include <spraylab/sphere.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <set>

using namespace spraylab;

namespace {

Rational rnd_rational(std::mt19937_64& rng, long num_lim = 20, long den_lim = 8) {
    std::uniform_int_distribution<long> num(-num_lim, num_lim);
    std::uniform_int_distribution<long> den(1, den_lim);
    return Rational(num(rng), den(rng));
}

QVec rnd_vec(std::mt19937_64& rng, std::size_t d) {
    QVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rnd_rational(rng);
    return v;
}

std::vector<QVec> gp_points(std::mt19937_64& rng, std::size_t d, std::size_t k) {
    AffineSubspace whole = AffineSubspace::whole_space(d);
    std::vector<QVec> ps;
    while (ps.size() < k) {
        std::vector<QVec> probe = ps;
        probe.push_back(rnd_vec(rng, d));
        std::set<QVec> dedup(probe.begin(), probe.end());
        if (dedup.size() != probe.size()) continue;
        if (is_general_position_points(probe, whole)) ps = std::move(probe);
    }
    return ps;
}

void bm_chain_intersect(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    auto cs = gp_points(rng, d, d);
    std::vector<Sphere> spheres;
    AffineSubspace whole = AffineSubspace::whole_space(d);
    for (const auto& c : cs) spheres.emplace_back(whole, c, Rational(1 + static_cast<long>(d)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect_chain(spheres));
    }
}
BENCHMARK(bm_chain_intersect)->Arg(3)->Arg(4)->Arg(6);

void bm_greedy_drizzle(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(8);
    std::set<QVec> pts;
    while (pts.size() < n) pts.insert(rnd_vec(rng, 3));
    std::vector<QVec> points(pts.begin(), pts.end());
    for (auto _ : state) {
        DirectionStream stream = DirectionStream::moment_curve(3);
        benchmark::DoNotOptimize(greedy_drizzle_assign(points, stream));
    }
    state.SetItemsProcessed(static_cast<long>(n) * state.iterations());
}
BENCHMARK(bm_greedy_drizzle)->Arg(100)->Arg(1000);

void bm_rank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(9);
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rnd_rational(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m));
    }
}
BENCHMARK(bm_rank)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
