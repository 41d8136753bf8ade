#include <benchmark/benchmark.h>

#include <pultr/audit.hpp>
#include <pultr/fixtures.hpp>
#include <pultr/functors.hpp>
#include <pultr/hom.hpp>
#include <pultr/reduce.hpp>
#include <pultr/right_adjoints.hpp>
#include <pultr/subtree.hpp>

#include <random>

using namespace pultr;

namespace {

Digraph random_digraph(std::mt19937 & rng, int n, double p)
{
    std::bernoulli_distribution arc(p);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (arc(rng))
                arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

} // namespace

static void BM_hom_search(benchmark::State & state)
{
    std::mt19937 rng(1);
    Digraph g = random_digraph(rng, static_cast<int>(state.range(0)), 0.2);
    Digraph h = random_digraph(rng, 4, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_exists_bool(g, h));
}
BENCHMARK(BM_hom_search)->Arg(8)->Arg(12)->Arg(16);

static void BM_gamma_arc_path(benchmark::State & state)
{
    auto arc = fixtures::arc_template();
    Digraph p = path_digraph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_apply(arc, p));
}
BENCHMARK(BM_gamma_arc_path)->Arg(6)->Arg(10);

static void BM_lambda_tree_template(benchmark::State & state)
{
    auto t = fixtures::example_tree_template();
    std::mt19937 rng(2);
    Digraph g = random_digraph(rng, 4, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(lambda_apply(t, g).graph.n());
}
BENCHMARK(BM_lambda_tree_template);

static void BM_delta_r(benchmark::State & state)
{
    std::mt19937 rng(3);
    Digraph h = random_digraph(rng, static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_r(h).n());
}
BENCHMARK(BM_delta_r)->Arg(4)->Arg(6);

static void BM_folded_omega_tree(benchmark::State & state)
{
    auto d = build_subtree_decomposition(fixtures::example_tree_template());
    Digraph h(2, {{0, 0}, {0, 1}, {1, 1}});
    for (auto _ : state) {
        auto tc = omega_tree_construction(d, h);
        benchmark::DoNotOptimize(materialize_folded(tc, {1ull << 21}).n());
    }
}
BENCHMARK(BM_folded_omega_tree)->Unit(benchmark::kMillisecond);

static void BM_fold_retract(benchmark::State & state)
{
    std::mt19937 rng(4);
    Digraph g = random_digraph(rng, static_cast<int>(state.range(0)), 0.15);
    for (auto _ : state)
        benchmark::DoNotOptimize(fold_retract(g).graph.n());
}
BENCHMARK(BM_fold_retract)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
