#include <benchmark/benchmark.h>

#include "mg/admissible.hpp"
#include "mg/complex_pairing.hpp"

namespace {

mg::GraphSpec k4_spec() {
    mg::GraphSpec s;
    for (char v : {'a', 'b', 'c', 'd'}) s.vertices.push_back({std::string(1, v), 0});
    const char* ends[6][2] = {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}};
    for (int e = 0; e < 6; ++e)
        s.edges.push_back({"e" + std::to_string(e), ends[e][0], ends[e][1], mg::Rat(1)});
    return s;
}

mg::GraphSpec theta_spec() {
    mg::GraphSpec s;
    s.vertices = {{"u", 0}, {"v", 0}};
    for (int e = 0; e < 3; ++e) s.edges.push_back({"e" + std::to_string(e), "u", "v", mg::Rat(1)});
    return s;
}

void BM_InvariantsK4(benchmark::State& state) {
    mg::Graph g = mg::Graph::must(k4_spec());
    for (auto _ : state) {
        auto b = mg::invariant_bundle(g);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_InvariantsK4);

void BM_GreenTableTheta(benchmark::State& state) {
    mg::Graph g = mg::Graph::must(theta_spec());
    for (auto _ : state) {
        mg::GreenTable t(g);
        benchmark::DoNotOptimize(t.tau());
    }
}
BENCHMARK(BM_GreenTableTheta);

void BM_DiscreteTriple(benchmark::State& state) {
    mg::Graph g = mg::Graph::must(theta_spec());
    int n = static_cast<int>(state.range(0));
    auto cx = std::make_shared<mg::ProductComplex>(g, g, n);
    mg::GreenTable table(g);
    auto green = mg::sample_divisor(cx, [&](int e1, const mg::Rat& a, int e2, const mg::Rat& b) {
        return table.green(mg::edge_point(g, e1, a * g.length(e1)),
                           mg::edge_point(g, e2, b * g.length(e2)));
    });
    for (auto _ : state) {
        auto v = mg::discrete_triple(green, green, green);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DiscreteTriple)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
