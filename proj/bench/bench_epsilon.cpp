// Serial vs OpenMP kernels for negativeness, plus corpus-level cover runs.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "sigcover/construct.hpp"
#include "sigcover/instances.hpp"
#include "sigcover/negativeness.hpp"

using namespace sigcover;

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SignedGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<unsigned> vd(0, static_cast<unsigned>(n - 1));
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i) es.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), Sign::positive});
    while (es.size() < m) {
        VertexId u = vd(rng), v = vd(rng);
        es.push_back({u, v, rng() % 2 ? Sign::negative : Sign::positive});
    }
    return SignedGraph(n, es);
}

}  // namespace

int main() {
    std::mt19937_64 rng(2024);
    std::printf("%-10s %-8s %-12s %-12s %-8s\n", "vertices", "edges", "serial_s", "openmp_s", "same");
    for (std::size_t n : {16u, 18u, 20u, 22u}) {
        auto g = random_graph(rng, n, 3 * n);
        std::size_t a = 0, b = 0;
        double ts = seconds([&] { a = negativeness(g, 24, Kernel::serial); });
        double tp = seconds([&] { b = negativeness(g, 24, Kernel::parallel); });
        std::printf("%-10zu %-8zu %-12.4f %-12.4f %-8s\n", n, g.edge_count(), ts, tp, a == b ? "yes" : "NO");
    }
    auto corpus = coverable_corpus(300, SpParams{}, 11);
    std::vector<CorpusCover> s, p;
    double ts = seconds([&] { s = cover_corpus(corpus.graphs, false); });
    double tp = seconds([&] { p = cover_corpus(corpus.graphs, true); });
    std::size_t same = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        same += s[i].verified && p[i].verified && s[i].result->family.size() == p[i].result->family.size() ? 1 : 0;
    double longest = 0;
    for (const auto& c : s) longest = std::max(longest, c.seconds);
    std::printf("longest single instance %.3f s\n", longest);
    std::printf("cover_corpus n=300 serial_s=%.3f openmp_s=%.3f identical=%zu\n", ts, tp, same);
    return 0;
}
