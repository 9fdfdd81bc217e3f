#pragma once

// Independent brute-force helpers shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "sigcover/graph.hpp"

namespace testsupport {

using namespace sigcover;

inline SignedGraph make_graph(std::size_t n, std::initializer_list<std::tuple<int, int, char>> es) {
    std::vector<Edge> edges;
    for (auto [u, v, s] : es)
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), s == '+' ? Sign::positive : Sign::negative});
    return SignedGraph(n, std::move(edges));
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Connected and every touched vertex of degree exactly two.
inline bool subset_is_circuit(const SignedGraph& g, std::uint64_t mask) {
    if (mask == 0) return false;
    std::vector<int> deg(g.vertex_count(), 0);
    UnionFind uf(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!((mask >> e) & 1u)) continue;
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
        uf.unite(static_cast<int>(g.edge(e).u), static_cast<int>(g.edge(e).v));
    }
    int root = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] == 0) continue;
        if (deg[v] != 2) return false;
        if (root < 0) root = uf.find(static_cast<int>(v));
        else if (uf.find(static_cast<int>(v)) != root) return false;
    }
    return true;
}

inline std::set<EdgeSet> brute_force_circuits(const SignedGraph& g) {
    std::set<EdgeSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        if (!subset_is_circuit(g, mask)) continue;
        EdgeSet es;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if ((mask >> e) & 1u) es.push_back(e);
        out.insert(es);
    }
    return out;
}

// A subset is a signed circuit iff it is a balanced circuit, or it is connected
// with cyclomatic number 2, no vertex of degree one, contains exactly two circuits
// which are both unbalanced and share at most one vertex.
inline std::set<EdgeSet> brute_force_signed_circuits(const SignedGraph& g) {
    auto circuits = brute_force_circuits(g);
    std::set<EdgeSet> expect;
    for (const auto& c : circuits)
        if (sign_of(g, c) == Sign::positive) expect.insert(c);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        EdgeSet es;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if ((mask >> e) & 1u) es.push_back(e);
        std::vector<EdgeSet> inside;
        for (const auto& c : circuits)
            if (std::includes(es.begin(), es.end(), c.begin(), c.end())) inside.push_back(c);
        if (inside.size() != 2) continue;
        if (sign_of(g, inside[0]) != Sign::negative || sign_of(g, inside[1]) != Sign::negative) continue;
        auto v0 = vertices_of(g, inside[0]);
        auto v1 = vertices_of(g, inside[1]);
        std::vector<VertexId> shared;
        std::set_intersection(v0.begin(), v0.end(), v1.begin(), v1.end(), std::back_inserter(shared));
        if (shared.size() > 1) continue;
        auto vs = vertices_of(g, es);
        if (es.size() != vs.size() + 1) continue;
        std::vector<int> deg(g.vertex_count(), 0);
        UnionFind uf(g.vertex_count());
        for (EdgeId e : es) {
            deg[g.edge(e).u]++;
            deg[g.edge(e).v]++;
            uf.unite(static_cast<int>(g.edge(e).u), static_cast<int>(g.edge(e).v));
        }
        bool ok = true;
        for (VertexId v : vs) ok = ok && deg[v] >= 2 && uf.find(static_cast<int>(v)) == uf.find(static_cast<int>(vs[0]));
        if (ok) expect.insert(es);
    }
    return expect;
}

// Minimum negative-edge count over all 2^n switchings, nothing held fixed.
inline std::size_t brute_force_epsilon(const SignedGraph& g) {
    std::size_t best = g.edge_count() + 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s) {
        std::size_t neg = 0;
        for (const Edge& e : g.edges()) {
            bool flipped = !e.is_loop() && (((s >> e.u) ^ (s >> e.v)) & 1u);
            bool negative = (e.sign == Sign::negative) != flipped;
            neg += negative ? 1 : 0;
        }
        best = std::min(best, neg);
    }
    return best;
}

inline SignedGraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m, double loop_prob,
                                     double neg_prob) {
    std::uniform_int_distribution<int> vd(0, static_cast<int>(n) - 1);
    std::bernoulli_distribution loop(loop_prob), neg(neg_prob);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < m; ++i) {
        VertexId u = static_cast<VertexId>(vd(rng));
        VertexId v = u;
        if (!loop(rng) && n > 1)
            while (v == u) v = static_cast<VertexId>(vd(rng));
        es.push_back({u, v, neg(rng) ? Sign::negative : Sign::positive});
    }
    return SignedGraph(n, std::move(es));
}

inline SignedGraph random_connected_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m, double loop_prob,
                                               double neg_prob) {
    if (m + 1 < n) throw std::invalid_argument("too few edges to connect the vertices");
    while (true) {
        auto g = random_multigraph(rng, n, m, loop_prob, neg_prob);
        if (is_connected(g)) return g;
    }
}

namespace detail {

inline std::vector<int> degrees(const SignedGraph& g, const EdgeSet& es) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : es) {
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    return deg;
}

inline bool connected_edges(const SignedGraph& g, const EdgeSet& es) {
    if (es.empty()) return false;
    UnionFind uf(g.vertex_count());
    for (EdgeId e : es) uf.unite(static_cast<int>(g.edge(e).u), static_cast<int>(g.edge(e).v));
    const int r = uf.find(static_cast<int>(g.edge(es[0]).u));
    for (EdgeId e : es)
        if (uf.find(static_cast<int>(g.edge(e).u)) != r) return false;
    return true;
}

// Repeatedly drop edges at degree-one vertices.
inline EdgeSet strip_leaves(const SignedGraph& g, EdgeSet es) {
    while (true) {
        auto deg = degrees(g, es);
        EdgeSet keep;
        for (EdgeId e : es)
            if (deg[g.edge(e).u] != 1 && deg[g.edge(e).v] != 1) keep.push_back(e);
        if (keep.size() == es.size()) return es;
        es = keep;
    }
}

inline bool is_plain_circuit(const SignedGraph& g, const EdgeSet& es) {
    if (!connected_edges(g, es)) return false;
    auto deg = degrees(g, es);
    for (int d : deg)
        if (d != 0 && d != 2) return false;
    return true;
}

}  // namespace detail

// Member check written from the definitions: a balanced circuit, or a
// connected subgraph with cyclomatic number two, minimum degree two and
// exactly two circuits, both unbalanced and sharing at most one vertex.
inline bool member_is_signed_circuit(const SignedGraph& g, const EdgeSet& es) {
    if (detail::is_plain_circuit(g, es)) return sign_of(g, es) == Sign::positive;
    if (!detail::connected_edges(g, es)) return false;
    auto vs = vertices_of(g, es);
    if (es.size() != vs.size() + 1) return false;
    auto deg = detail::degrees(g, es);
    for (VertexId v : vs)
        if (deg[v] < 2) return false;
    std::set<EdgeSet> circuits;
    for (EdgeId e : es) {
        EdgeSet rest;
        for (EdgeId f : es)
            if (f != e) rest.push_back(f);
        rest = detail::strip_leaves(g, rest);
        if (detail::is_plain_circuit(g, rest)) circuits.insert(rest);
    }
    if (circuits.size() != 2) return false;
    const EdgeSet& a = *circuits.begin();
    const EdgeSet& b = *std::next(circuits.begin());
    if (sign_of(g, a) != Sign::negative || sign_of(g, b) != Sign::negative) return false;
    auto va = vertices_of(g, a), vb = vertices_of(g, b);
    std::vector<VertexId> shared;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    return shared.size() <= 1;
}

// Every member a signed circuit and every edge covered exactly k times.
inline bool brute_is_k_cover(const SignedGraph& g, const std::vector<EdgeSet>& members, std::size_t k) {
    std::vector<std::size_t> cov(g.edge_count(), 0);
    for (const auto& m : members) {
        if (!member_is_signed_circuit(g, m)) return false;
        for (EdgeId e : m) cov.at(e)++;
    }
    return std::all_of(cov.begin(), cov.end(), [&](std::size_t c) { return c == k; });
}

// Simple x-y path with x != y.
inline bool brute_is_path(const SignedGraph& g, const EdgeSet& es, VertexId x, VertexId y) {
    if (x == y || !detail::connected_edges(g, es)) return false;
    auto vs = vertices_of(g, es);
    if (es.size() + 1 != vs.size()) return false;
    auto deg = detail::degrees(g, es);
    for (VertexId v : vs)
        if (deg[v] != ((v == x || v == y) ? 1 : 2)) return false;
    return true;
}

// A path from x ending on an unbalanced circuit, meeting it only at its end;
// the path may be trivial.
inline bool brute_is_tadpole(const SignedGraph& g, const EdgeSet& es, VertexId x) {
    if (!detail::connected_edges(g, es)) return false;
    auto vs = vertices_of(g, es);
    if (es.size() != vs.size() || !std::binary_search(vs.begin(), vs.end(), x)) return false;
    const EdgeSet c = detail::strip_leaves(g, es);
    if (!detail::is_plain_circuit(g, c) || sign_of(g, c) != Sign::negative) return false;
    if (c.size() == es.size()) return true;
    auto deg = detail::degrees(g, es);
    int leaves = 0, branch = 0;
    for (VertexId v : vs) {
        if (deg[v] == 1) ++leaves;
        if (deg[v] == 3) ++branch;
        if (deg[v] > 3) return false;
    }
    return leaves == 1 && deg[x] == 1 && branch == 1;
}

inline bool tadpole_touches(const SignedGraph& g, const EdgeSet& es, VertexId v) {
    auto vs = vertices_of(g, es);
    return std::binary_search(vs.begin(), vs.end(), v);
}

}  // namespace testsupport
