#include "sigcover/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sigcover {

SignedGraph::SignedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u >= n_ || ed.v >= n_) {
            throw std::out_of_range("edge " + std::to_string(e) + " has an endpoint outside the vertex range");
        }
        incidence_[ed.u].push_back(e);
        if (!ed.is_loop()) incidence_[ed.v].push_back(e);
    }
}

std::size_t SignedGraph::degree(VertexId v) const {
    std::size_t d = 0;
    for (EdgeId e : incident(v)) d += edges_[e].is_loop() ? 2 : 1;
    return d;
}

SignedGraph SignedGraph::with_edge(VertexId u, VertexId v, Sign s) const {
    auto es = edges_;
    es.push_back({u, v, s});
    return SignedGraph(n_, std::move(es));
}

SignedGraph SignedGraph::with_vertices(std::size_t extra) const { return SignedGraph(n_ + extra, edges_); }

SignedGraph switch_at(const SignedGraph& g, const SwitchSet& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v : s) {
        if (v >= g.vertex_count()) throw std::out_of_range("switch vertex " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    auto es = g.edges();
    for (Edge& e : es) {
        if (!e.is_loop() && in[e.u] != in[e.v]) e.sign = flip(e.sign);
    }
    return SignedGraph(g.vertex_count(), std::move(es));
}

std::optional<SwitchSet> balancing_switch(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> pot(n, 0);
    std::vector<VertexId> stack;
    for (VertexId r = 0; r < n; ++r) {
        if (pot[r] != 0) continue;
        pot[r] = 1;
        stack.push_back(r);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(u)) {
                const Edge& ed = g.edge(e);
                if (ed.is_loop()) {
                    if (ed.sign == Sign::negative) return std::nullopt;
                    continue;
                }
                VertexId w = ed.other(u);
                int want = pot[u] * to_int(ed.sign);
                if (pot[w] == 0) {
                    pot[w] = want;
                    stack.push_back(w);
                } else if (pot[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    SwitchSet s;
    for (VertexId v = 0; v < n; ++v)
        if (pot[v] < 0) s.push_back(v);
    return s;
}

bool is_balanced(const SignedGraph& g) { return balancing_switch(g).has_value(); }

Sign sign_of(const SignedGraph& g, std::span<const EdgeId> edge_ids) {
    Sign s = Sign::positive;
    for (EdgeId e : edge_ids) {
        if (e >= g.edge_count()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
        s = s * g.edge(e).sign;
    }
    return s;
}

bool is_two_vertex(const SignedGraph& g, VertexId v) {
    const auto& inc = g.incident(v);
    return inc.size() == 2 && !g.edge(inc[0]).is_loop() && !g.edge(inc[1]).is_loop();
}

Suppression suppress(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> two(n);
    for (VertexId v = 0; v < n; ++v) two[v] = is_two_vertex(g, v);

    std::vector<bool> used(g.edge_count(), false);
    struct Chain {
        VertexId a, b;
        std::vector<EdgeId> path;
    };
    std::vector<Chain> chains;
    std::vector<bool> keep(n);
    for (VertexId v = 0; v < n; ++v) keep[v] = !two[v];

    // Walk from vertex w away from edge e through 2-vertices; returns edges and end vertex.
    auto walk = [&](VertexId w, EdgeId e, EdgeId start, std::vector<EdgeId>& out) -> std::pair<VertexId, bool> {
        while (two[w]) {
            const auto& inc = g.incident(w);
            EdgeId nxt = inc[0] == e ? inc[1] : inc[0];
            if (nxt == start) return {w, true};
            out.push_back(nxt);
            used[nxt] = true;
            w = g.edge(nxt).other(w);
            e = nxt;
        }
        return {w, false};
    };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (used[e]) continue;
        used[e] = true;
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) {
            chains.push_back({ed.u, ed.u, {e}});
            continue;
        }
        std::vector<EdgeId> fwd;
        auto [b, cyc] = walk(ed.v, e, e, fwd);
        if (cyc) {
            // whole component is a circuit; keep its smallest vertex
            std::vector<EdgeId> path{e};
            path.insert(path.end(), fwd.begin(), fwd.end());
            VertexId low = ed.u;
            for (EdgeId p : path) low = std::min({low, g.edge(p).u, g.edge(p).v});
            keep[low] = true;
            chains.push_back({low, low, std::move(path)});
            continue;
        }
        std::vector<EdgeId> back;
        auto [a, cyc2] = walk(ed.u, e, e, back);
        (void)cyc2;
        std::vector<EdgeId> path(back.rbegin(), back.rend());
        path.push_back(e);
        path.insert(path.end(), fwd.begin(), fwd.end());
        chains.push_back({a, b, std::move(path)});
    }

    Suppression out;
    out.vertex_map.assign(n, std::nullopt);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (keep[v]) out.vertex_map[v] = next++;
    std::vector<Edge> es;
    for (auto& c : chains) {
        es.push_back({*out.vertex_map[c.a], *out.vertex_map[c.b], sign_of(g, c.path)});
        out.edge_paths.push_back(std::move(c.path));
    }
    out.graph = SignedGraph(next, std::move(es));
    return out;
}

BlockStructure blocks_and_cuts(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> estack;
    BlockStructure bs;
    int timer = 0;

    std::function<void(VertexId, std::optional<EdgeId>)> dfs = [&](VertexId u, std::optional<EdgeId> parent) {
        disc[u] = low[u] = timer++;
        for (EdgeId e : g.incident(u)) {
            const Edge& ed = g.edge(e);
            if (ed.is_loop() || (parent && e == *parent)) continue;
            VertexId w = ed.other(u);
            if (disc[w] < 0) {
                estack.push_back(e);
                dfs(w, e);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    EdgeSet block;
                    while (true) {
                        EdgeId f = estack.back();
                        estack.pop_back();
                        block.push_back(f);
                        if (f == e) break;
                    }
                    bs.blocks.push_back(make_edge_set(std::move(block)));
                }
            } else if (disc[w] < disc[u]) {
                estack.push_back(e);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (VertexId v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, std::nullopt);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).is_loop()) bs.blocks.push_back({e});
    std::sort(bs.blocks.begin(), bs.blocks.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.front() < b.front(); });

    std::vector<int> count(n, 0);
    for (const auto& b : bs.blocks)
        for (VertexId v : vertices_of(g, b)) ++count[v];
    for (VertexId v = 0; v < n; ++v)
        if (count[v] >= 2) bs.cut_vertices.push_back(v);
    return bs;
}

namespace {

// Component labels ignoring one optional vertex; returns the number of components.
std::size_t label_components(const SignedGraph& g, std::optional<VertexId> removed, std::vector<int>& label) {
    const std::size_t n = g.vertex_count();
    label.assign(n, -1);
    std::size_t count = 0;
    std::vector<VertexId> stack;
    for (VertexId r = 0; r < n; ++r) {
        if (label[r] >= 0 || (removed && r == *removed)) continue;
        label[r] = static_cast<int>(count);
        stack.push_back(r);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(u)) {
                VertexId w = g.edge(e).other(u);
                if (label[w] >= 0 || (removed && w == *removed)) continue;
                label[w] = static_cast<int>(count);
                stack.push_back(w);
            }
        }
        ++count;
    }
    return count;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const SignedGraph& g) {
    std::vector<int> label;
    std::size_t c = label_components(g, std::nullopt, label);
    std::vector<std::vector<VertexId>> out(c);
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[label[v]].push_back(v);
    return out;
}

bool is_connected(const SignedGraph& g) {
    std::vector<int> label;
    return label_components(g, std::nullopt, label) == 1;
}

bool is_two_connected(const SignedGraph& g) {
    std::vector<int> label;
    if (label_components(g, std::nullopt, label) != 1) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (label_components(g, v, label) > 1) return false;
    return true;
}

std::vector<EdgeId> bridges(const SignedGraph& g) {
    std::vector<EdgeId> out;
    for (const auto& b : blocks_and_cuts(g).blocks)
        if (b.size() == 1 && !g.edge(b[0]).is_loop()) out.push_back(b[0]);
    std::sort(out.begin(), out.end());
    return out;
}

Subgraph edge_subgraph(const SignedGraph& g, const EdgeSet& edge_ids) {
    Subgraph s;
    s.vertex_image.assign(g.vertex_count(), std::nullopt);
    for (VertexId v : vertices_of(g, edge_ids)) {
        s.vertex_image[v] = static_cast<VertexId>(s.vertex_origin.size());
        s.vertex_origin.push_back(v);
    }
    std::vector<Edge> es;
    for (EdgeId e : edge_ids) {
        const Edge& ed = g.edge(e);
        es.push_back({*s.vertex_image[ed.u], *s.vertex_image[ed.v], ed.sign});
        s.edge_origin.push_back(e);
    }
    s.graph = SignedGraph(s.vertex_origin.size(), std::move(es));
    return s;
}

std::vector<VertexId> vertices_of(const SignedGraph& g, std::span<const EdgeId> edge_ids) {
    std::vector<VertexId> vs;
    for (EdgeId e : edge_ids) {
        vs.push_back(g.edge(e).u);
        vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace sigcover
