#include "sigcover/circuits.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace sigcover {

EdgeSet Barbell::edges() const {
    EdgeSet out = set_union(first.edges, second.edges);
    return set_union(out, make_edge_set(path));
}

const char* kind_name(SignedCircuitKind k) {
    switch (k) {
        case SignedCircuitKind::balanced: return "balanced";
        case SignedCircuitKind::short_barbell: return "short_barbell";
        case SignedCircuitKind::long_barbell: return "long_barbell";
    }
    return "?";
}

SignedCircuitKind SignedCircuit::kind() const {
    if (std::holds_alternative<Circuit>(shape)) return SignedCircuitKind::balanced;
    return std::get<Barbell>(shape).is_short() ? SignedCircuitKind::short_barbell : SignedCircuitKind::long_barbell;
}

EdgeSet Tadpole::edges() const { return set_union(circuit.edges, make_edge_set(path)); }

namespace {

void check_ids(const SignedGraph& g, const EdgeSet& edges) {
    for (EdgeId e : edges)
        if (e >= g.edge_count()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
}

// Degrees and incidences restricted to an edge subset.
struct LocalView {
    const SignedGraph& g;
    EdgeSet edges;
    std::vector<int> deg;
    std::vector<std::vector<EdgeId>> inc;
    std::vector<VertexId> verts;

    LocalView(const SignedGraph& graph, EdgeSet es)
        : g(graph), edges(std::move(es)), deg(graph.vertex_count(), 0), inc(graph.vertex_count()) {
        for (EdgeId e : edges) {
            const Edge& ed = g.edge(e);
            inc[ed.u].push_back(e);
            deg[ed.u] += 1;
            if (!ed.is_loop()) inc[ed.v].push_back(e);
            deg[ed.v] += 1;
        }
        verts = vertices_of(g, edges);
    }

    bool connected() const {
        if (verts.empty()) return true;
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<VertexId> stack{verts[0]};
        seen[verts[0]] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : inc[u]) {
                VertexId w = g.edge(e).other(u);
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == verts.size();
    }

    // From w leave along e and continue through degree-2 vertices until a vertex
    // of another degree or `stop` is reached.
    VertexId walk(VertexId w, EdgeId e, VertexId stop, std::vector<EdgeId>& out,
                  std::vector<VertexId>* visited = nullptr) const {
        while (true) {
            out.push_back(e);
            VertexId nxt = g.edge(e).other(w);
            if (visited) visited->push_back(nxt);
            if (nxt == stop || deg[nxt] != 2 || g.edge(e).is_loop()) return nxt;
            const auto& in = inc[nxt];
            e = in[0] == e ? in[1] : in[0];
            w = nxt;
        }
    }
};

Circuit make_circuit(const SignedGraph& g, std::vector<EdgeId> edges) {
    Circuit c;
    c.edges = make_edge_set(std::move(edges));
    c.sign = sign_of(g, c.edges);
    return c;
}

std::optional<Barbell> parse_barbell(const LocalView& lv) {
    const SignedGraph& g = lv.g;
    std::vector<VertexId> big;
    for (VertexId v : lv.verts) {
        if (lv.deg[v] < 2 || lv.deg[v] > 4) return std::nullopt;
        if (lv.deg[v] != 2) big.push_back(v);
    }
    if (big.size() == 1 && lv.deg[big[0]] == 4) {
        VertexId w = big[0];
        EdgeId start = lv.inc[w].front();
        std::vector<EdgeId> first;
        if (g.edge(start).is_loop()) {
            first.push_back(start);
        } else {
            VertexId end = lv.walk(w, start, w, first);
            if (end != w) return std::nullopt;
        }
        Circuit c1 = make_circuit(g, first);
        Circuit c2 = make_circuit(g, set_difference(lv.edges, c1.edges));
        if (c1.balanced() || c2.balanced()) return std::nullopt;
        if (!as_circuit(g, c2.edges)) return std::nullopt;
        Barbell b{c1, c2, {}};
        if (b.second.edges < b.first.edges) std::swap(b.first, b.second);
        return b;
    }
    if (big.size() != 2 || lv.deg[big[0]] != 3 || lv.deg[big[1]] != 3) return std::nullopt;
    VertexId a = big[0], b = big[1];
    std::vector<EdgeId> path, ring;
    int to_b = 0;
    for (EdgeId e : lv.inc[a]) {
        if (g.edge(e).is_loop()) {
            ring.push_back(e);
            continue;
        }
        std::vector<EdgeId> walked;
        VertexId end = lv.walk(a, e, b, walked);
        if (end == b) {
            ++to_b;
            path = walked;
        } else if (end == a) {
            if (ring.empty() || std::find(ring.begin(), ring.end(), e) == ring.end())
                ring.insert(ring.end(), walked.begin(), walked.end());
        } else {
            return std::nullopt;
        }
    }
    if (to_b != 1) return std::nullopt;
    Circuit c1 = make_circuit(g, ring);
    EdgeSet rest = set_difference(set_difference(lv.edges, c1.edges), make_edge_set(path));
    auto c2 = as_circuit(g, rest);
    if (!c2 || !as_circuit(g, c1.edges)) return std::nullopt;
    if (c1.balanced() || c2->balanced()) return std::nullopt;
    return Barbell{c1, *c2, path};
}

void dfs_paths(const SignedGraph& g, VertexId u, const std::vector<char>& target, const std::vector<char>& blocked,
               const std::vector<char>& edge_blocked, std::vector<char>& on_path, std::vector<EdgeId>& path,
               std::vector<VertexId>& verts, std::size_t cap,
               const std::function<void(const std::vector<EdgeId>&, const std::vector<VertexId>&)>& emit,
               std::size_t& count) {
    for (EdgeId e : g.incident(u)) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop() || edge_blocked[e]) continue;
        VertexId w = ed.other(u);
        if (on_path[w]) continue;
        if (target[w]) {
            path.push_back(e);
            verts.push_back(w);
            if (++count > cap) throw CapExceeded("path enumeration exceeded cap " + std::to_string(cap));
            emit(path, verts);
            path.pop_back();
            verts.pop_back();
            continue;
        }
        if (blocked[w]) continue;
        on_path[w] = 1;
        path.push_back(e);
        verts.push_back(w);
        dfs_paths(g, w, target, blocked, edge_blocked, on_path, path, verts, cap, emit, count);
        path.pop_back();
        verts.pop_back();
        on_path[w] = 0;
    }
}

}  // namespace

std::optional<Circuit> as_circuit(const SignedGraph& g, const EdgeSet& edges) {
    check_ids(g, edges);
    if (edges.empty()) return std::nullopt;
    LocalView lv(g, edges);
    for (VertexId v : lv.verts)
        if (lv.deg[v] != 2) return std::nullopt;
    if (!lv.connected()) return std::nullopt;
    return make_circuit(g, edges);
}

Balance classify_circuit(const SignedGraph& g, const EdgeSet& edges) {
    auto c = as_circuit(g, edges);
    if (!c) throw PreconditionError("edge set is not a circuit");
    return c->balanced() ? Balance::balanced : Balance::unbalanced;
}

std::vector<Circuit> enumerate_circuits(const SignedGraph& g, std::size_t cap) {
    std::vector<Circuit> out;
    auto push = [&](std::vector<EdgeId> es) {
        if (out.size() >= cap) throw CapExceeded("circuit enumeration exceeded cap " + std::to_string(cap));
        out.push_back(make_circuit(g, std::move(es)));
    };
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0), target(n, 0), blocked(n, 0), edge_blocked(g.edge_count(), 0);
    for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
        const Edge& ed = g.edge(e0);
        if (ed.is_loop()) {
            push({e0});
            continue;
        }
        // Every circuit is found from its smallest edge: paths from v back to u over larger ids.
        for (EdgeId e = 0; e <= e0; ++e) edge_blocked[e] = 1;
        std::fill(target.begin(), target.end(), 0);
        target[ed.u] = 1;
        on_path[ed.v] = 1;
        std::vector<EdgeId> path;
        std::vector<VertexId> verts{ed.v};
        std::size_t count = 0;
        dfs_paths(g, ed.v, target, blocked, edge_blocked, on_path, path, verts, std::numeric_limits<std::size_t>::max(),
                  [&](const std::vector<EdgeId>& p, const std::vector<VertexId>&) {
                      std::vector<EdgeId> es(p);
                      es.push_back(e0);
                      push(std::move(es));
                  },
                  count);
        on_path[ed.v] = 0;
    }
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.edges < b.edges; });
    return out;
}

std::optional<SignedCircuit> is_signed_circuit(const SignedGraph& g, const EdgeSet& edges) {
    check_ids(g, edges);
    EdgeSet es = make_edge_set(edges);
    if (es.empty()) return std::nullopt;
    LocalView lv(g, es);
    if (!lv.connected()) return std::nullopt;
    if (es.size() == lv.verts.size()) {
        auto c = as_circuit(g, es);
        if (!c || !c->balanced()) return std::nullopt;
        return SignedCircuit{*c, es};
    }
    if (es.size() == lv.verts.size() + 1) {
        auto b = parse_barbell(lv);
        if (!b) return std::nullopt;
        return SignedCircuit{*b, es};
    }
    return std::nullopt;
}

std::optional<Tadpole> is_tadpole_at(const SignedGraph& g, const EdgeSet& edges, VertexId x) {
    check_ids(g, edges);
    EdgeSet es = make_edge_set(edges);
    if (es.empty() || x >= g.vertex_count()) return std::nullopt;
    LocalView lv(g, es);
    if (!lv.connected() || es.size() != lv.verts.size() || lv.deg[x] == 0) return std::nullopt;
    Tadpole t;
    t.tail = x;
    t.path_vertices.push_back(x);
    if (lv.deg[x] == 2) {
        auto c = as_circuit(g, es);
        if (!c || c->balanced()) return std::nullopt;
        t.head = x;
        t.circuit = *c;
        return t;
    }
    if (lv.deg[x] != 1) return std::nullopt;
    VertexId head = lv.walk(x, lv.inc[x][0], x, t.path, &t.path_vertices);
    if (lv.deg[head] != 3) return std::nullopt;
    t.head = head;
    auto c = as_circuit(g, set_difference(es, make_edge_set(t.path)));
    if (!c || c->balanced()) return std::nullopt;
    t.circuit = *c;
    for (VertexId v : t.path_vertices)
        if (v != head && lv.deg[v] != 1 && lv.deg[v] != 2) return std::nullopt;
    return t;
}

std::optional<XyPath> as_xy_path(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y) {
    check_ids(g, edges);
    EdgeSet es = make_edge_set(edges);
    if (es.empty() || x == y || x >= g.vertex_count() || y >= g.vertex_count()) return std::nullopt;
    LocalView lv(g, es);
    if (lv.deg[x] != 1 || lv.deg[y] != 1 || es.size() + 1 != lv.verts.size() || !lv.connected()) return std::nullopt;
    XyPath p;
    p.from = x;
    p.to = y;
    p.vertices.push_back(x);
    VertexId end = lv.walk(x, lv.inc[x][0], y, p.edges, &p.vertices);
    if (end != y || p.edges.size() != es.size()) return std::nullopt;
    p.sign = sign_of(g, p.edges);
    return p;
}

std::vector<SignedCircuit> enumerate_signed_circuits(const SignedGraph& g, std::size_t cap, std::size_t circuit_cap) {
    auto circuits = enumerate_circuits(g, circuit_cap);
    std::vector<SignedCircuit> out;
    std::set<EdgeSet> seen;
    auto push = [&](SignedCircuit sc) {
        if (!seen.insert(sc.edges).second) return;
        if (out.size() >= cap) throw CapExceeded("signed circuit enumeration exceeded cap " + std::to_string(cap));
        out.push_back(std::move(sc));
    };
    std::vector<const Circuit*> unbalanced;
    for (const auto& c : circuits) {
        if (c.balanced()) push(SignedCircuit{c, c.edges});
        else unbalanced.push_back(&c);
    }
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> vsets;
    for (const Circuit* c : unbalanced) vsets.push_back(vertices_of(g, c->edges));
    std::vector<char> in1(n), in2(n), blocked(n), on_path(n), edge_blocked(g.edge_count());
    for (std::size_t i = 0; i < unbalanced.size(); ++i) {
        for (std::size_t j = i + 1; j < unbalanced.size(); ++j) {
            std::vector<VertexId> shared;
            std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() == 1) {
                Barbell b{*unbalanced[i], *unbalanced[j], {}};
                push(SignedCircuit{b, b.edges()});
                continue;
            }
            if (!shared.empty()) continue;
            std::fill(in1.begin(), in1.end(), 0);
            std::fill(in2.begin(), in2.end(), 0);
            std::fill(edge_blocked.begin(), edge_blocked.end(), 0);
            for (VertexId v : vsets[i]) in1[v] = 1;
            for (VertexId v : vsets[j]) in2[v] = 1;
            for (EdgeId e : unbalanced[i]->edges) edge_blocked[e] = 1;
            for (EdgeId e : unbalanced[j]->edges) edge_blocked[e] = 1;
            for (VertexId v = 0; v < n; ++v) blocked[v] = in1[v];
            for (VertexId a : vsets[i]) {
                std::vector<EdgeId> path;
                std::vector<VertexId> verts{a};
                on_path[a] = 1;
                std::size_t count = 0;
                dfs_paths(g, a, in2, blocked, edge_blocked, on_path, path, verts, cap,
                          [&](const std::vector<EdgeId>& p, const std::vector<VertexId>&) {
                              Barbell b{*unbalanced[i], *unbalanced[j], p};
                              push(SignedCircuit{b, b.edges()});
                          },
                          count);
                on_path[a] = 0;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SignedCircuit& a, const SignedCircuit& b) { return a.edges < b.edges; });
    return out;
}

std::vector<XyPath> enumerate_xy_paths(const SignedGraph& g, VertexId x, VertexId y, std::size_t cap) {
    std::vector<XyPath> out;
    if (x == y) return out;
    const std::size_t n = g.vertex_count();
    std::vector<char> target(n, 0), blocked(n, 0), on_path(n, 0), edge_blocked(g.edge_count(), 0);
    target[y] = 1;
    on_path[x] = 1;
    std::vector<EdgeId> path;
    std::vector<VertexId> verts{x};
    std::size_t count = 0;
    dfs_paths(g, x, target, blocked, edge_blocked, on_path, path, verts, cap,
              [&](const std::vector<EdgeId>& p, const std::vector<VertexId>& vs) {
                  out.push_back(XyPath{x, y, p, vs, sign_of(g, p)});
              },
              count);
    std::sort(out.begin(), out.end(), [](const XyPath& a, const XyPath& b) { return a.edge_set() < b.edge_set(); });
    return out;
}

std::vector<Tadpole> enumerate_tadpoles(const SignedGraph& g, VertexId x, const std::vector<Circuit>& circuits,
                                        std::size_t cap) {
    std::vector<Tadpole> out;
    const std::size_t n = g.vertex_count();
    std::vector<char> target(n), blocked(n), on_path(n), edge_blocked(g.edge_count());
    for (const Circuit& c : circuits) {
        if (c.balanced()) continue;
        auto vs = vertices_of(g, c.edges);
        if (std::binary_search(vs.begin(), vs.end(), x)) {
            out.push_back(Tadpole{x, x, {}, {x}, c});
            continue;
        }
        std::fill(target.begin(), target.end(), 0);
        std::fill(edge_blocked.begin(), edge_blocked.end(), 0);
        for (VertexId v : vs) target[v] = 1;
        for (EdgeId e : c.edges) edge_blocked[e] = 1;
        on_path[x] = 1;
        std::vector<EdgeId> path;
        std::vector<VertexId> verts{x};
        std::size_t count = 0;
        dfs_paths(g, x, target, blocked, edge_blocked, on_path, path, verts, cap,
                  [&](const std::vector<EdgeId>& p, const std::vector<VertexId>& pv) {
                      out.push_back(Tadpole{x, pv.back(), p, pv, c});
                  },
                  count);
        on_path[x] = 0;
        if (out.size() > cap) throw CapExceeded("tadpole enumeration exceeded cap " + std::to_string(cap));
    }
    return out;
}

}  // namespace sigcover
