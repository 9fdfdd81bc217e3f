#include "sigcover/sp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sigcover {

const char* kind_name(SpKind k) {
    switch (k) {
        case SpKind::leaf: return "Leaf";
        case SpKind::loop_leaf: return "LoopLeaf";
        case SpKind::series: return "Series";
        case SpKind::parallel: return "Parallel";
    }
    return "?";
}

const char* class_name(PartClass c) {
    switch (c) {
        case PartClass::b0: return "B0";
        case PartClass::b1: return "B1";
        case PartClass::b2: return "B2";
    }
    return "?";
}

std::vector<std::size_t> PartsPartition::indices(PartClass c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].cls == c) out.push_back(i);
    return out;
}

namespace {

struct Local {
    const SignedGraph& g;
    const EdgeSet& edges;
    std::vector<std::vector<EdgeId>> inc;

    Local(const SignedGraph& graph, const EdgeSet& es) : g(graph), edges(es), inc(graph.vertex_count()) {
        for (EdgeId e : edges) {
            inc[g.edge(e).u].push_back(e);
            if (!g.edge(e).is_loop()) inc[g.edge(e).v].push_back(e);
        }
    }

    // Vertices reachable from s without entering `removed`, using non-loop edges.
    std::vector<char> reach(VertexId s, const std::vector<char>& removed) const {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId e : inc[u]) {
                VertexId w = g.edge(e).other(u);
                if (seen[w] || removed[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        return seen;
    }

    std::vector<VertexId> some_path(VertexId s, VertexId t) const {
        std::vector<int> prev(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<VertexId> queue{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            VertexId u = queue[i];
            for (EdgeId e : inc[u]) {
                VertexId w = g.edge(e).other(u);
                if (seen[w]) continue;
                seen[w] = 1;
                prev[w] = static_cast<int>(u);
                queue.push_back(w);
            }
        }
        if (!seen[t]) return {};
        std::vector<VertexId> path{t};
        while (path.back() != s) path.push_back(static_cast<VertexId>(prev[path.back()]));
        std::reverse(path.begin(), path.end());
        return path;
    }
};

[[noreturn]] void fail(const std::string& what) { throw PreconditionError("not series-parallel: " + what); }

SpNode make_leaf(const SignedGraph& g, EdgeId e, VertexId s, VertexId t) {
    SpNode n;
    n.edge = e;
    n.edges = {e};
    n.source = s;
    n.target = t;
    n.kind = g.edge(e).is_loop() ? SpKind::loop_leaf : SpKind::leaf;
    return n;
}

// Group edges hanging between terminals: components of the vertices outside
// `terminals` together with their edges; edges joining two terminals form
// their own group. Returns groups and the terminals each touches.
struct Group {
    EdgeSet edges;
    std::set<VertexId> attach;
    bool direct = false;
};

std::vector<Group> groups_between(const Local& lc, const std::vector<char>& is_terminal) {
    const SignedGraph& g = lc.g;
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<Group> groups;
    for (EdgeId e : lc.edges) {
        const Edge& ed = g.edge(e);
        if (is_terminal[ed.u] && is_terminal[ed.v]) continue;
        VertexId start = is_terminal[ed.u] ? ed.v : ed.u;
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(groups.size());
        groups.push_back({});
        std::vector<VertexId> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (EdgeId f : lc.inc[u]) {
                VertexId w = g.edge(f).other(u);
                if (is_terminal[w]) {
                    groups[id].attach.insert(w);
                    continue;
                }
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    for (auto& gr : groups) gr.edges.clear();
    std::vector<Group> direct;
    for (EdgeId e : lc.edges) {
        const Edge& ed = g.edge(e);
        if (is_terminal[ed.u] && is_terminal[ed.v]) {
            Group d;
            d.edges = {e};
            d.attach = {ed.u, ed.v};
            d.direct = true;
            direct.push_back(d);
            continue;
        }
        VertexId inner = is_terminal[ed.u] ? ed.v : ed.u;
        groups[comp[inner]].edges.push_back(e);
    }
    groups.insert(groups.end(), direct.begin(), direct.end());
    return groups;
}

SpNode decompose(const SignedGraph& g, const EdgeSet& edges, VertexId s, VertexId t);

SpNode parallel_split(const SignedGraph& g, const EdgeSet& edges, VertexId s, VertexId t) {
    Local lc(g, edges);
    std::vector<char> term(g.vertex_count(), 0);
    term[s] = term[t] = 1;
    auto groups = groups_between(lc, term);
    if (groups.size() < 2) fail("no series or parallel split between " + std::to_string(s) + " and " + std::to_string(t));
    SpNode node;
    node.kind = SpKind::parallel;
    node.source = s;
    node.target = t;
    node.edges = edges;
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.edges.front() < b.edges.front(); });
    for (auto& gr : groups) {
        if (gr.attach.size() != 2) fail("component hanging from a single terminal");
        node.children.push_back(decompose(g, make_edge_set(gr.edges), s, t));
    }
    return node;
}

SpNode decompose(const SignedGraph& g, const EdgeSet& edges, VertexId s, VertexId t) {
    if (edges.empty()) fail("empty piece");
    if (edges.size() == 1) {
        const Edge& ed = g.edge(edges[0]);
        if (ed.is_loop() ? (s == t && ed.u == s) : (s != t && ((ed.u == s && ed.v == t) || (ed.u == t && ed.v == s))))
            return make_leaf(g, edges[0], s, t);
        fail("single edge does not join the terminals");
    }
    if (s == t) fail("equal terminals on a piece that is not a single loop");

    Local lc(g, edges);
    EdgeSet loops_s, loops_t, core;
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop() && ed.u == s) loops_s.push_back(e);
        else if (ed.is_loop() && ed.u == t) loops_t.push_back(e);
        else core.push_back(e);
    }
    if (core.empty()) fail("terminals not joined");
    Local cl(g, core);
    auto path = cl.some_path(s, t);
    if (path.empty()) fail("terminals not joined");

    // Junctions: internal vertices separating s from t.
    std::vector<VertexId> junctions{s};
    std::vector<char> removed(g.vertex_count(), 0);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        removed[path[i]] = 1;
        if (!cl.reach(s, removed)[t]) junctions.push_back(path[i]);
        removed[path[i]] = 0;
    }
    junctions.push_back(t);

    if (junctions.size() == 2 && loops_s.empty() && loops_t.empty()) return parallel_split(g, edges, s, t);

    std::vector<char> term(g.vertex_count(), 0);
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < junctions.size(); ++i) {
        term[junctions[i]] = 1;
        pos[junctions[i]] = i;
    }
    std::vector<EdgeSet> segment(junctions.size() - 1);
    std::vector<EdgeSet> loops_at(junctions.size());
    loops_at.front() = loops_s;
    loops_at.back() = loops_t;
    for (EdgeId e : core) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop() && term[ed.u]) loops_at[pos[ed.u]].push_back(e);
    }
    EdgeSet rest;
    for (EdgeId e : core) {
        const Edge& ed = g.edge(e);
        if (!(ed.is_loop() && term[ed.u])) rest.push_back(e);
    }
    Local rl(g, rest);
    for (auto& gr : groups_between(rl, term)) {
        if (gr.attach.size() != 2) fail("component hanging from a single junction");
        std::size_t a = pos[*gr.attach.begin()], b = pos[*gr.attach.rbegin()];
        if (a > b) std::swap(a, b);
        if (b != a + 1) fail("edge bypasses a separating vertex");
        for (EdgeId e : gr.edges) segment[a].push_back(e);
    }

    SpNode node;
    node.kind = SpKind::series;
    node.source = s;
    node.target = t;
    node.edges = edges;
    auto add_loops = [&](std::size_t i) {
        for (EdgeId e : make_edge_set(loops_at[i])) node.children.push_back(make_leaf(g, e, junctions[i], junctions[i]));
    };
    for (std::size_t i = 0; i + 1 < junctions.size(); ++i) {
        add_loops(i);
        if (segment[i].empty()) fail("empty segment");
        node.children.push_back(decompose(g, make_edge_set(segment[i]), junctions[i], junctions[i + 1]));
    }
    add_loops(junctions.size() - 1);
    return node;
}

void flatten_into(const SpNode& n, std::vector<EdgeId>& out) {
    if (n.is_leaf()) {
        out.push_back(n.edge);
        return;
    }
    for (const auto& c : n.children) flatten_into(c, out);
}

void render_into(const SignedGraph& g, const SpNode& n, int depth, std::ostringstream& out) {
    out << std::string(2 * depth, ' ') << kind_name(n.kind) << ' ' << n.source << ' ' << n.target;
    if (n.is_leaf()) out << " e" << n.edge << ' ' << sign_char(g.edge(n.edge).sign);
    out << '\n';
    for (const auto& c : n.children) render_into(g, c, depth + 1, out);
}

EdgeSet all_edges(const SignedGraph& g) {
    EdgeSet es(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) es[e] = e;
    return es;
}

void check_terminals(const SignedGraph& g, VertexId x, VertexId y) {
    if (x >= g.vertex_count() || y >= g.vertex_count()) throw std::out_of_range("terminal out of range");
}

}  // namespace

SpNode sp_decompose_edges(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y) {
    check_terminals(g, x, y);
    return decompose(g, edges, x, y);
}

SpTree sp_decompose(const SignedGraph& h, VertexId x, VertexId y) {
    check_terminals(h, x, y);
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (h.incident(v).empty() && v != x && v != y) fail("isolated vertex " + std::to_string(v));
    return {decompose(h, all_edges(h), x, y)};
}

std::vector<EdgeId> flatten(const SpNode& node) {
    std::vector<EdgeId> out;
    flatten_into(node, out);
    return out;
}

std::string render(const SignedGraph& g, const SpNode& node) {
    std::ostringstream out;
    render_into(g, node, 0, out);
    return out.str();
}

PartsPartition parts_of_edges(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y) {
    SpNode root = sp_decompose_edges(g, edges, x, y);
    PartsPartition pp;
    pp.source = x;
    pp.target = y;
    std::vector<const SpNode*> chain;
    if (root.kind == SpKind::series) {
        for (const auto& c : root.children) chain.push_back(&c);
    } else {
        chain.push_back(&root);
    }
    for (const SpNode* c : chain) {
        Part p;
        p.edges = c->edges;
        p.source = c->source;
        p.target = c->target;
        if (c->kind == SpKind::loop_leaf) {
            if (g.edge(c->edge).sign != Sign::negative) throw PreconditionError("positive loop at a junction is not a part");
            p.cls = PartClass::b0;
        } else if (c->kind == SpKind::leaf) {
            p.cls = PartClass::b1;
        } else {
            p.cls = PartClass::b2;
        }
        pp.parts.push_back(std::move(p));
    }
    return pp;
}

PartsPartition parts(const SignedGraph& h, VertexId x, VertexId y) {
    sp_decompose(h, x, y);
    return parts_of_edges(h, all_edges(h), x, y);
}

std::vector<EdgeSet> pieces_at_edges(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y) {
    check_terminals(g, x, y);
    if (x == y) throw PreconditionError("pieces need two distinct vertices");
    Local lc(g, edges);
    std::vector<char> term(g.vertex_count(), 0);
    term[x] = term[y] = 1;
    EdgeSet loops, rest;
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop() && term[ed.u]) loops.push_back(e);
        else rest.push_back(e);
    }
    Local rl(g, rest);
    auto groups = groups_between(rl, term);
    std::vector<EdgeSet> out;
    for (auto& gr : groups) {
        if (gr.attach.size() != 2) throw PreconditionError("component attached to only one of the two vertices");
        out.push_back(make_edge_set(gr.edges));
    }
    if (out.empty()) {
        out.push_back(make_edge_set(loops));
        return out;
    }
    std::sort(out.begin(), out.end());
    for (EdgeId e : loops) out.front().push_back(e);
    out.front() = make_edge_set(out.front());
    if (out.size() == 1) out.front() = edges;
    return out;
}

std::vector<EdgeSet> pieces_at(const SignedGraph& g, VertexId x, VertexId y) { return pieces_at_edges(g, all_edges(g), x, y); }

std::size_t max_parallel_pieces(const SignedGraph& g, VertexId x, VertexId y) { return pieces_at(g, x, y).size(); }

bool is_k4_minor_free(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::set<VertexId>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<VertexId> work;
    for (VertexId v = 0; v < n; ++v) work.push_back(v);
    std::vector<char> alive(n, 1);
    while (!work.empty()) {
        VertexId v = work.back();
        work.pop_back();
        if (!alive[v]) continue;
        if (adj[v].size() <= 1) {
            for (VertexId w : adj[v]) {
                adj[w].erase(v);
                work.push_back(w);
            }
            adj[v].clear();
            alive[v] = 0;
        } else if (adj[v].size() == 2) {
            VertexId a = *adj[v].begin(), b = *adj[v].rbegin();
            adj[a].erase(v);
            adj[b].erase(v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj[v].clear();
            alive[v] = 0;
            work.push_back(a);
            work.push_back(b);
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (!adj[v].empty()) return false;
    return true;
}

}  // namespace sigcover
