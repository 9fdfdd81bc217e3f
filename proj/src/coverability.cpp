#include "sigcover/coverability.hpp"

#include <algorithm>

namespace sigcover {

std::string CoverabilityReport::reason() const {
    if (coverable) return {};
    if (bridge) return "bridge=" + std::to_string(*bridge);
    return "epsilon=" + std::to_string(epsilon);
}

namespace {

// Vertex side of g-b reachable from `start`, or the whole component when b is absent.
std::vector<VertexId> side_of(const SignedGraph& g, EdgeId b, VertexId start) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{start}, out{start};
    seen[start] = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(u)) {
            if (e == b) continue;
            VertexId w = g.edge(e).other(u);
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool side_balanced(const SignedGraph& g, EdgeId b, const std::vector<VertexId>& side) {
    EdgeSet es;
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : side) in[v] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (e != b && in[g.edge(e).u]) es.push_back(e);
    return is_balanced(edge_subgraph(g, es).graph);
}

}  // namespace

CoverabilityReport is_coverable(const SignedGraph& g, std::size_t vertex_cap) {
    if (!is_connected(g)) throw PreconditionError("coverability criterion requires a connected graph");
    CoverabilityReport r;
    r.epsilon = negativeness(g, vertex_cap);
    // Both clauses can fail at once; the bridge is the more specific witness.
    for (EdgeId b : bridges(g)) {
        for (VertexId end : {g.edge(b).u, g.edge(b).v}) {
            auto side = side_of(g, b, end);
            if (side_balanced(g, b, side)) {
                r.bridge = b;
                r.balanced_side = side;
                return r;
            }
        }
    }
    r.coverable = r.epsilon != 1;
    return r;
}

bool is_coverable_oracle(const SignedGraph& g, std::size_t cap) {
    std::vector<char> covered(g.edge_count(), 0);
    for (const auto& sc : enumerate_signed_circuits(g, cap))
        for (EdgeId e : sc.edges) covered[e] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

CoverabilityReport is_coverable_per_component(const SignedGraph& g, std::size_t vertex_cap) {
    CoverabilityReport total;
    total.coverable = true;
    for (const auto& comp : connected_components(g)) {
        std::vector<char> in(g.vertex_count(), 0);
        for (VertexId v : comp) in[v] = 1;
        EdgeSet es;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (in[g.edge(e).u]) es.push_back(e);
        if (es.empty()) continue;
        auto sub = edge_subgraph(g, es);
        auto r = is_coverable(sub.graph, vertex_cap);
        total.epsilon += r.epsilon;
        if (!r.coverable && total.coverable) {
            total.coverable = false;
            if (r.bridge) {
                total.bridge = sub.edge_origin[*r.bridge];
                for (VertexId v : r.balanced_side) total.balanced_side.push_back(sub.vertex_origin[v]);
            } else {
                total.epsilon = r.epsilon;
                return total;
            }
        }
    }
    return total;
}

}  // namespace sigcover
