#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sigcover/types.hpp"

namespace sigcover {

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Sign sign = Sign::positive;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

// Signed multigraph. Edge ids are positions in the edge list; loops and
// parallel edges are allowed.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(std::size_t vertex_count, std::vector<Edge> edges = {});

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident edge ids of v; a loop is listed once.
    const std::vector<EdgeId>& incident(VertexId v) const { return incidence_.at(v); }
    // Degree with loops counted twice.
    std::size_t degree(VertexId v) const;

    bool operator==(const SignedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    // Builders returning new graphs.
    SignedGraph with_edge(VertexId u, VertexId v, Sign s) const;
    SignedGraph with_vertices(std::size_t extra) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

using SwitchSet = std::vector<VertexId>;

SignedGraph switch_at(const SignedGraph& g, const SwitchSet& s);

bool is_balanced(const SignedGraph& g);

// A switching that makes every non-loop edge inside each balanced component positive.
// Returns nullopt when g is unbalanced.
std::optional<SwitchSet> balancing_switch(const SignedGraph& g);

Sign sign_of(const SignedGraph& g, std::span<const EdgeId> edge_ids);

struct Suppression {
    SignedGraph graph;
    // new edge id -> old edge ids in path order
    std::vector<std::vector<EdgeId>> edge_paths;
    // old vertex id -> new vertex id, nullopt for suppressed vertices
    std::vector<std::optional<VertexId>> vertex_map;
};

// Is v a 2-vertex: degree two carried by two distinct non-loop edges.
bool is_two_vertex(const SignedGraph& g, VertexId v);

Suppression suppress(const SignedGraph& g);

struct BlockStructure {
    std::vector<EdgeSet> blocks;
    std::vector<VertexId> cut_vertices;
};

BlockStructure blocks_and_cuts(const SignedGraph& g);

// Vertex components; isolated vertices form their own components.
std::vector<std::vector<VertexId>> connected_components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);
bool is_two_connected(const SignedGraph& g);

// Edge ids that are bridges (loops never are).
std::vector<EdgeId> bridges(const SignedGraph& g);

// Subgraph spanned by an edge subset. Vertices keep their ids unless compact
// is requested; edge i of the result is edge_ids[i] of g.
struct Subgraph {
    SignedGraph graph;
    std::vector<EdgeId> edge_origin;
    std::vector<VertexId> vertex_origin;               // new -> old
    std::vector<std::optional<VertexId>> vertex_image;  // old -> new
};

Subgraph edge_subgraph(const SignedGraph& g, const EdgeSet& edge_ids);

// Vertices touched by an edge set, sorted.
std::vector<VertexId> vertices_of(const SignedGraph& g, std::span<const EdgeId> edge_ids);

}  // namespace sigcover
