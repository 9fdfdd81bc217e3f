#pragma once

#include <string>
#include <vector>

#include "sigcover/graph.hpp"

namespace sigcover {

enum class SpKind { leaf, loop_leaf, series, parallel };

const char* kind_name(SpKind k);

struct SpNode {
    SpKind kind = SpKind::leaf;
    VertexId source = 0;
    VertexId target = 0;
    EdgeId edge = 0;  // leaves only
    std::vector<SpNode> children;
    EdgeSet edges;  // every edge below this node

    bool is_leaf() const { return kind == SpKind::leaf || kind == SpKind::loop_leaf; }
};

struct SpTree {
    SpNode root;
};

// Two-terminal series/parallel decomposition. Children are ordered along the
// chain for series nodes and by smallest edge id for parallel nodes; loops at
// series junctions are LoopLeaf children. Throws PreconditionError when h is
// not decomposable with respect to (x, y).
SpTree sp_decompose(const SignedGraph& h, VertexId x, VertexId y);

// Same on the subgraph spanned by an edge subset of g.
SpNode sp_decompose_edges(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y);

// Leaf edge ids in tree order.
std::vector<EdgeId> flatten(const SpNode& node);

// Indented text rendering used by the command line.
std::string render(const SignedGraph& g, const SpNode& node);

enum class PartClass { b0, b1, b2 };

const char* class_name(PartClass c);

struct Part {
    EdgeSet edges;
    VertexId source = 0;
    VertexId target = 0;
    PartClass cls = PartClass::b1;
};

struct PartsPartition {
    VertexId source = 0;
    VertexId target = 0;
    std::vector<Part> parts;

    std::vector<std::size_t> indices(PartClass c) const;
};

PartsPartition parts(const SignedGraph& h, VertexId x, VertexId y);
PartsPartition parts_of_edges(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y);

// Maximal decomposition of g at {x, y}: one edge set per piece, ordered by
// smallest edge id. Loops at x or y join the piece holding the smallest edge id.
// A pair that does not separate g yields the whole edge set as one piece.
std::vector<EdgeSet> pieces_at(const SignedGraph& g, VertexId x, VertexId y);
std::vector<EdgeSet> pieces_at_edges(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y);

std::size_t max_parallel_pieces(const SignedGraph& g, VertexId x, VertexId y);

// Signs and loops are ignored: minors are taken of the underlying graph.
bool is_k4_minor_free(const SignedGraph& g);

}  // namespace sigcover
