#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "sigcover/graph.hpp"

namespace sigcover {

using Terminals = std::pair<VertexId, VertexId>;

struct GraphFile {
    SignedGraph graph;
    std::optional<Terminals> terminals;
};

// Line format: "v <n>" once, then "e <u> <v> <+|->" per edge and optionally
// "t <x> <y>". '#' starts a comment. Throws ParseError with a line number.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_string(const std::string& text);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const SignedGraph& g, const std::optional<Terminals>& terminals = std::nullopt);
std::string graph_to_string(const SignedGraph& g, const std::optional<Terminals>& terminals = std::nullopt);

}  // namespace sigcover
