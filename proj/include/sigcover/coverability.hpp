#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigcover/circuits.hpp"
#include "sigcover/negativeness.hpp"

namespace sigcover {

struct CoverabilityReport {
    bool coverable = false;
    std::size_t epsilon = 0;
    // Set when the bridge clause fails: the bridge and the vertices of the balanced side.
    std::optional<EdgeId> bridge;
    std::vector<VertexId> balanced_side;

    // "epsilon=1", "bridge=<id>" or empty when coverable.
    std::string reason() const;
};

// Criterion on a connected graph: epsilon != 1 and no bridge b such that g-b
// has a balanced component. Throws PreconditionError on disconnected input.
CoverabilityReport is_coverable(const SignedGraph& g, std::size_t vertex_cap = default_epsilon_vertex_cap);

// Every edge lies in some signed circuit.
bool is_coverable_oracle(const SignedGraph& g, std::size_t cap = default_signed_circuit_cap);

// Per-component criterion used by the command line; isolated vertices are ignored.
CoverabilityReport is_coverable_per_component(const SignedGraph& g,
                                              std::size_t vertex_cap = default_epsilon_vertex_cap);

}  // namespace sigcover
