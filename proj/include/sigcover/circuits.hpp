#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sigcover/graph.hpp"

namespace sigcover {

inline constexpr std::size_t default_circuit_cap = 100000;
inline constexpr std::size_t default_signed_circuit_cap = 100000;

// Connected 2-regular edge set; a loop alone or two parallel edges qualify.
struct Circuit {
    EdgeSet edges;
    Sign sign = Sign::positive;

    bool balanced() const { return sign == Sign::positive; }
    bool operator==(const Circuit&) const = default;
};

struct Barbell {
    Circuit first;
    Circuit second;
    std::vector<EdgeId> path;  // ordered from first to second; empty for a short barbell

    bool is_short() const { return path.empty(); }
    EdgeSet edges() const;
    bool operator==(const Barbell&) const = default;
};

enum class SignedCircuitKind { balanced, short_barbell, long_barbell };

const char* kind_name(SignedCircuitKind k);

struct SignedCircuit {
    std::variant<Circuit, Barbell> shape;
    EdgeSet edges;

    SignedCircuitKind kind() const;
    bool operator==(const SignedCircuit& o) const { return edges == o.edges; }
};

// Simple path with distinct end vertices, edges ordered from `from` to `to`.
struct XyPath {
    VertexId from = 0;
    VertexId to = 0;
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;  // from ... to
    Sign sign = Sign::positive;

    EdgeSet edge_set() const { return make_edge_set(edges); }
};

// xy-path (possibly trivial) followed by an unbalanced circuit through y.
struct Tadpole {
    VertexId tail = 0;
    VertexId head = 0;                // where the path meets the circuit
    std::vector<EdgeId> path;         // ordered from tail to head
    std::vector<VertexId> path_vertices;
    Circuit circuit;

    EdgeSet edges() const;
};

std::vector<Circuit> enumerate_circuits(const SignedGraph& g, std::size_t cap = default_circuit_cap);

enum class Balance { balanced, unbalanced };

// Throws PreconditionError when the edge set is not a circuit of g.
Balance classify_circuit(const SignedGraph& g, const EdgeSet& edges);

std::optional<Circuit> as_circuit(const SignedGraph& g, const EdgeSet& edges);

std::vector<SignedCircuit> enumerate_signed_circuits(const SignedGraph& g,
                                                     std::size_t cap = default_signed_circuit_cap,
                                                     std::size_t circuit_cap = default_circuit_cap);

std::optional<SignedCircuit> is_signed_circuit(const SignedGraph& g, const EdgeSet& edges);

std::optional<Tadpole> is_tadpole_at(const SignedGraph& g, const EdgeSet& edges, VertexId x);

std::optional<XyPath> as_xy_path(const SignedGraph& g, const EdgeSet& edges, VertexId x, VertexId y);

std::vector<XyPath> enumerate_xy_paths(const SignedGraph& g, VertexId x, VertexId y,
                                       std::size_t cap = default_signed_circuit_cap);

// All tadpoles with tail x whose circuit is one of the given unbalanced circuits.
std::vector<Tadpole> enumerate_tadpoles(const SignedGraph& g, VertexId x, const std::vector<Circuit>& circuits,
                                        std::size_t cap = default_signed_circuit_cap);

}  // namespace sigcover
