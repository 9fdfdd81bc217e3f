#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sigcover/cover.hpp"

namespace sigcover {

struct OracleCaps {
    std::size_t circuits = default_signed_circuit_cap;
    std::uint64_t nodes = 10'000'000;
};

struct SolveReport {
    bool feasible = false;
    std::optional<CoverFamily> family;
    std::uint64_t nodes_explored = 0;
    double wall_seconds = 0;
};

// Exact decision of whether the signed circuits of g admit integer
// multiplicities covering every edge exactly k times.
SolveReport k_cover_feasible(const SignedGraph& g, std::size_t k, const OracleCaps& caps = {});

// Least k in [1, k_max] with a k-cover.
std::optional<std::size_t> min_k_with_cover(const SignedGraph& g, std::size_t k_max, const OracleCaps& caps = {});

struct LengthReport {
    std::uint64_t length = 0;
    CoverFamily family;
    std::uint64_t nodes_explored = 0;
    double wall_seconds = 0;
};

// Minimum total length of a family of signed circuits covering every edge at
// least once. Throws PreconditionError when g has an edge in no signed circuit.
LengthReport min_cover_length(const SignedGraph& g, const OracleCaps& caps = {});

// Side conditions for the Psi-cover search.
struct PsiSearchOptions {
    int t = 2;
    bool star = false;
    bool x_tadpoles_avoid_y = false;
    bool y_tadpoles_avoid_x = false;
    // exactly this many tadpoles at y avoid x (the rest contain x)
    std::optional<int> y_tadpoles_avoiding_x;
    // both x-tadpoles avoid y, one y-tadpole avoids x, another has an xy edge on its path
    bool split_y_shape = false;
};

// Exact search for a Psi_xy(t) cover of h with the given side conditions.
std::optional<PsiCover> find_psi_cover(const SignedGraph& h, VertexId x, VertexId y, const PsiSearchOptions& opt,
                                       const OracleCaps& caps = {}, std::uint64_t* nodes = nullptr);

// Lower-level searches for the cover constructions: each edge carries its own
// demand and a filter may drop candidate members.
using RowFilter = std::function<bool(Role, const EdgeSet&)>;

std::optional<std::vector<std::pair<Role, EdgeSet>>> find_psi_members(const SignedGraph& h, VertexId x, VertexId y,
                                                                       const PsiSearchOptions& opt,
                                                                       const std::vector<int>& edge_demand,
                                                                       const RowFilter& keep, const OracleCaps& caps = {},
                                                                       std::uint64_t* nodes = nullptr);

// Signed circuits of g (unsuppressed) with the given per-edge multiplicities.
std::optional<std::vector<EdgeSet>> find_cover_members(const SignedGraph& g, const std::vector<int>& edge_demand,
                                                       const RowFilter& keep, const OracleCaps& caps = {});

}  // namespace sigcover
