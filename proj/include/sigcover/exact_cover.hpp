#pragma once

#include <cstdint>
#include <vector>

namespace sigcover {

// Find non-negative integer multiplicities x_r with sum_{r covers c} x_r = demand[c]
// for every column c. Rows list the columns they cover, each at most once.
struct ExactCoverProblem {
    std::size_t columns = 0;
    std::vector<int> demand;
    std::vector<std::vector<std::uint32_t>> rows;
};

struct ExactCoverResult {
    bool feasible = false;
    std::vector<int> multiplicity;  // per row
    std::uint64_t nodes = 0;
};

// Depth-first search: pick the column with positive residual and the fewest
// fitting rows; branch on taking one more copy of its first fitting row or
// forbidding that row. Throws CapExceeded past node_cap nodes.
ExactCoverResult solve_exact_cover(const ExactCoverProblem& problem, std::uint64_t node_cap);

// Necessary condition for feasibility: the demand vector lies in the span of
// the rows over GF(p), p prime.
bool congruence_solvable(const ExactCoverProblem& problem, int p);

// Minimum total weight of a 0/1 row selection covering every column at least
// once. Returns feasible=false when some column has no row.
struct SetCoverResult {
    bool feasible = false;
    std::vector<int> chosen;  // 0/1 per row
    std::uint64_t cost = 0;
    std::uint64_t nodes = 0;
};

SetCoverResult solve_min_set_cover(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows,
                                   const std::vector<std::uint64_t>& weight, std::uint64_t node_cap);

}  // namespace sigcover
