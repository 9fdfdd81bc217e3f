#include "sigcover/negativeness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace sigcover {

namespace detail {

namespace {

std::size_t frustration_at(const std::vector<MaskEdge>& edges, std::uint64_t mask) {
    std::size_t c = 0;
    for (const auto& e : edges) c += ((mask >> e.u) ^ (mask >> e.v) ^ e.negative) & 1u;
    return c;
}

}  // namespace

std::size_t min_frustration_serial(const std::vector<MaskEdge>& edges, unsigned free_bits) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    for (std::uint64_t mask = 0; mask < total; ++mask) best = std::min(best, frustration_at(edges, mask));
    return best;
}

std::size_t min_frustration_parallel(const std::vector<MaskEdge>& edges, unsigned free_bits) {
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    std::vector<std::vector<std::size_t>> touching(free_bits);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u < free_bits) touching[edges[i].u].push_back(i);
        if (edges[i].v < free_bits) touching[edges[i].v].push_back(i);
    }
    const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, 1u << 12));
    const std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    std::size_t best = std::numeric_limits<std::size_t>::max();

#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t c = 0; c < chunks; ++c) {
        // Walk the Gray code g(i) = i ^ (i >> 1) over this chunk, updating the
        // frustration count incrementally when one vertex flips.
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        std::uint64_t mask = begin ^ (begin >> 1);
        std::vector<unsigned char> frustrated(edges.size());
        std::size_t count = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            frustrated[i] = ((mask >> edges[i].u) ^ (mask >> edges[i].v) ^ edges[i].negative) & 1u;
            count += frustrated[i];
        }
        std::size_t local = count;
        for (std::uint64_t i = begin + 1; i < end; ++i) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
            mask ^= std::uint64_t{1} << bit;
            for (std::size_t k : touching[bit]) {
                count -= frustrated[k];
                frustrated[k] ^= 1u;
                count += frustrated[k];
            }
            local = std::min(local, count);
        }
        best = std::min(best, local);
    }
    return best;
}

}  // namespace detail

std::size_t negativeness(const SignedGraph& g, std::size_t vertex_cap, Kernel kernel) {
    std::size_t total = 0;
    std::vector<int> local(g.vertex_count(), -1);
    for (const auto& comp : connected_components(g)) {
        if (comp.size() > vertex_cap) {
            throw CapExceeded("instance too large for exact epsilon: component of " + std::to_string(comp.size()) +
                              " vertices exceeds cap " + std::to_string(vertex_cap));
        }
        // The first vertex of the component takes the highest local index and is never switched.
        const unsigned free_bits = static_cast<unsigned>(comp.size() - 1);
        local[comp[0]] = static_cast<int>(free_bits);
        for (std::size_t i = 1; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i - 1);
        std::vector<detail::MaskEdge> es;
        std::vector<bool> seen(g.edge_count(), false);
        for (VertexId v : comp) {
            for (EdgeId e : g.incident(v)) {
                if (seen[e]) continue;
                seen[e] = true;
                const Edge& ed = g.edge(e);
                const unsigned neg = ed.sign == Sign::negative ? 1u : 0u;
                if (ed.is_loop()) {
                    total += neg;
                } else {
                    es.push_back({static_cast<unsigned>(local[ed.u]), static_cast<unsigned>(local[ed.v]), neg});
                }
            }
        }
        if (es.empty()) continue;
        total += kernel == Kernel::serial ? detail::min_frustration_serial(es, free_bits)
                                          : detail::min_frustration_parallel(es, free_bits);
    }
    return total;
}

}  // namespace sigcover
