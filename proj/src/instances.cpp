#include "sigcover/instances.hpp"

#include "sigcover/coverability.hpp"

namespace sigcover {

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

Gadget build(std::size_t n, std::vector<Edge> edges, std::optional<Terminals> t) {
    return {SignedGraph(n, std::move(edges)), t};
}

}  // namespace

const char* gadget_name(GadgetId id) {
    switch (id) {
        case GadgetId::R0: return "R0";
        case GadgetId::R1: return "R1";
        case GadgetId::R2: return "R2";
        case GadgetId::R3: return "R3";
        case GadgetId::R4: return "R4";
        case GadgetId::R5: return "R5";
        case GadgetId::D1: return "D1";
        case GadgetId::D2: return "D2";
        case GadgetId::FIG1_CHAIN: return "FIG1_CHAIN";
        case GadgetId::TIGHTNESS: return "TIGHTNESS";
    }
    return "?";
}

std::vector<GadgetId> all_gadgets() {
    return {GadgetId::R0, GadgetId::R1, GadgetId::R2, GadgetId::R3,         GadgetId::R4,
            GadgetId::R5, GadgetId::D1, GadgetId::D2, GadgetId::FIG1_CHAIN, GadgetId::TIGHTNESS};
}

std::optional<GadgetId> gadget_from_name(const std::string& name) {
    for (GadgetId id : all_gadgets())
        if (name == gadget_name(id)) return id;
    return std::nullopt;
}

Gadget gadget(GadgetId id) {
    switch (id) {
        case GadgetId::R0:
            return build(2, {{0, 1, P}, {0, 1, N}}, Terminals{0, 1});
        case GadgetId::R1:
            // triangle x y z with a negative loop at the apex z=2
            return build(3, {{0, 1, P}, {0, 2, P}, {1, 2, P}, {2, 2, N}}, Terminals{0, 1});
        case GadgetId::R2:
            // triangle x y w, negative edge parallel to w-y
            return build(3, {{0, 1, P}, {0, 2, P}, {2, 1, P}, {2, 1, N}}, Terminals{0, 1});
        case GadgetId::R3:
            // 4-cycle x a b y (a=2 above x, b=3 above y), negative edge parallel to a-b
            return build(4, {{0, 1, P}, {0, 2, P}, {2, 3, P}, {3, 1, P}, {2, 3, N}}, Terminals{0, 1});
        case GadgetId::R4:
            return build(4, {{0, 1, P}, {0, 2, P}, {2, 3, P}, {3, 1, P}, {2, 3, N}, {0, 3, P}}, Terminals{0, 1});
        case GadgetId::R5:
            // b=2, p=3, q=4
            return build(5, {{0, 1, P}, {1, 2, P}, {0, 2, P}, {0, 3, P}, {3, 4, P}, {3, 4, N}, {4, 2, P}},
                         Terminals{0, 1});
        case GadgetId::D1:
            return build(3, {{0, 1, P}, {1, 2, P}, {0, 1, N}}, Terminals{0, 2});
        case GadgetId::D2:
            return build(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {1, 2, N}}, Terminals{0, 3});
        case GadgetId::FIG1_CHAIN:
            return build(6,
                         {{0, 1, N},
                          {1, 1, N},
                          {1, 2, P},
                          {2, 3, N},
                          {2, 3, P},
                          {3, 4, N},
                          {4, 4, N},
                          {4, 5, N},
                          {4, 5, P}},
                         Terminals{0, 5});
        case GadgetId::TIGHTNESS:
            // x1=0 x2=1 y1=2 y2=3 z1=4 z2=5
            return build(6,
                         {{0, 1, P}, {0, 1, P}, {2, 3, P}, {2, 3, N}, {4, 5, P}, {4, 5, N}, {1, 2, P}, {3, 4, P}, {5, 0, P}},
                         std::nullopt);
    }
    throw PreconditionError("unknown gadget");
}

std::uint64_t RandomStream::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double RandomStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t RandomStream::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    RandomStream s(seed ^ (index * 0xD1B54A32D192ED03ull));
    return s.next();
}

namespace {

struct Builder {
    const SpParams& p;
    RandomStream rng;
    std::size_t n = 2;
    std::vector<Edge> edges;

    Sign sign() { return rng.chance(p.neg_prob) ? N : P; }

    void grow(VertexId s, VertexId t, std::size_t depth) {
        const double leaf = depth >= p.max_depth ? 1.0 : 0.25 + 0.5 * static_cast<double>(depth) / static_cast<double>(p.max_depth + 1);
        if (p.max_parts < 2 || rng.chance(leaf)) {
            edges.push_back({s, t, sign()});
            return;
        }
        const std::size_t k = 2 + rng.below(p.max_parts - 1);
        if (rng.chance(0.5)) {
            VertexId prev = s;
            for (std::size_t i = 0; i < k; ++i) {
                VertexId next = i + 1 == k ? t : static_cast<VertexId>(n++);
                grow(prev, next, depth + 1);
                if (next != t && rng.chance(p.loop_prob)) edges.push_back({next, next, N});
                prev = next;
            }
        } else {
            for (std::size_t i = 0; i < k; ++i) grow(s, t, depth + 1);
        }
    }
};

}  // namespace

SignedGraph random_sp_signed(const SpParams& params, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
        Builder b{params, RandomStream(derive_seed(seed, attempt)), 2, {}};
        b.grow(0, 1, 0);
        for (VertexId v : {0u, 1u})
            if (b.rng.chance(params.loop_prob)) b.edges.push_back({v, v, N});
        SignedGraph g(b.n, std::move(b.edges));
        if (g.vertex_count() > params.max_vertices || g.edge_count() > params.max_edges) continue;
        if (params.no_two_vertices) {
            bool ok = true;
            for (VertexId v = 0; v < g.vertex_count(); ++v) ok = ok && !is_two_vertex(g, v);
            if (!ok) continue;
        }
        return g;
    }
    throw CapExceeded("no graph within the size limits after 100000 attempts");
}

Corpus coverable_corpus(std::size_t n, const SpParams& params, std::uint64_t seed, std::size_t draw_cap) {
    if (draw_cap == 0) draw_cap = 1000 * n + 100;
    Corpus c;
    while (c.graphs.size() < n) {
        if (c.draws >= draw_cap) throw CapExceeded("corpus draw cap " + std::to_string(draw_cap) + " reached");
        std::uint64_t s = derive_seed(seed, c.draws++);
        SignedGraph g = random_sp_signed(params, s);
        if (is_coverable(g).coverable) {
            c.graphs.push_back(std::move(g));
            c.seeds.push_back(s);
        } else {
            ++c.rejected;
        }
    }
    return c;
}

}  // namespace sigcover
