#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigcover/graph_io.hpp"

namespace sigcover {

enum class GadgetId { R0, R1, R2, R3, R4, R5, D1, D2, FIG1_CHAIN, TIGHTNESS };

const char* gadget_name(GadgetId id);
std::optional<GadgetId> gadget_from_name(const std::string& name);
std::vector<GadgetId> all_gadgets();

struct Gadget {
    SignedGraph graph;
    std::optional<Terminals> terminals;
};

// Frozen transcriptions. Vertex 0 is x and vertex 1 is y for R0..R5;
// D1 is x=0, m=1, y=2; D2 is x=0, a=1, b=2, y=3.
Gadget gadget(GadgetId id);

// Counter-based stream: splitmix64 over seed + k * golden.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform();                          // [0, 1)
    std::uint64_t below(std::uint64_t bound);  // [0, bound)
    bool chance(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct SpParams {
    std::size_t max_parts = 3;
    std::size_t max_depth = 4;
    double loop_prob = 0.15;
    double neg_prob = 0.4;
    std::size_t max_vertices = 12;
    std::size_t max_edges = 20;
    bool no_two_vertices = false;
};

// Random connected K4-minor-free signed multigraph from a random SP tree,
// with optional negative loops at series junctions. Deterministic in seed.
SignedGraph random_sp_signed(const SpParams& params, std::uint64_t seed);

struct Corpus {
    std::vector<SignedGraph> graphs;
    std::vector<std::uint64_t> seeds;  // generator seed of each member
    std::size_t draws = 0;
    std::size_t rejected = 0;
};

// First n generated graphs passing the coverability criterion. Throws
// CapExceeded when more than draw_cap draws are needed.
Corpus coverable_corpus(std::size_t n, const SpParams& params, std::uint64_t seed, std::size_t draw_cap = 0);

}  // namespace sigcover
