#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigcover/cover.hpp"
#include "sigcover/instances.hpp"
#include "sigcover/oracle.hpp"
#include "sigcover/sp.hpp"

namespace sigcover {

// ---------------------------------------------------------------- shapes

// Side conditions a Psi-cover may be asked to satisfy.
enum class PsiShape {
    plain,
    star,            // t=2, star condition at both terminals
    split_y,         // x-tadpoles avoid y; one y-tadpole avoids x, the other has an xy edge on its path
    one_y_avoids_x,  // exactly one tadpole at y avoids x
    clean,           // no x-tadpole contains y and no y-tadpole contains x
    x_avoids_y,      // no x-tadpole contains y
};

const char* shape_name(PsiShape s);
std::optional<PsiShape> shape_from_name(const std::string& s);
PsiSearchOptions search_options(PsiShape shape, int t);

// Checks the shape's side conditions on a cover of h (verification of the
// cover itself is separate).
bool has_shape(const SignedGraph& h, const PsiCover& p, PsiShape shape);

// Psi-covers of pieces are kept in the edge ids of an ambient graph g; `piece`
// lists the piece's edges and p.x, p.y its terminals.
Verdict verify_psi_cover_on(const SignedGraph& g, const EdgeSet& piece, const PsiCover& p);
std::optional<PsiCover> find_psi_cover_on(const SignedGraph& g, const EdgeSet& piece, VertexId x, VertexId y,
                                          PsiShape shape, int t, const OracleCaps& caps = {});

// Re-parses role-tagged members against g.
PsiCover reparse(const SignedGraph& g, VertexId x, VertexId y, const PsiCover& p);

// ---------------------------------------------------------------- tables

enum class Orientation { xy, yx };

// Graph a frozen table refers to. Keys are gadget names ("R2") or triangle
// extensions ("R2+z": the gadget plus z with yz positive and xz negative).
struct TableGraph {
    SignedGraph graph;
    VertexId x = 0;  // terminals of the gadget itself
    VertexId y = 1;
};
TableGraph table_graph(const std::string& key);

struct TableEntry {
    std::string key;
    Orientation orientation = Orientation::xy;
    int t = 2;
    PsiShape shape = PsiShape::plain;
    std::vector<std::pair<Role, EdgeSet>> members;
};
const std::vector<TableEntry>& table_entries();

// Covers asserted for the small gadgets: R2 at (y,x) for every t, R2 at (x,y)
// with t=2 and exactly one y-tadpole avoiding x, R3 star, R4/R5 split shape.
// Returns nullopt for anything else.
std::optional<PsiCover> base_psi_cover(GadgetId gadget, Orientation o, int t, bool star);

// Any frozen entry, including the extra shapes used by the builder.
std::optional<PsiCover> table_psi_cover(const std::string& key, Orientation o, int t, PsiShape shape);

// An isomorphism from a gadget onto a piece of g mapping the gadget's
// terminals to (x, y), such that the signs agree up to switching.
struct GadgetMatch {
    std::vector<EdgeId> edge_map;  // gadget edge -> g edge
    std::vector<VertexId> vertex_map;
};
std::optional<GadgetMatch> match_gadget(const SignedGraph& g, const EdgeSet& piece, VertexId x, VertexId y,
                                        const SignedGraph& gadget, VertexId gx, VertexId gy);

// Moves a cover of a table graph onto the matched piece.
PsiCover transport(const SignedGraph& g, const PsiCover& p, const GadgetMatch& m);

// ---------------------------------------------------------------- chains

struct ThetaPattern {
    std::array<Sign, 4> signs{Sign::positive, Sign::positive, Sign::negative, Sign::negative};

    static ThetaPattern mixed() { return {}; }
    static ThetaPattern all_negative() {
        return {{Sign::negative, Sign::negative, Sign::negative, Sign::negative}};
    }
    bool admissible() const;
    bool operator==(const ThetaPattern&) const = default;
};

// Signed-subgraph 6-cover of a chain x0..xn: signed circuits, two copies of
// every negative loop part, four x0xn-paths with signs theta and two tadpoles
// at each end.
struct ChainCover {
    VertexId source = 0;
    VertexId target = 0;
    std::vector<SignedCircuit> circuits;
    std::vector<EdgeId> loops;
    std::vector<XyPath> paths;
    std::vector<Tadpole> tadpoles_source;
    std::vector<Tadpole> tadpoles_target;

    std::vector<std::size_t> coverage(std::size_t edge_count) const;
};

// Psi(2)-covers of the B2 parts, keyed by part index, in the ids of h.
using PartCovers = std::map<std::size_t, PsiCover>;

ChainCover series_compose(const SignedGraph& h, const PartsPartition& chain, const PartCovers& psi_inputs,
                          const ThetaPattern& theta);

// Coverage, member shapes, path signs equal to theta, and tadpole circuits
// inside the first and last B0/B2 parts.
Verdict verify_chain_cover(const SignedGraph& h, const PartsPartition& chain, const ChainCover& c,
                           const ThetaPattern& theta);

enum class SeriesStatus { psi2_clean, left_obstructed, right_obstructed };
const char* status_name(SeriesStatus s);

struct SeriesPsi {
    SeriesStatus status = SeriesStatus::psi2_clean;
    std::optional<PsiCover> psi;  // set when clean
};

SeriesPsi series_psi_status(const SignedGraph& h, const PartsPartition& chain, const PartCovers& psi_inputs);

// ---------------------------------------------------------------- two-sums

// g = P(H1, H2) with H2 given by its edges and terminals; g_prime = P(H1, D)
// where D is D1 (digon at x) or D2. Edges of H1 come first in g_prime.
struct TwoSum {
    SignedGraph g;
    EdgeSet h2;
    VertexId x = 0;
    VertexId y = 0;
    GadgetId gadget = GadgetId::D2;
    SignedGraph g_prime;
    std::vector<EdgeId> h1_edges;       // g_prime edge i (< size) is g edge h1_edges[i]
    std::vector<EdgeId> gadget_edges;   // e1.. in g_prime, numbered as in the gadget
    VertexId x_prime = 0;
    VertexId y_prime = 0;
};

TwoSum make_two_sum(const SignedGraph& g, const EdgeSet& h2, VertexId x, VertexId y, GadgetId gadget);

// Shape the Psi-cover of H2 must have for the gadget.
PsiShape two_sum_shape(GadgetId gadget);

// Number t of members of a 6-cover of g_prime that cross D1 as a positive path
// (always 2 for D2). Throws PreconditionError on an unclassifiable trace.
int two_sum_t(const TwoSum& s, const CoverFamily& f_prime);

// Splices a Psi-cover of H2 (ids of g, terminals x, y) into a 6-cover of g_prime.
CoverFamily two_sum_replace(const TwoSum& s, const CoverFamily& f_prime, const PsiCover& psi);

// ---------------------------------------------------------------- triangles and double blocks

// Psi*-cover of the piece h + {yz, xz} with terminals (x, z). h is given by
// edges of g with terminals (x, y) and an xy edge; z lies outside h. Without
// psi_star the piece must match one of the tabled small cases.
PsiCover triangle_extend(const SignedGraph& g, const EdgeSet& h, VertexId x, VertexId y, VertexId z, EdgeId yz,
                         EdgeId xz, const std::optional<PsiCover>& psi_star);

// One side of a double block: the piece between x and `tail`, the tail-z
// edge, and a Psi*-cover when the piece is not one of the small gadgets.
struct BlockSide {
    EdgeSet edges;
    VertexId tail = 0;
    EdgeId link = 0;
    std::optional<PsiCover> psi_star;
};

struct DoubleBlock {
    CoverFamily cover;                   // 6-cover of g
    std::optional<SignedGraph> g_loop;   // g plus a negative loop at x
    std::optional<CoverFamily> cover_loop;
    std::vector<PsiCover> psi_xz;        // case 1: t = 0..3; case 2: t = 2 with z-tadpoles avoiding x
};

// g is P(H1 + y1z, H2 + y2z) on the union of the sides' edges.
DoubleBlock double_block_compose(const SignedGraph& g, VertexId x, VertexId z, const BlockSide& s1, const BlockSide& s2,
                                 bool add_loop);

// ---------------------------------------------------------------- builder

enum class Provenance { structural, oracle_fallback };
const char* provenance_name(Provenance p);

// Double cover of a bridgeless balanced graph by balanced circuits.
CoverFamily balanced_double_cover(const SignedGraph& g);

struct ConstructStats {
    std::size_t oracle_calls = 0;
    std::map<std::string, std::size_t> steps;  // reduction name -> times used
};

struct ConstructResult {
    CoverFamily family;
    Provenance provenance = Provenance::structural;
    ConstructStats stats;
};

ConstructResult construct_six_cover(const SignedGraph& g, const OracleCaps& caps = {});

// Builds and verifies a 6-cover per graph; outcomes are in input order.
struct CorpusCover {
    std::optional<ConstructResult> result;
    bool verified = false;
    std::string error;
    double seconds = 0;
};
std::vector<CorpusCover> cover_corpus(const std::vector<SignedGraph>& graphs, bool parallel, const OracleCaps& caps = {});

}  // namespace sigcover
