#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigcover/circuits.hpp"

namespace sigcover {

enum class Role { signed_circuit, positive_path, negative_path, tadpole_at_x, tadpole_at_y };

const char* role_name(Role r);
std::optional<Role> role_from_name(const std::string& s);

struct CoverMember {
    EdgeSet edges;
    Role role = Role::signed_circuit;
    std::variant<std::monostate, SignedCircuit, XyPath, Tadpole> parse;
};

struct CoverFamily {
    std::vector<CoverMember> members;

    std::size_t size() const { return members.size(); }
    void add_circuit(SignedCircuit c);
    void append(const CoverFamily& other);
};

// Parses every edge set as a signed circuit of g; throws PreconditionError otherwise.
CoverFamily family_of_circuits(const SignedGraph& g, const std::vector<EdgeSet>& edge_sets);

std::size_t coverage_count(const CoverFamily& f, EdgeId e);
std::vector<std::size_t> coverage_counts(const CoverFamily& f, std::size_t edge_count);

struct Verdict {
    bool ok = true;
    std::string violation;
    std::optional<EdgeId> edge;
    std::optional<std::size_t> member;

    explicit operator bool() const { return ok; }
    static Verdict fail(std::string why) { return {false, std::move(why), std::nullopt, std::nullopt}; }
};

// Every member is a signed circuit of g and every edge lies in exactly k members.
Verdict verify_k_cover(const SignedGraph& g, const CoverFamily& f, std::size_t k);

struct PsiCover {
    int t = 0;
    VertexId x = 0;
    VertexId y = 0;
    bool star = false;
    std::vector<SignedCircuit> circuits;
    std::vector<XyPath> pos_paths;
    std::vector<XyPath> neg_paths;
    std::vector<Tadpole> tadpoles_x;
    std::vector<Tadpole> tadpoles_y;

    CoverFamily family() const;
};

// Builds a PsiCover from role-tagged edge sets, parsing each against h.
// Throws PreconditionError when a member does not parse in its role.
PsiCover make_psi_cover(const SignedGraph& h, VertexId x, VertexId y, int t, bool star,
                        const std::vector<std::pair<Role, EdgeSet>>& members);

Verdict verify_psi_cover(const SignedGraph& h, VertexId x, VertexId y, const PsiCover& p);

// Star side condition for one terminal: one tadpole at u avoids
// the other terminal and another one has an x-y edge on its tadpole-path.
bool star_condition(const SignedGraph& h, const std::vector<Tadpole>& at_u, VertexId other);

bool tadpole_contains(const SignedGraph& g, const Tadpole& t, VertexId v);
bool path_has_link(const SignedGraph& g, const Tadpole& t, VertexId a, VertexId b);

EdgeSet symdiff(const EdgeSet& a, const EdgeSet& b);

struct TraceGroups {
    std::vector<std::vector<std::size_t>> groups;  // member indices per pattern
    std::vector<std::size_t> untouched;
};

// Groups members by their intersection with the union of the patterns.
// Throws PreconditionError when a non-empty trace matches no pattern.
TraceGroups partition_by_trace(const CoverFamily& f, const std::vector<EdgeSet>& patterns);

// Text form: "cover k=<k> members=<m>" then "<role> : <ids>" per member.
void write_cover(std::ostream& out, const CoverFamily& f, std::size_t k);

struct CoverFile {
    std::size_t k = 0;
    std::vector<std::pair<Role, EdgeSet>> members;
    std::optional<std::string> provenance;
};

CoverFile read_cover(std::istream& in);

// Re-parses the members of a cover file against g. Members that fail to parse
// in their role are kept with an empty parse so that verification reports them.
CoverFamily family_from_file(const SignedGraph& g, const CoverFile& file, VertexId x = 0, VertexId y = 0);

}  // namespace sigcover
