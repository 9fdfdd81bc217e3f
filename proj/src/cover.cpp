#include "sigcover/cover.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace sigcover {

const char* role_name(Role r) {
    switch (r) {
        case Role::signed_circuit: return "signed_circuit";
        case Role::positive_path: return "positive_path";
        case Role::negative_path: return "negative_path";
        case Role::tadpole_at_x: return "tadpole_at_x";
        case Role::tadpole_at_y: return "tadpole_at_y";
    }
    return "?";
}

std::optional<Role> role_from_name(const std::string& s) {
    for (Role r : {Role::signed_circuit, Role::positive_path, Role::negative_path, Role::tadpole_at_x, Role::tadpole_at_y})
        if (s == role_name(r)) return r;
    return std::nullopt;
}

void CoverFamily::add_circuit(SignedCircuit c) {
    CoverMember m;
    m.edges = c.edges;
    m.role = Role::signed_circuit;
    m.parse = std::move(c);
    members.push_back(std::move(m));
}

void CoverFamily::append(const CoverFamily& other) {
    members.insert(members.end(), other.members.begin(), other.members.end());
}

CoverFamily family_of_circuits(const SignedGraph& g, const std::vector<EdgeSet>& edge_sets) {
    CoverFamily f;
    for (const auto& es : edge_sets) {
        auto sc = is_signed_circuit(g, es);
        if (!sc) throw PreconditionError("member is not a signed circuit");
        f.add_circuit(std::move(*sc));
    }
    return f;
}

std::size_t coverage_count(const CoverFamily& f, EdgeId e) {
    std::size_t c = 0;
    for (const auto& m : f.members) c += contains(m.edges, e) ? 1 : 0;
    return c;
}

std::vector<std::size_t> coverage_counts(const CoverFamily& f, std::size_t edge_count) {
    std::vector<std::size_t> c(edge_count, 0);
    for (const auto& m : f.members)
        for (EdgeId e : m.edges)
            if (e < edge_count) ++c[e];
    return c;
}

namespace {

Verdict edge_violation(const std::vector<std::size_t>& counts, std::size_t k) {
    for (EdgeId e = 0; e < counts.size(); ++e) {
        if (counts[e] != k) {
            Verdict v = Verdict::fail("edge " + std::to_string(e) + " covered " + std::to_string(counts[e]) +
                                      " times, expected " + std::to_string(k));
            v.edge = e;
            return v;
        }
    }
    return {};
}

Verdict member_violation(std::size_t i, const std::string& why) {
    Verdict v = Verdict::fail("member " + std::to_string(i) + ": " + why);
    v.member = i;
    return v;
}

bool ids_valid(const SignedGraph& g, const EdgeSet& es) {
    return std::all_of(es.begin(), es.end(), [&](EdgeId e) { return e < g.edge_count(); });
}

}  // namespace

Verdict verify_k_cover(const SignedGraph& g, const CoverFamily& f, std::size_t k) {
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const auto& m = f.members[i];
        if (!ids_valid(g, m.edges)) return member_violation(i, "edge id out of range");
        if (m.role != Role::signed_circuit) return member_violation(i, std::string("role ") + role_name(m.role));
        if (!is_signed_circuit(g, m.edges)) return member_violation(i, "not a signed circuit");
    }
    return edge_violation(coverage_counts(f, g.edge_count()), k);
}

CoverFamily PsiCover::family() const {
    CoverFamily f;
    for (const auto& c : circuits) f.add_circuit(c);
    auto add_path = [&](const XyPath& p, Role r) { f.members.push_back({p.edge_set(), r, p}); };
    for (const auto& p : pos_paths) add_path(p, Role::positive_path);
    for (const auto& p : neg_paths) add_path(p, Role::negative_path);
    for (const auto& tp : tadpoles_x) f.members.push_back({tp.edges(), Role::tadpole_at_x, tp});
    for (const auto& tp : tadpoles_y) f.members.push_back({tp.edges(), Role::tadpole_at_y, tp});
    return f;
}

PsiCover make_psi_cover(const SignedGraph& h, VertexId x, VertexId y, int t, bool star,
                        const std::vector<std::pair<Role, EdgeSet>>& members) {
    PsiCover p;
    p.t = t;
    p.x = x;
    p.y = y;
    p.star = star;
    for (const auto& [role, es] : members) {
        switch (role) {
            case Role::signed_circuit: {
                auto sc = is_signed_circuit(h, es);
                if (!sc) throw PreconditionError("member is not a signed circuit");
                p.circuits.push_back(*sc);
                break;
            }
            case Role::positive_path:
            case Role::negative_path: {
                auto path = as_xy_path(h, es, x, y);
                if (!path) throw PreconditionError("member is not an xy-path");
                (path->sign == Sign::positive ? p.pos_paths : p.neg_paths).push_back(*path);
                break;
            }
            case Role::tadpole_at_x:
            case Role::tadpole_at_y: {
                VertexId tail = role == Role::tadpole_at_x ? x : y;
                auto tp = is_tadpole_at(h, es, tail);
                if (!tp) throw PreconditionError("member is not a tadpole at its terminal");
                (role == Role::tadpole_at_x ? p.tadpoles_x : p.tadpoles_y).push_back(*tp);
                break;
            }
        }
    }
    return p;
}

bool tadpole_contains(const SignedGraph& g, const Tadpole& t, VertexId v) {
    auto es = t.edges();
    auto vs = vertices_of(g, es);
    return std::binary_search(vs.begin(), vs.end(), v) || t.tail == v;
}

bool path_has_link(const SignedGraph& g, const Tadpole& t, VertexId a, VertexId b) {
    for (EdgeId e : t.path) {
        const Edge& ed = g.edge(e);
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return true;
    }
    return false;
}

bool star_condition(const SignedGraph& h, const std::vector<Tadpole>& at_u, VertexId other) {
    for (std::size_t i = 0; i < at_u.size(); ++i)
        for (std::size_t j = 0; j < at_u.size(); ++j)
            if (i != j && !tadpole_contains(h, at_u[i], other) && path_has_link(h, at_u[j], at_u[j].tail, other))
                return true;
    return false;
}

Verdict verify_psi_cover(const SignedGraph& h, VertexId x, VertexId y, const PsiCover& p) {
    if (p.t < 0 || p.t > 3) return Verdict::fail("t out of range");
    if (p.x != x || p.y != y) return Verdict::fail("terminals differ");
    const std::size_t t = static_cast<std::size_t>(p.t);
    if (p.pos_paths.size() != t) return Verdict::fail("expected " + std::to_string(t) + " positive paths");
    if (p.neg_paths.size() != t) return Verdict::fail("expected " + std::to_string(t) + " negative paths");
    if (p.tadpoles_x.size() != t) return Verdict::fail("expected " + std::to_string(t) + " tadpoles at x");
    if (p.tadpoles_y.size() != 6 - 2 * t) return Verdict::fail("expected " + std::to_string(6 - 2 * t) + " tadpoles at y");

    CoverFamily f = p.family();
    std::vector<Tadpole> tx, ty;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const auto& m = f.members[i];
        if (!ids_valid(h, m.edges)) return member_violation(i, "edge id out of range");
        switch (m.role) {
            case Role::signed_circuit:
                if (!is_signed_circuit(h, m.edges)) return member_violation(i, "not a signed circuit");
                break;
            case Role::positive_path:
            case Role::negative_path: {
                auto path = as_xy_path(h, m.edges, x, y);
                if (!path) return member_violation(i, "not an xy-path");
                Sign want = m.role == Role::positive_path ? Sign::positive : Sign::negative;
                if (path->sign != want) return member_violation(i, "path has the wrong sign");
                break;
            }
            case Role::tadpole_at_x:
            case Role::tadpole_at_y: {
                VertexId tail = m.role == Role::tadpole_at_x ? x : y;
                auto tp = is_tadpole_at(h, m.edges, tail);
                if (!tp) return member_violation(i, "not a tadpole at its terminal");
                (m.role == Role::tadpole_at_x ? tx : ty).push_back(*tp);
                break;
            }
        }
    }
    if (auto v = edge_violation(coverage_counts(f, h.edge_count()), 6); !v) return v;
    if (p.star) {
        if (p.t != 2) return Verdict::fail("star cover needs t=2");
        bool link = false;
        for (const Edge& e : h.edges()) link = link || (e.u == x && e.v == y) || (e.u == y && e.v == x);
        if (!link) return Verdict::fail("star cover needs an xy edge");
        if (!star_condition(h, tx, y)) return Verdict::fail("star condition fails at x");
        if (!star_condition(h, ty, x)) return Verdict::fail("star condition fails at y");
    }
    return {};
}

EdgeSet symdiff(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

TraceGroups partition_by_trace(const CoverFamily& f, const std::vector<EdgeSet>& patterns) {
    EdgeSet all;
    for (const auto& p : patterns) all = set_union(all, p);
    TraceGroups tg;
    tg.groups.resize(patterns.size());
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        EdgeSet trace = set_intersection(f.members[i].edges, all);
        if (trace.empty()) {
            tg.untouched.push_back(i);
            continue;
        }
        auto it = std::find(patterns.begin(), patterns.end(), trace);
        if (it == patterns.end()) throw PreconditionError("member " + std::to_string(i) + " has an unclassifiable trace");
        tg.groups[static_cast<std::size_t>(it - patterns.begin())].push_back(i);
    }
    return tg;
}

void write_cover(std::ostream& out, const CoverFamily& f, std::size_t k) {
    out << "cover k=" << k << " members=" << f.members.size() << '\n';
    for (const auto& m : f.members) {
        out << role_name(m.role) << " :";
        for (EdgeId e : m.edges) out << ' ' << e;
        out << '\n';
    }
}

CoverFile read_cover(std::istream& in) {
    CoverFile cf;
    std::string line;
    int lineno = 0;
    std::optional<std::size_t> expected;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find("# provenance="); pos != std::string::npos) {
            std::istringstream ps(line.substr(pos + 13));
            std::string v;
            ps >> v;
            cf.provenance = v;
            continue;
        }
        auto body = line.substr(0, line.find('#'));
        std::istringstream ss(body);
        std::string head;
        if (!(ss >> head)) continue;
        if (!expected) {
            std::string ks, ms;
            if (head != "cover" || !(ss >> ks >> ms) || ks.rfind("k=", 0) != 0 || ms.rfind("members=", 0) != 0)
                throw ParseError(lineno, "expected 'cover k=<k> members=<m>'");
            try {
                cf.k = std::stoul(ks.substr(2));
                expected = std::stoul(ms.substr(8));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad cover header");
            }
            continue;
        }
        auto role = role_from_name(head);
        std::string colon;
        if (!role || !(ss >> colon) || colon != ":") throw ParseError(lineno, "expected '<role> : <edge ids>'");
        std::vector<EdgeId> ids;
        std::string tok;
        while (ss >> tok) {
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                ids.push_back(static_cast<EdgeId>(v));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad edge id '" + tok + "'");
            }
        }
        cf.members.emplace_back(*role, make_edge_set(std::move(ids)));
    }
    if (!expected) throw ParseError(lineno, "missing cover header");
    if (cf.members.size() != *expected)
        throw ParseError(lineno, "header announces " + std::to_string(*expected) + " members, found " +
                                     std::to_string(cf.members.size()));
    return cf;
}

CoverFamily family_from_file(const SignedGraph& g, const CoverFile& file, VertexId x, VertexId y) {
    CoverFamily f;
    for (const auto& [role, es] : file.members) {
        CoverMember m;
        m.edges = es;
        m.role = role;
        if (ids_valid(g, es)) {
            switch (role) {
                case Role::signed_circuit:
                    if (auto sc = is_signed_circuit(g, es)) m.parse = *sc;
                    break;
                case Role::positive_path:
                case Role::negative_path:
                    if (auto p = as_xy_path(g, es, x, y)) m.parse = *p;
                    break;
                case Role::tadpole_at_x:
                case Role::tadpole_at_y:
                    if (auto t = is_tadpole_at(g, es, role == Role::tadpole_at_x ? x : y)) m.parse = *t;
                    break;
            }
        }
        f.members.push_back(std::move(m));
    }
    return f;
}

}  // namespace sigcover
