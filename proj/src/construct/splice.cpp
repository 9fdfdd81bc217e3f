#include <algorithm>

#include "sigcover/construct.hpp"

namespace sigcover {

namespace {

EdgeSet all_edges_of(const SignedGraph& g) {
    EdgeSet es(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) es[e] = e;
    return es;
}

bool joins(const Edge& e, VertexId a, VertexId b) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); }

// Trace patterns of the gadget edges, in the order positive path, negative
// path, tadpole at x, tadpole at y.
std::vector<EdgeSet> trace_patterns(const TwoSum& s) {
    const auto& ge = s.gadget_edges;
    if (s.gadget == GadgetId::D1)
        return {make_edge_set({ge[0], ge[1]}), make_edge_set({ge[2], ge[1]}), make_edge_set({ge[0], ge[2]}),
                make_edge_set({ge[0], ge[1], ge[2]})};
    return {make_edge_set({ge[0], ge[1], ge[2]}), make_edge_set({ge[0], ge[3], ge[2]}),
            make_edge_set({ge[0], ge[1], ge[3]}), make_edge_set({ge[1], ge[3], ge[2]})};
}

}  // namespace

TwoSum make_two_sum(const SignedGraph& g, const EdgeSet& h2, VertexId x, VertexId y, GadgetId gadget_id) {
    if (gadget_id != GadgetId::D1 && gadget_id != GadgetId::D2) throw PreconditionError("two-sum gadget must be D1 or D2");
    if (x == y || x >= g.vertex_count() || y >= g.vertex_count()) throw PreconditionError("bad terminals");
    TwoSum s;
    s.g = g;
    s.h2 = make_edge_set(h2);
    s.x = x;
    s.y = y;
    s.gadget = gadget_id;
    s.h1_edges = set_difference(all_edges_of(g), s.h2);
    if (s.h2.empty() || s.h1_edges.empty()) throw PreconditionError("both sides of the two-sum need edges");
    auto v1 = vertices_of(g, s.h1_edges), v2 = vertices_of(g, s.h2);
    std::vector<VertexId> common;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
    std::vector<VertexId> want{std::min(x, y), std::max(x, y)};
    if (common != want) throw PreconditionError("the two sides must meet exactly in the terminals");

    std::vector<std::optional<VertexId>> image(g.vertex_count());
    VertexId n = 0;
    auto vertex = [&](VertexId v) {
        if (!image[v]) image[v] = n++;
        return *image[v];
    };
    std::vector<Edge> edges;
    for (EdgeId e : s.h1_edges) {
        const Edge& ed = g.edge(e);
        edges.push_back({vertex(ed.u), vertex(ed.v), ed.sign});
    }
    s.x_prime = vertex(x);
    s.y_prime = vertex(y);
    Gadget d = gadget(gadget_id);
    std::vector<VertexId> gv(d.graph.vertex_count());
    for (VertexId v = 0; v < gv.size(); ++v) {
        if (v == d.terminals->first) gv[v] = s.x_prime;
        else if (v == d.terminals->second) gv[v] = s.y_prime;
        else gv[v] = n++;
    }
    for (const Edge& ed : d.graph.edges()) {
        s.gadget_edges.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back({gv[ed.u], gv[ed.v], ed.sign});
    }
    s.g_prime = SignedGraph(n, std::move(edges));
    return s;
}

PsiShape two_sum_shape(GadgetId gadget) {
    if (gadget == GadgetId::D1) return PsiShape::x_avoids_y;
    if (gadget == GadgetId::D2) return PsiShape::clean;
    throw PreconditionError("two-sum gadget must be D1 or D2");
}

int two_sum_t(const TwoSum& s, const CoverFamily& f_prime) {
    auto tg = partition_by_trace(f_prime, trace_patterns(s));
    std::vector<std::size_t> n;
    for (const auto& grp : tg.groups) n.push_back(grp.size());
    const std::size_t t = n[0];
    const bool ok = s.gadget == GadgetId::D1 ? (t <= 3 && n[1] == t && n[2] == t && n[3] == 6 - 2 * t)
                                             : (n[0] == 2 && n[1] == 2 && n[2] == 2 && n[3] == 2);
    if (!ok) throw PreconditionError("gadget traces do not have the counts of a 6-cover");
    return static_cast<int>(t);
}

CoverFamily two_sum_replace(const TwoSum& s, const CoverFamily& f_prime, const PsiCover& psi) {
    if (auto v = verify_k_cover(s.g_prime, f_prime, 6); !v) throw PreconditionError("f_prime is not a 6-cover: " + v.violation);
    if (psi.x != s.x || psi.y != s.y) throw PreconditionError("Psi-cover terminals differ from the two-sum terminals");
    if (auto v = verify_psi_cover_on(s.g, s.h2, psi); !v) throw PreconditionError("Psi-cover of H2 fails: " + v.violation);
    if (!has_shape(s.g, psi, two_sum_shape(s.gadget)))
        throw PreconditionError(std::string("Psi-cover lacks the side conditions of ") + gadget_name(s.gadget));
    const int t = two_sum_t(s, f_prime);
    if (psi.t != t) throw PreconditionError("t mismatch: cover crosses with t=" + std::to_string(t) +
                                            ", Psi-cover has t=" + std::to_string(psi.t));

    auto tg = partition_by_trace(f_prime, trace_patterns(s));
    const std::size_t h1n = s.h1_edges.size();
    auto h1_part = [&](const EdgeSet& es) {
        std::vector<EdgeId> out;
        for (EdgeId e : es)
            if (e < h1n) out.push_back(s.h1_edges[e]);
        return out;
    };
    std::vector<std::vector<EdgeSet>> replacement(4);
    for (const auto& p : psi.pos_paths) replacement[0].push_back(p.edge_set());
    for (const auto& p : psi.neg_paths) replacement[1].push_back(p.edge_set());
    for (const auto& tp : psi.tadpoles_x) replacement[2].push_back(tp.edges());
    for (const auto& tp : psi.tadpoles_y) replacement[3].push_back(tp.edges());

    std::vector<EdgeSet> members;
    for (std::size_t i : tg.untouched) members.push_back(make_edge_set(h1_part(f_prime.members[i].edges)));
    for (std::size_t c = 0; c < 4; ++c) {
        if (tg.groups[c].size() != replacement[c].size()) throw Error("internal: trace group size differs from Psi-cover");
        for (std::size_t j = 0; j < tg.groups[c].size(); ++j) {
            auto es = h1_part(f_prime.members[tg.groups[c][j]].edges);
            es.insert(es.end(), replacement[c][j].begin(), replacement[c][j].end());
            members.push_back(make_edge_set(std::move(es)));
        }
    }
    CoverFamily out;
    for (const auto& es : members) {
        auto sc = is_signed_circuit(s.g, es);
        if (!sc) throw Error("internal: spliced member is not a signed circuit");
        out.add_circuit(std::move(*sc));
    }
    for (const auto& c : psi.circuits) out.add_circuit(c);
    if (auto v = verify_k_cover(s.g, out, 6); !v) throw Error("internal: spliced family fails: " + v.violation);
    return out;
}

PsiCover triangle_extend(const SignedGraph& g, const EdgeSet& h, VertexId x, VertexId y, VertexId z, EdgeId yz,
                         EdgeId xz, const std::optional<PsiCover>& psi_star) {
    auto hv = vertices_of(g, h);
    if (std::binary_search(hv.begin(), hv.end(), z)) throw PreconditionError("z must lie outside h");
    if (!std::binary_search(hv.begin(), hv.end(), x) || !std::binary_search(hv.begin(), hv.end(), y))
        throw PreconditionError("x and y must be vertices of h");
    if (!joins(g.edge(yz), y, z) || !joins(g.edge(xz), x, z)) throw PreconditionError("yz and xz must join the stated vertices");
    const Sign outer = g.edge(yz).sign * g.edge(xz).sign;
    std::vector<EdgeId> links;
    for (EdgeId e : h)
        if (joins(g.edge(e), x, y)) links.push_back(e);
    if (links.empty()) throw PreconditionError("h has no xy edge");
    if (std::none_of(links.begin(), links.end(), [&](EdgeId e) { return g.edge(e).sign * outer == Sign::negative; }))
        throw PreconditionError("triangle xyzx is balanced");
    const EdgeSet piece = set_union(h, make_edge_set({yz, xz}));

    auto finish = [&](const PsiCover& p) {
        if (auto v = verify_psi_cover_on(g, piece, p); !v) throw Error("internal: extended cover fails: " + v.violation);
        if (!has_shape(g, p, PsiShape::star)) throw Error("internal: extended cover is not a star cover");
        return p;
    };

    if (!psi_star) {
        for (const char* key : {"R2+z", "R4+z", "R5+z"}) {
            auto tg = table_graph(key);
            auto m = match_gadget(g, piece, x, z, tg.graph, tg.x, tg.y);
            if (!m) continue;
            auto p = table_psi_cover(key, Orientation::xy, 2, PsiShape::star);
            if (!p) throw Error(std::string("internal: missing table ") + key);
            auto out = transport(g, *p, *m);
            out.star = true;
            return finish(out);
        }
        throw PreconditionError("no star cover given and h is not one of the tabled small cases");
    }

    const PsiCover& ps = *psi_star;
    if (ps.x != x || ps.y != y || !ps.star) throw PreconditionError("psi_star must be a star cover at (x, y)");
    if (auto v = verify_psi_cover_on(g, h, ps); !v) throw PreconditionError("psi_star fails: " + v.violation);
    if (!has_shape(g, ps, PsiShape::star)) throw PreconditionError("psi_star misses the star condition");

    // Split each side into the tadpole avoiding the other terminal and the one
    // leaving through an xy edge.
    auto split = [&](const std::vector<Tadpole>& ts, VertexId other) -> std::pair<Tadpole, Tadpole> {
        for (std::size_t i = 0; i < 2; ++i) {
            const Tadpole& a = ts[i];
            const Tadpole& b = ts[1 - i];
            if (!tadpole_contains(g, a, other) && !b.path.empty() && joins(g.edge(b.path.front()), x, y)) return {a, b};
        }
        throw PreconditionError("star tadpoles do not split");
    };
    auto [ax, bx] = split(ps.tadpoles_x, y);
    auto [ay, by] = split(ps.tadpoles_y, x);
    const EdgeId e0 = bx.path.front();
    if (by.path.front() != e0) throw PreconditionError("star tadpoles leave through different xy edges");
    if (g.edge(e0).sign * outer != Sign::negative) throw PreconditionError("triangle xyzx is balanced");

    // Normalize sigma(e0)=+, sigma(xz)=-, sigma(yz)=+ by switching at y and z.
    SwitchSet sw;
    Sign s_yz = g.edge(yz).sign, s_xz = g.edge(xz).sign;
    if (g.edge(e0).sign == Sign::negative) {
        sw.push_back(y);
        s_yz = flip(s_yz);
    }
    if (s_xz == Sign::positive) sw.push_back(z);
    const SignedGraph gs = switch_at(g, sw);

    std::vector<EdgeSet> pos, neg;
    for (const auto& p : ps.pos_paths) (as_xy_path(gs, p.edge_set(), x, y)->sign == Sign::positive ? pos : neg).push_back(p.edge_set());
    for (const auto& p : ps.neg_paths) (as_xy_path(gs, p.edge_set(), x, y)->sign == Sign::positive ? pos : neg).push_back(p.edge_set());
    if (pos.size() != 2 || neg.size() != 2) throw Error("internal: switching broke the path counts");
    const EdgeSet e0s{e0};
    const EdgeSet tx1 = ax.edges(), tx2 = set_difference(by.edges(), e0s);
    const EdgeSet ty1 = ay.edges(), ty2 = set_difference(bx.edges(), e0s);
    const EdgeSet e1{xz}, e2{yz};
    auto u = [](std::initializer_list<EdgeSet> parts) {
        EdgeSet out;
        for (const auto& p : parts) out = set_union(out, p);
        return out;
    };

    std::vector<std::pair<Role, EdgeSet>> members;
    for (const auto& p : pos) members.emplace_back(Role::positive_path, u({p, e2}));
    for (int i = 0; i < 2; ++i) members.emplace_back(Role::negative_path, e1);
    members.emplace_back(Role::tadpole_at_x, tx1);
    members.emplace_back(Role::tadpole_at_x, u({e1, e2, ty1}));
    members.emplace_back(Role::tadpole_at_y, u({e2, ty2}));
    members.emplace_back(Role::tadpole_at_y, u({e1, e0s, neg[0]}));
    members.emplace_back(Role::signed_circuit, u({e1, e2, e0s, tx2}));
    members.emplace_back(Role::signed_circuit, u({e1, e2, neg[1]}));
    for (const auto& c : ps.circuits) members.emplace_back(Role::signed_circuit, c.edges);

    PsiCover out;
    try {
        out = make_psi_cover(g, x, z, 2, true, members);
    } catch (const PreconditionError& e) {
        throw Error(std::string("internal: auxiliary family does not parse: ") + e.what());
    }
    return finish(out);
}

}  // namespace sigcover
