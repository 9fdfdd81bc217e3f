#include <algorithm>
#include <deque>

#include "sigcover/construct.hpp"

namespace sigcover {

namespace {

enum class SideKind { r0, r2, r4, r5, star };

bool joins(const Edge& e, VertexId a, VertexId b) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); }

SideKind classify(const SignedGraph& g, VertexId x, const BlockSide& s) {
    for (auto [id, kind] : {std::pair{GadgetId::R0, SideKind::r0}, std::pair{GadgetId::R2, SideKind::r2},
                            std::pair{GadgetId::R4, SideKind::r4}, std::pair{GadgetId::R5, SideKind::r5}}) {
        Gadget gd = gadget(id);
        if (match_gadget(g, s.edges, x, s.tail, gd.graph, gd.terminals->first, gd.terminals->second)) return kind;
    }
    if (!s.psi_star) throw PreconditionError("case mismatch: side is neither R0, R2, R4, R5 nor given a star cover");
    const PsiCover& p = *s.psi_star;
    if (p.x != x || p.y != s.tail || !p.star) throw PreconditionError("side star cover must sit at (x, tail)");
    if (auto v = verify_psi_cover_on(g, s.edges, p); !v) throw PreconditionError("side star cover fails: " + v.violation);
    if (!has_shape(g, p, PsiShape::star)) throw PreconditionError("side star cover misses the star condition");
    return SideKind::star;
}

// Auxiliary graph: small sides appear edge for edge; a side with a star cover
// is replaced by its link edge e0 and four placeholder edges standing for its
// positive paths, negative paths, x-tadpoles and tail-tadpoles.
struct Aux {
    std::vector<Edge> edges;
    std::vector<int> demand;
    std::vector<std::optional<EdgeId>> real;       // aux edge -> g edge
    std::vector<std::vector<EdgeSet>> substitutes;  // placeholder copies
    std::vector<int> side;                          // star side owning the edge, or -1
    std::vector<char> placeholder, clashes_e0, link_edge;
    std::vector<SignedCircuit> fixed;               // circuits of the star covers
    VertexId n = 0;

    EdgeId add(VertexId u, VertexId v, Sign s, int d) {
        edges.push_back({u, v, s});
        demand.push_back(d);
        real.push_back(std::nullopt);
        substitutes.emplace_back();
        side.push_back(-1);
        placeholder.push_back(0);
        clashes_e0.push_back(0);
        link_edge.push_back(0);
        return static_cast<EdgeId>(edges.size() - 1);
    }
};

struct StarParts {
    EdgeId e0;
    std::vector<EdgeSet> pos, neg, at_x, at_tail;
};

StarParts split_star(const SignedGraph& g, VertexId x, VertexId tail, const PsiCover& p) {
    auto split = [&](const std::vector<Tadpole>& ts, VertexId other) -> std::pair<Tadpole, Tadpole> {
        for (std::size_t i = 0; i < 2; ++i) {
            const Tadpole& a = ts[i];
            const Tadpole& b = ts[1 - i];
            if (!tadpole_contains(g, a, other) && !b.path.empty() && joins(g.edge(b.path.front()), x, tail)) return {a, b};
        }
        throw PreconditionError("star tadpoles do not split");
    };
    auto [ax, bx] = split(p.tadpoles_x, tail);
    auto [ay, by] = split(p.tadpoles_y, x);
    if (bx.path.front() != by.path.front()) throw PreconditionError("star tadpoles leave through different link edges");
    StarParts sp;
    sp.e0 = bx.path.front();
    const EdgeSet e0s{sp.e0};
    for (const auto& q : p.pos_paths) sp.pos.push_back(q.edge_set());
    for (const auto& q : p.neg_paths) sp.neg.push_back(q.edge_set());
    sp.at_x = {ax.edges(), set_difference(by.edges(), e0s)};
    sp.at_tail = {ay.edges(), set_difference(bx.edges(), e0s)};
    return sp;
}

}  // namespace

DoubleBlock double_block_compose(const SignedGraph& g, VertexId x, VertexId z, const BlockSide& s1, const BlockSide& s2,
                                 bool add_loop) {
    const std::array<const BlockSide*, 2> sides{&s1, &s2};
    EdgeSet all;
    for (const BlockSide* s : sides) {
        if (s->edges.empty() || s->tail == x || s->tail == z) throw PreconditionError("bad double-block side");
        if (!joins(g.edge(s->link), s->tail, z)) throw PreconditionError("side link must join its tail to z");
        if (contains(s->edges, s->link)) throw PreconditionError("side link lies inside the side");
        auto vs = vertices_of(g, s->edges);
        if (std::binary_search(vs.begin(), vs.end(), z)) throw PreconditionError("z must lie outside the sides");
        all = set_union(all, set_union(s->edges, {s->link}));
    }
    if (s1.tail == s2.tail || !disjoint(s1.edges, s2.edges)) throw PreconditionError("sides must be disjoint with distinct tails");
    if (all.size() != g.edge_count()) throw PreconditionError("g must consist of the two sides and their links");
    auto v1 = vertices_of(g, s1.edges), v2 = vertices_of(g, s2.edges);
    std::vector<VertexId> common;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
    if (common != std::vector<VertexId>{x}) throw PreconditionError("the sides must meet exactly in x");

    std::array<SideKind, 2> kind{classify(g, x, s1), classify(g, x, s2)};
    const bool case1 = kind[0] == SideKind::r0 || kind[1] == SideKind::r0;

    // Build the auxiliary graph on the vertices of g.
    Aux aux;
    aux.n = static_cast<VertexId>(g.vertex_count());
    for (int i = 0; i < 2; ++i) {
        const BlockSide& s = *sides[i];
        EdgeId l = aux.add(g.edge(s.link).u, g.edge(s.link).v, g.edge(s.link).sign, 6);
        aux.real[l] = s.link;
        if (kind[i] != SideKind::star) {
            for (EdgeId e : s.edges) {
                EdgeId a = aux.add(g.edge(e).u, g.edge(e).v, g.edge(e).sign, 6);
                aux.real[a] = e;
            }
            continue;
        }
        StarParts sp = split_star(g, x, s.tail, *s.psi_star);
        for (const auto& c : s.psi_star->circuits) aux.fixed.push_back(c);
        EdgeId e0 = aux.add(x, s.tail, g.edge(sp.e0).sign, 2);
        aux.real[e0] = sp.e0;
        aux.side[e0] = i;
        aux.link_edge[e0] = 1;
        // A path of the same sign as e0 may be e0 itself.
        auto slot = [&](VertexId u, VertexId v, Sign sign, const std::vector<EdgeSet>& subs, bool may_be_e0) {
            EdgeId a = aux.add(u, v, sign, static_cast<int>(subs.size()));
            aux.substitutes[a] = subs;
            aux.side[a] = i;
            aux.placeholder[a] = 1;
            aux.clashes_e0[a] = may_be_e0 ? 1 : 0;
        };
        const Sign s0 = g.edge(sp.e0).sign;
        slot(x, s.tail, Sign::positive, sp.pos, s0 == Sign::positive);
        slot(x, s.tail, Sign::negative, sp.neg, s0 == Sign::negative);
        slot(x, x, Sign::negative, sp.at_x, false);
        slot(s.tail, s.tail, Sign::negative, sp.at_tail, false);
    }
    std::optional<EdgeId> loop_aux;
    if (add_loop) loop_aux = aux.add(x, x, Sign::negative, 6);

    const SignedGraph ag(aux.n, aux.edges);
    // A member may use at most one placeholder per star side, and never a path
    // placeholder that could stand for e0 together with e0.
    RowFilter keep = [&](Role, const EdgeSet& es) {
        std::array<int, 2> slots{0, 0};
        std::array<bool, 2> pos{false, false}, link{false, false};
        for (EdgeId e : es) {
            if (aux.side[e] < 0) continue;
            const int s = aux.side[e];
            if (aux.placeholder[e]) ++slots[s];
            if (aux.clashes_e0[e]) pos[s] = true;
            if (aux.link_edge[e]) link[s] = true;
        }
        for (int s = 0; s < 2; ++s)
            if (slots[s] > 1 || (pos[s] && link[s])) return false;
        return true;
    };

    std::vector<int> demand_no_loop = aux.demand;
    if (loop_aux) demand_no_loop[*loop_aux] = 0;

    // Replace placeholders by the next unused copy of what they stand for.
    auto substitute = [&](const std::vector<EdgeSet>& rows, std::optional<EdgeId> loop_g) {
        std::vector<std::deque<EdgeSet>> queue(aux.edges.size());
        for (EdgeId a = 0; a < aux.edges.size(); ++a) queue[a].assign(aux.substitutes[a].begin(), aux.substitutes[a].end());
        std::vector<EdgeSet> out;
        for (const auto& row : rows) {
            EdgeSet es;
            for (EdgeId a : row) {
                if (loop_aux && a == *loop_aux) {
                    es = set_union(es, {*loop_g});
                } else if (aux.real[a]) {
                    es = set_union(es, {*aux.real[a]});
                } else {
                    if (queue[a].empty()) throw Error("internal: placeholder used too often");
                    es = set_union(es, queue[a].front());
                    queue[a].pop_front();
                }
            }
            out.push_back(std::move(es));
        }
        return out;
    };
    auto to_family = [&](const SignedGraph& host, const std::vector<EdgeSet>& sets) {
        CoverFamily f;
        for (const auto& es : sets) {
            auto sc = is_signed_circuit(host, es);
            if (!sc) throw Error("internal: substituted member is not a signed circuit");
            f.add_circuit(std::move(*sc));
        }
        for (const auto& c : aux.fixed) f.add_circuit(c);
        if (auto v = verify_k_cover(host, f, 6); !v) throw Error("internal: double-block cover fails: " + v.violation);
        return f;
    };

    DoubleBlock out;
    // Searches on the auxiliary graph skip rows through the unused loop.
    RowFilter keep_no_loop = [&](Role r, const EdgeSet& es) {
        if (loop_aux && contains(es, *loop_aux)) return false;
        return keep(r, es);
    };
    auto rows = find_cover_members(ag, demand_no_loop, keep_no_loop);
    if (!rows) throw Error("internal: no auxiliary 6-cover for the double block");
    out.cover = to_family(g, substitute(*rows, std::nullopt));

    if (add_loop) {
        SignedGraph gl = g.with_edge(x, x, Sign::negative);
        const EdgeId loop_g = static_cast<EdgeId>(g.edge_count());
        auto lrows = find_cover_members(ag, aux.demand, keep);
        if (!lrows) throw Error("internal: no auxiliary 6-cover for the double block with a loop");
        out.cover_loop = to_family(gl, substitute(*lrows, loop_g));
        out.g_loop = std::move(gl);
    }

    std::vector<int> ts = case1 ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{2};
    for (int t : ts) {
        PsiSearchOptions opt;
        opt.t = t;
        opt.y_tadpoles_avoid_x = !case1;
        auto members = find_psi_members(ag, x, z, opt, demand_no_loop, keep_no_loop);
        if (!members) throw Error("internal: no auxiliary Psi_xz(" + std::to_string(t) + ")-cover for the double block");
        std::vector<EdgeSet> sets;
        for (const auto& m : *members) sets.push_back(m.second);
        auto subst = substitute(sets, std::nullopt);
        std::vector<std::pair<Role, EdgeSet>> roles;
        for (std::size_t i = 0; i < subst.size(); ++i) roles.emplace_back((*members)[i].first, subst[i]);
        for (const auto& c : aux.fixed) roles.emplace_back(Role::signed_circuit, c.edges);
        PsiCover p = make_psi_cover(g, x, z, t, false, roles);
        if (auto v = verify_psi_cover(g, x, z, p); !v) throw Error("internal: double-block Psi cover fails: " + v.violation);
        if (!case1)
            for (const auto& tp : p.tadpoles_y)
                if (tadpole_contains(g, tp, x)) throw Error("internal: a tadpole at z contains x");
        out.psi_xz.push_back(std::move(p));
    }
    return out;
}

}  // namespace sigcover
