#include <algorithm>
#include <functional>
#include <numeric>

#include "sigcover/construct.hpp"

namespace sigcover {

namespace {

std::vector<std::pair<Role, EdgeSet>> members_of(const PsiCover& p) {
    std::vector<std::pair<Role, EdgeSet>> out;
    for (const auto& m : p.family().members) out.emplace_back(m.role, m.edges);
    return out;
}

bool all_avoid(const SignedGraph& h, const std::vector<Tadpole>& ts, VertexId v) {
    return std::none_of(ts.begin(), ts.end(), [&](const Tadpole& t) { return tadpole_contains(h, t, v); });
}

}  // namespace

const char* shape_name(PsiShape s) {
    switch (s) {
        case PsiShape::plain: return "plain";
        case PsiShape::star: return "star";
        case PsiShape::split_y: return "split_y";
        case PsiShape::one_y_avoids_x: return "one_y_avoids_x";
        case PsiShape::clean: return "clean";
        case PsiShape::x_avoids_y: return "x_avoids_y";
    }
    return "?";
}

std::optional<PsiShape> shape_from_name(const std::string& s) {
    for (auto v : {PsiShape::plain, PsiShape::star, PsiShape::split_y, PsiShape::one_y_avoids_x, PsiShape::clean,
                   PsiShape::x_avoids_y})
        if (s == shape_name(v)) return v;
    return std::nullopt;
}

PsiSearchOptions search_options(PsiShape shape, int t) {
    PsiSearchOptions o;
    o.t = t;
    switch (shape) {
        case PsiShape::plain: break;
        case PsiShape::star: o.star = true; break;
        case PsiShape::split_y: o.split_y_shape = true; break;
        case PsiShape::one_y_avoids_x: o.y_tadpoles_avoiding_x = 1; break;
        case PsiShape::clean:
            o.x_tadpoles_avoid_y = true;
            o.y_tadpoles_avoid_x = true;
            break;
        case PsiShape::x_avoids_y: o.x_tadpoles_avoid_y = true; break;
    }
    return o;
}

bool has_shape(const SignedGraph& h, const PsiCover& p, PsiShape shape) {
    switch (shape) {
        case PsiShape::plain: return true;
        case PsiShape::star:
            return p.t == 2 && star_condition(h, p.tadpoles_x, p.y) && star_condition(h, p.tadpoles_y, p.x);
        case PsiShape::split_y:
            return p.t == 2 && all_avoid(h, p.tadpoles_x, p.y) && star_condition(h, p.tadpoles_y, p.x);
        case PsiShape::one_y_avoids_x: {
            auto n = std::count_if(p.tadpoles_y.begin(), p.tadpoles_y.end(),
                                   [&](const Tadpole& t) { return !tadpole_contains(h, t, p.x); });
            return n == 1;
        }
        case PsiShape::clean: return all_avoid(h, p.tadpoles_x, p.y) && all_avoid(h, p.tadpoles_y, p.x);
        case PsiShape::x_avoids_y: return all_avoid(h, p.tadpoles_x, p.y);
    }
    return false;
}

PsiCover reparse(const SignedGraph& g, VertexId x, VertexId y, const PsiCover& p) {
    return make_psi_cover(g, x, y, p.t, p.star, members_of(p));
}

Verdict verify_psi_cover_on(const SignedGraph& g, const EdgeSet& piece, const PsiCover& p) {
    auto sub = edge_subgraph(g, piece);
    if (p.x >= g.vertex_count() || p.y >= g.vertex_count() || !sub.vertex_image[p.x] || !sub.vertex_image[p.y])
        return Verdict::fail("terminals are not vertices of the piece");
    std::vector<std::pair<Role, EdgeSet>> local;
    for (auto& [role, es] : members_of(p)) {
        std::vector<EdgeId> ids;
        for (EdgeId e : es) {
            auto it = std::lower_bound(piece.begin(), piece.end(), e);
            if (it == piece.end() || *it != e) return Verdict::fail("member uses edge " + std::to_string(e) + " outside the piece");
            ids.push_back(static_cast<EdgeId>(it - piece.begin()));
        }
        local.emplace_back(role, make_edge_set(std::move(ids)));
    }
    const VertexId lx = *sub.vertex_image[p.x], ly = *sub.vertex_image[p.y];
    PsiCover lp;
    try {
        lp = make_psi_cover(sub.graph, lx, ly, p.t, p.star, local);
    } catch (const PreconditionError& e) {
        return Verdict::fail(e.what());
    }
    return verify_psi_cover(sub.graph, lx, ly, lp);
}

std::optional<PsiCover> find_psi_cover_on(const SignedGraph& g, const EdgeSet& piece, VertexId x, VertexId y,
                                          PsiShape shape, int t, const OracleCaps& caps) {
    auto sub = edge_subgraph(g, piece);
    if (!sub.vertex_image[x] || !sub.vertex_image[y]) throw PreconditionError("terminals are not vertices of the piece");
    auto found = find_psi_cover(sub.graph, *sub.vertex_image[x], *sub.vertex_image[y], search_options(shape, t), caps);
    if (!found || !has_shape(sub.graph, *found, shape)) return std::nullopt;
    std::vector<std::pair<Role, EdgeSet>> lifted;
    for (auto& [role, es] : members_of(*found)) {
        std::vector<EdgeId> ids;
        for (EdgeId e : es) ids.push_back(sub.edge_origin[e]);
        lifted.emplace_back(role, make_edge_set(std::move(ids)));
    }
    return make_psi_cover(g, x, y, t, found->star, lifted);
}

TableGraph table_graph(const std::string& key) {
    std::string base = key;
    bool ext = false;
    if (base.size() > 2 && base.substr(base.size() - 2) == "+z") {
        base = base.substr(0, base.size() - 2);
        ext = true;
    }
    auto id = gadget_from_name(base);
    if (!id) throw PreconditionError("unknown table graph " + key);
    Gadget gd = gadget(*id);
    if (!gd.terminals) throw PreconditionError("table graph without terminals: " + key);
    TableGraph tg{gd.graph, gd.terminals->first, gd.terminals->second};
    if (ext) {
        const VertexId z = static_cast<VertexId>(tg.graph.vertex_count());
        tg.graph = tg.graph.with_vertices(1).with_edge(tg.y, z, Sign::positive).with_edge(tg.x, z, Sign::negative);
        tg.y = z;
    }
    return tg;
}

std::optional<PsiCover> table_psi_cover(const std::string& key, Orientation o, int t, PsiShape shape) {
    for (const auto& e : table_entries()) {
        if (e.key != key || e.orientation != o || e.t != t || e.shape != shape) continue;
        auto tg = table_graph(key);
        VertexId x = tg.x, y = tg.y;
        if (o == Orientation::yx) std::swap(x, y);
        return make_psi_cover(tg.graph, x, y, t, shape == PsiShape::star, e.members);
    }
    return std::nullopt;
}

std::optional<PsiCover> base_psi_cover(GadgetId gadget, Orientation o, int t, bool star) {
    switch (gadget) {
        case GadgetId::R0:
        case GadgetId::R1: return std::nullopt;
        case GadgetId::R2:
            if (star) return std::nullopt;
            if (o == Orientation::yx) return table_psi_cover("R2", o, t, PsiShape::plain);
            if (t == 2) return table_psi_cover("R2", o, t, PsiShape::one_y_avoids_x);
            return std::nullopt;
        case GadgetId::R3:
            if (o == Orientation::xy && t == 2) return table_psi_cover("R3", o, t, PsiShape::star);
            return std::nullopt;
        case GadgetId::R4:
        case GadgetId::R5:
            if (o == Orientation::xy && t == 2 && !star) return table_psi_cover(gadget_name(gadget), o, t, PsiShape::split_y);
            return std::nullopt;
        default: break;
    }
    throw PreconditionError(std::string("no base covers for gadget ") + gadget_name(gadget));
}

std::optional<GadgetMatch> match_gadget(const SignedGraph& g, const EdgeSet& piece, VertexId x, VertexId y,
                                        const SignedGraph& gadget, VertexId gx, VertexId gy) {
    if (piece.size() != gadget.edge_count()) return std::nullopt;
    auto pv = vertices_of(g, piece);
    if (pv.size() != gadget.vertex_count()) return std::nullopt;
    if (!std::binary_search(pv.begin(), pv.end(), x) || !std::binary_search(pv.begin(), pv.end(), y)) return std::nullopt;
    const std::size_t n = gadget.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        if (gadget.incident(v).empty()) return std::nullopt;

    auto sub = edge_subgraph(g, piece);
    const SignedGraph& h = sub.graph;
    std::vector<std::size_t> hdeg(n), gdeg(n);
    for (VertexId v = 0; v < n; ++v) {
        hdeg[v] = h.degree(v);
        gdeg[v] = gadget.degree(v);
    }
    // parallel classes of the gadget, keyed by endpoint pair
    auto key = [](VertexId a, VertexId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> gclass, hclass;
    for (EdgeId e = 0; e < gadget.edge_count(); ++e) gclass[key(gadget.edge(e).u, gadget.edge(e).v)].push_back(e);
    for (EdgeId e = 0; e < h.edge_count(); ++e) hclass[key(h.edge(e).u, h.edge(e).v)].push_back(e);

    std::vector<VertexId> vmap(n, 0);
    std::vector<char> used(n, 0);
    std::optional<GadgetMatch> result;

    // With the vertex map fixed, try the bijections inside each parallel class.
    auto try_edges = [&]() -> bool {
        std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> classes;
        for (auto& [k, ges] : gclass) {
            auto it = hclass.find(key(vmap[k.first], vmap[k.second]));
            if (it == hclass.end() || it->second.size() != ges.size()) return false;
            classes.emplace_back(ges, it->second);
        }
        std::vector<EdgeId> emap(gadget.edge_count(), 0);
        std::function<bool(std::size_t)> go = [&](std::size_t c) -> bool {
            if (c == classes.size()) {
                // sign differences must form a balanced signature
                std::vector<int> parent(n), parity(n, 0);
                std::iota(parent.begin(), parent.end(), 0);
                std::function<std::pair<int, int>(int)> find = [&](int v) -> std::pair<int, int> {
                    int p = 0;
                    while (parent[v] != v) {
                        p ^= parity[v];
                        v = parent[v];
                    }
                    return {v, p};
                };
                for (EdgeId e = 0; e < gadget.edge_count(); ++e) {
                    const Edge& ge = gadget.edge(e);
                    const int d = ge.sign == h.edge(emap[e]).sign ? 0 : 1;
                    if (ge.is_loop()) {
                        if (d) return false;
                        continue;
                    }
                    auto [ru, pu] = find(static_cast<int>(ge.u));
                    auto [rv, pv2] = find(static_cast<int>(ge.v));
                    if (ru == rv) {
                        if ((pu ^ pv2) != d) return false;
                    } else {
                        parent[ru] = rv;
                        parity[ru] = pu ^ pv2 ^ d;
                    }
                }
                return true;
            }
            auto& [ges, hes] = classes[c];
            std::vector<EdgeId> perm = hes;
            std::sort(perm.begin(), perm.end());
            do {
                for (std::size_t i = 0; i < ges.size(); ++i) emap[ges[i]] = perm[i];
                if (go(c + 1)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        if (!go(0)) return false;
        GadgetMatch m;
        for (EdgeId e : emap) m.edge_map.push_back(sub.edge_origin[e]);
        for (VertexId v : vmap) m.vertex_map.push_back(sub.vertex_origin[v]);
        result = std::move(m);
        return true;
    };

    const VertexId lx = *sub.vertex_image[x], ly = *sub.vertex_image[y];
    std::function<bool(VertexId)> assign = [&](VertexId v) -> bool {
        if (v == n) return try_edges();
        if (v == gx || v == gy) {
            VertexId w = v == gx ? lx : ly;
            if (used[w] || hdeg[w] != gdeg[v]) return false;
            used[w] = 1;
            vmap[v] = w;
            bool ok = assign(v + 1);
            used[w] = 0;
            return ok;
        }
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || w == lx || w == ly || hdeg[w] != gdeg[v]) continue;
            used[w] = 1;
            vmap[v] = w;
            if (assign(v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    if (lx == ly) return std::nullopt;
    assign(0);
    return result;
}

PsiCover transport(const SignedGraph& g, const PsiCover& p, const GadgetMatch& m) {
    std::vector<std::pair<Role, EdgeSet>> mapped;
    for (auto& [role, es] : members_of(p)) {
        std::vector<EdgeId> ids;
        for (EdgeId e : es) ids.push_back(m.edge_map.at(e));
        mapped.emplace_back(role, make_edge_set(std::move(ids)));
    }
    return make_psi_cover(g, m.vertex_map.at(p.x), m.vertex_map.at(p.y), p.t, p.star, mapped);
}

}  // namespace sigcover
