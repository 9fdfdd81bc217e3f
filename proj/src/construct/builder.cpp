#include <algorithm>
#include <functional>

#include "sigcover/construct.hpp"
#include "sigcover/coverability.hpp"

namespace sigcover {

const char* provenance_name(Provenance p) { return p == Provenance::structural ? "structural" : "oracle_fallback"; }

namespace {

EdgeSet all_edges_of(const SignedGraph& g) {
    EdgeSet es(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) es[e] = e;
    return es;
}

// ------------------------------------------------------------ balanced double covers

// Two x-y paths of an SP node plus circuits, together covering every edge of
// the node twice.
struct TwoPaths {
    std::vector<EdgeSet> circuits;
    std::vector<EdgeId> p1, p2;
};

TwoPaths two_paths(const SpNode& node) {
    TwoPaths out;
    switch (node.kind) {
        case SpKind::leaf:
            out.p1 = out.p2 = {node.edge};
            return out;
        case SpKind::loop_leaf:
            out.circuits = {{node.edge}, {node.edge}};
            return out;
        case SpKind::series:
            for (const auto& c : node.children) {
                auto sub = two_paths(c);
                out.circuits.insert(out.circuits.end(), sub.circuits.begin(), sub.circuits.end());
                out.p1.insert(out.p1.end(), sub.p1.begin(), sub.p1.end());
                out.p2.insert(out.p2.end(), sub.p2.begin(), sub.p2.end());
            }
            return out;
        case SpKind::parallel: {
            std::vector<TwoPaths> subs;
            for (const auto& c : node.children) subs.push_back(two_paths(c));
            for (std::size_t i = 0; i < subs.size(); ++i) {
                out.circuits.insert(out.circuits.end(), subs[i].circuits.begin(), subs[i].circuits.end());
                if (i + 1 < subs.size()) {
                    std::vector<EdgeId> c = subs[i].p2;
                    c.insert(c.end(), subs[i + 1].p1.begin(), subs[i + 1].p1.end());
                    out.circuits.push_back(make_edge_set(std::move(c)));
                }
            }
            out.p1 = subs.front().p1;
            out.p2 = subs.back().p2;
            return out;
        }
    }
    return out;
}

// ------------------------------------------------------------ derived graphs

// Graph built from some edges of a parent plus new edges; vertices are
// renumbered in order of first use.
class Derive {
public:
    explicit Derive(const SignedGraph& parent) : parent_(parent), image_(parent.vertex_count()) {}

    VertexId vertex(VertexId pv) {
        if (!image_[pv]) image_[pv] = n_++;
        return *image_[pv];
    }
    EdgeId keep(EdgeId pe) {
        const Edge& e = parent_.edge(pe);
        edges_.push_back({vertex(e.u), vertex(e.v), e.sign});
        origin_.push_back(pe);
        return static_cast<EdgeId>(edges_.size() - 1);
    }
    void keep_all(const EdgeSet& es) {
        for (EdgeId e : es) keep(e);
    }
    EdgeId add(VertexId u, VertexId v, Sign s) {
        edges_.push_back({u, v, s});
        origin_.push_back(std::nullopt);
        return static_cast<EdgeId>(edges_.size() - 1);
    }
    SignedGraph graph() const { return SignedGraph(n_, edges_); }
    const std::vector<std::optional<EdgeId>>& origin() const { return origin_; }

    // Parent edges of a member, skipping the new edges.
    EdgeSet lift(const EdgeSet& es) const {
        std::vector<EdgeId> out;
        for (EdgeId e : es)
            if (origin_[e]) out.push_back(*origin_[e]);
        return make_edge_set(std::move(out));
    }

private:
    const SignedGraph& parent_;
    std::vector<std::optional<VertexId>> image_;
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::optional<EdgeId>> origin_;
};

bool coverable(const SignedGraph& g) {
    if (g.edge_count() == 0 || !is_connected(g)) return false;
    return is_coverable(g).coverable;
}

CoverFamily parse_all(const SignedGraph& g, const std::vector<EdgeSet>& sets, const char* step) {
    CoverFamily f;
    for (const auto& es : sets) {
        auto sc = is_signed_circuit(g, es);
        if (!sc) throw Error(std::string("internal: ") + step + " produced a member that is not a signed circuit");
        f.add_circuit(std::move(*sc));
    }
    return f;
}

std::vector<EdgeSet> edge_sets(const CoverFamily& f) {
    std::vector<EdgeSet> out;
    for (const auto& m : f.members) out.push_back(m.edges);
    return out;
}

// Indices of the members containing e.
std::vector<std::size_t> holders(const std::vector<EdgeSet>& f, EdgeId e) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (contains(f[i], e)) out.push_back(i);
    return out;
}

// Sets with the members containing a and b glued pairwise, a and b removed.
std::vector<EdgeSet> glue(const std::vector<EdgeSet>& f1, EdgeId a, const std::vector<EdgeSet>& f2, EdgeId b) {
    auto h1 = holders(f1, a), h2 = holders(f2, b);
    if (h1.size() != h2.size()) throw Error("internal: glued edges are covered differently");
    std::vector<EdgeSet> out;
    std::vector<char> used1(f1.size(), 0), used2(f2.size(), 0);
    for (std::size_t j = 0; j < h1.size(); ++j) {
        out.push_back(set_union(set_difference(f1[h1[j]], {a}), set_difference(f2[h2[j]], {b})));
        used1[h1[j]] = used2[h2[j]] = 1;
    }
    for (std::size_t i = 0; i < f1.size(); ++i)
        if (!used1[i]) out.push_back(f1[i]);
    for (std::size_t i = 0; i < f2.size(); ++i)
        if (!used2[i]) out.push_back(f2[i]);
    return out;
}

// ------------------------------------------------------------ recursion

struct Built {
    std::vector<EdgeSet> sets;
    bool oracle = false;
};

class Builder {
public:
    Builder(const OracleCaps& caps, ConstructStats& stats) : caps_(caps), stats_(stats) {}

    Built cover(const SignedGraph& g) {
        Built b = dispatch(g);
        auto f = parse_all(g, b.sets, "a reduction");
        if (auto v = verify_k_cover(g, f, 6); !v) throw Error("internal: reduction produced an invalid cover: " + v.violation);
        return b;
    }

private:
    const OracleCaps& caps_;
    ConstructStats& stats_;

    void note(const char* step) { stats_.steps[step]++; }

    Built dispatch(const SignedGraph& g) {
        if (g.edge_count() == 0) return {};
        const EdgeSet all = all_edges_of(g);
        if (is_signed_circuit(g, all)) {
            note("signed_circuit");
            return {std::vector<EdgeSet>(6, all), false};
        }
        if (is_balanced(g)) {
            note("balanced");
            auto cdc = edge_sets(balanced_double_cover(g));
            Built b;
            for (int i = 0; i < 3; ++i) b.sets.insert(b.sets.end(), cdc.begin(), cdc.end());
            return b;
        }
        if (auto b = by_suppression(g)) return *b;
        if (auto b = by_positive_loop(g)) return *b;
        if (auto b = by_parallel_pair(g)) return *b;
        if (auto b = by_loop_pair(g)) return *b;
        if (auto b = by_cut_vertex(g)) return *b;
        if (auto b = by_pieces(g)) return *b;
        note("oracle");
        stats_.oracle_calls++;
        // A 2- or 3-cover repeated is a 6-cover, and those searches are far smaller.
        for (std::size_t k : {2u, 3u}) {
            try {
                auto rep = k_cover_feasible(g, k, caps_);
                if (!rep.feasible) continue;
                Built b{{}, true};
                for (std::size_t i = 0; i < 6 / k; ++i)
                    for (const auto& m : rep.family->members) b.sets.push_back(m.edges);
                return b;
            } catch (const CapExceeded&) {
            }
        }
        auto rep = k_cover_feasible(g, 6, caps_);
        if (!rep.feasible) throw Error("internal: the oracle finds no 6-cover of a coverable piece");
        return {edge_sets(*rep.family), true};
    }

    std::optional<Built> by_suppression(const SignedGraph& g) {
        auto sup = suppress(g);
        if (sup.graph.edge_count() == g.edge_count()) return std::nullopt;
        note("suppress");
        Built inner = cover(sup.graph);
        Built b{{}, inner.oracle};
        for (const auto& es : inner.sets) {
            std::vector<EdgeId> out;
            for (EdgeId e : es) out.insert(out.end(), sup.edge_paths[e].begin(), sup.edge_paths[e].end());
            b.sets.push_back(make_edge_set(std::move(out)));
        }
        return b;
    }

    std::optional<Built> by_positive_loop(const SignedGraph& g) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!g.edge(e).is_loop() || g.edge(e).sign != Sign::positive) continue;
            Derive d(g);
            d.keep_all(set_difference(all_edges_of(g), {e}));
            auto h = d.graph();
            if (!coverable(h)) continue;
            note("positive_loop");
            Built inner = cover(h);
            Built b{{}, inner.oracle};
            for (const auto& es : inner.sets) b.sets.push_back(d.lift(es));
            for (int i = 0; i < 6; ++i) b.sets.push_back({e});
            return b;
        }
        return std::nullopt;
    }

    // Two parallel edges of one sign: cover without f, move f into half of
    // the members through e and add the digon three times.
    std::optional<Built> by_parallel_pair(const SignedGraph& g) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ee = g.edge(e);
            if (ee.is_loop()) continue;
            for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
                const Edge& ff = g.edge(f);
                if (ff.sign != ee.sign || !((ff.u == ee.u && ff.v == ee.v) || (ff.u == ee.v && ff.v == ee.u))) continue;
                const EdgeSet pair = make_edge_set({e, f});
                Derive d(g);
                d.keep_all(set_difference(all_edges_of(g), {f}));
                auto h = d.graph();
                if (coverable(h)) {
                    note("parallel_pair");
                    Built inner = cover(h);
                    Built b{{}, inner.oracle};
                    for (const auto& es : inner.sets) b.sets.push_back(d.lift(es));
                    auto hold = holders(b.sets, e);
                    for (std::size_t j = 0; j < 3; ++j) b.sets[hold[j]] = symdiff(b.sets[hold[j]], pair);
                    for (int i = 0; i < 3; ++i) b.sets.push_back(pair);
                    return b;
                }
                // otherwise drop the digon entirely
                Derive d2(g);
                d2.keep_all(set_difference(all_edges_of(g), pair));
                auto h2 = d2.graph();
                if (!coverable(h2)) continue;
                note("parallel_pair");
                Built inner = cover(h2);
                Built b{{}, inner.oracle};
                for (const auto& es : inner.sets) b.sets.push_back(d2.lift(es));
                for (int i = 0; i < 6; ++i) b.sets.push_back(pair);
                return b;
            }
        }
        return std::nullopt;
    }

    // Two negative loops at one vertex: cover without one of them and swap it
    // into half of the members through the other.
    std::optional<Built> by_loop_pair(const SignedGraph& g) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<EdgeId> loops;
            for (EdgeId e : g.incident(v))
                if (g.edge(e).is_loop() && g.edge(e).sign == Sign::negative) loops.push_back(e);
            if (loops.size() < 2) continue;
            const EdgeId l1 = loops[0], l2 = loops[1];
            const EdgeSet pair = make_edge_set({l1, l2});
            {
                Derive d(g);
                d.keep_all(set_difference(all_edges_of(g), {l1}));
                auto h = d.graph();
                if (coverable(h)) {
                    note("loop_pair");
                    Built inner = cover(h);
                    Built b{{}, inner.oracle};
                    for (const auto& es : inner.sets) b.sets.push_back(d.lift(es));
                    auto hold = holders(b.sets, l2);
                    for (std::size_t j = 0; j < 3; ++j) b.sets[hold[j]] = symdiff(b.sets[hold[j]], pair);
                    for (int i = 0; i < 3; ++i) b.sets.push_back(pair);
                    return b;
                }
            }
            Derive d(g);
            d.keep_all(set_difference(all_edges_of(g), pair));
            auto h = d.graph();
            if (!coverable(h)) continue;
            note("loop_pair");
            Built inner = cover(h);
            Built b{{}, inner.oracle};
            for (const auto& es : inner.sets) b.sets.push_back(d.lift(es));
            for (int i = 0; i < 6; ++i) b.sets.push_back(pair);
            return b;
        }
        return std::nullopt;
    }

    // Edge sets of the branches at v: one per component of g - v, one per loop at v.
    static std::vector<EdgeSet> branches(const SignedGraph& g, VertexId v) {
        std::vector<int> comp(g.vertex_count(), -1);
        int nc = 0;
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (s == v || comp[s] >= 0 || g.incident(s).empty()) continue;
            std::vector<VertexId> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (EdgeId e : g.incident(u)) {
                    VertexId w = g.edge(e).other(u);
                    if (w != v && comp[w] < 0) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
                }
            }
            ++nc;
        }
        std::vector<EdgeSet> out(static_cast<std::size_t>(nc));
        std::vector<EdgeSet> loops;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.is_loop() && ed.u == v) loops.push_back({e});
            else out[static_cast<std::size_t>(comp[ed.u == v ? ed.v : ed.u])].push_back(e);
        }
        std::vector<EdgeSet> touching;
        for (auto& b : out) {
            bool at_v = false;
            for (EdgeId e : b) at_v = at_v || g.edge(e).u == v || g.edge(e).v == v;
            if (at_v) touching.push_back(make_edge_set(std::move(b)));
            else if (!b.empty()) return {};  // g is disconnected
        }
        touching.insert(touching.end(), loops.begin(), loops.end());
        std::sort(touching.begin(), touching.end());
        return touching;
    }

    std::optional<Built> by_cut_vertex(const SignedGraph& g) {
        const EdgeSet all = all_edges_of(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto br = branches(g, v);
            if (br.size() < 2) continue;
            for (const auto& h1e : br) {
                const EdgeSet h2e = set_difference(all, h1e);
                Derive d1(g), d2(g);
                d1.keep_all(h1e);
                d2.keep_all(h2e);
                auto h1 = d1.graph(), h2 = d2.graph();
                if (coverable(h1) && coverable(h2)) {
                    note("cut_union");
                    Built a = cover(h1), b = cover(h2);
                    Built out{{}, a.oracle || b.oracle};
                    for (const auto& es : a.sets) out.sets.push_back(d1.lift(es));
                    for (const auto& es : b.sets) out.sets.push_back(d2.lift(es));
                    return out;
                }
                if (is_balanced(h1) || is_balanced(h2)) continue;
                if (h1e.size() + 1 >= g.edge_count() || h2e.size() + 1 >= g.edge_count()) continue;
                const EdgeId l1 = d1.add(d1.vertex(v), d1.vertex(v), Sign::negative);
                const EdgeId l2 = d2.add(d2.vertex(v), d2.vertex(v), Sign::negative);
                auto h1l = d1.graph(), h2l = d2.graph();
                if (!coverable(h1l) || !coverable(h2l)) continue;
                note("cut_loops");
                Built a = cover(h1l), b = cover(h2l);
                // lift both sides into g ids, keeping the added loops as markers
                const EdgeId m1 = static_cast<EdgeId>(g.edge_count()), m2 = m1 + 1;
                auto lift_marked = [](const Derive& d, const std::vector<EdgeSet>& sets, EdgeId loop, EdgeId marker) {
                    std::vector<EdgeSet> out;
                    for (const auto& es : sets) {
                        EdgeSet l = d.lift(es);
                        if (contains(es, loop)) l = set_union(l, {marker});
                        out.push_back(std::move(l));
                    }
                    return out;
                };
                Built out{glue(lift_marked(d1, a.sets, l1, m1), m1, lift_marked(d2, b.sets, l2, m2), m2),
                          a.oracle || b.oracle};
                return out;
            }
        }
        return std::nullopt;
    }

    // ---------------------------------------------------------------- pieces

    // Psi-covers of a piece obtainable without search: tabled gadgets and
    // chains of tabled or digon parts.
    std::optional<PsiCover> structural_psi(const SignedGraph& g, const EdgeSet& piece, VertexId x, VertexId y,
                                           PsiShape shape, int t) {
        for (const char* key : {"R1", "R2", "R3", "R4", "R5"}) {
            auto tg = table_graph(key);
            for (auto o : {Orientation::xy, Orientation::yx}) {
                auto m = o == Orientation::xy ? match_gadget(g, piece, x, y, tg.graph, tg.x, tg.y)
                                              : match_gadget(g, piece, x, y, tg.graph, tg.y, tg.x);
                if (!m) continue;
                if (auto p = table_psi_cover(key, o, t, shape)) return transport(g, *p, *m);
                if (shape == PsiShape::x_avoids_y)
                    if (auto p = table_psi_cover(key, o, t, PsiShape::clean)) return transport(g, *p, *m);
            }
        }
        if (t != 2 || (shape != PsiShape::clean && shape != PsiShape::x_avoids_y && shape != PsiShape::plain))
            return std::nullopt;
        PartsPartition chain;
        try {
            chain = parts_of_edges(g, piece, x, y);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
        if (chain.parts.size() < 2 || !chain.indices(PartClass::b0).empty() || chain.indices(PartClass::b2).empty())
            return std::nullopt;
        PartCovers covers;
        for (std::size_t i : chain.indices(PartClass::b2)) {
            const Part& part = chain.parts[i];
            auto p = digon_psi(g, part.edges, part.source, part.target);
            if (!p) p = structural_psi(g, part.edges, part.source, part.target, PsiShape::plain, 2);
            if (!p) return std::nullopt;
            covers[i] = std::move(*p);
        }
        auto st = series_psi_status(g, chain, covers);
        if (!st.psi || !has_shape(g, *st.psi, shape)) return std::nullopt;
        return st.psi;
    }

    // An unbalanced digon is a Psi(2)-piece: its edges are the paths and the
    // digon itself is every tadpole.
    static std::optional<PsiCover> digon_psi(const SignedGraph& g, const EdgeSet& piece, VertexId x, VertexId y) {
        if (piece.size() != 2 || g.edge(piece[0]).sign == g.edge(piece[1]).sign) return std::nullopt;
        for (EdgeId e : piece)
            if (g.edge(e).is_loop()) return std::nullopt;
        std::vector<std::pair<Role, EdgeSet>> members;
        for (EdgeId e : piece)
            for (int i = 0; i < 2; ++i) members.emplace_back(Role::positive_path, EdgeSet{e});
        for (int i = 0; i < 2; ++i) {
            members.emplace_back(Role::tadpole_at_x, piece);
            members.emplace_back(Role::tadpole_at_y, piece);
        }
        return make_psi_cover(g, x, y, 2, false, members);
    }

    std::optional<Built> by_pieces(const SignedGraph& g) {
        const EdgeSet all = all_edges_of(g);
        std::vector<VertexId> vs;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!g.incident(v).empty()) vs.push_back(v);
        // pairs in lexicographic order; the first applicable reduction wins
        std::vector<std::tuple<VertexId, VertexId, std::vector<EdgeSet>>> cuts;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                std::vector<EdgeSet> ps;
                try {
                    ps = pieces_at(g, vs[i], vs[j]);
                } catch (const PreconditionError&) {
                    continue;
                }
                if (ps.size() >= 2) cuts.emplace_back(vs[i], vs[j], std::move(ps));
            }
        for (const auto& [a, b, ps] : cuts)
            for (const auto& p : ps)
                if (auto r = balanced_piece(g, all, a, b, p)) return r;
        for (const auto& [a, b, ps] : cuts)
            for (const auto& p : ps) {
                if (auto r = two_sum_piece(g, a, b, p, GadgetId::D2)) return r;
                if (auto r = two_sum_piece(g, a, b, p, GadgetId::D1)) return r;
                if (auto r = two_sum_piece(g, b, a, p, GadgetId::D1)) return r;
            }
        return std::nullopt;
    }

    // A balanced piece with two or more edges is closed by a new edge and
    // double covered by balanced circuits; the rest gets the same new edge.
    std::optional<Built> balanced_piece(const SignedGraph& g, const EdgeSet& all, VertexId a, VertexId b,
                                        const EdgeSet& piece) {
        if (piece.size() < 2 || piece.size() == all.size()) return std::nullopt;
        auto sub = edge_subgraph(g, piece);
        if (!is_balanced(sub.graph)) return std::nullopt;
        // every a-b path of a balanced piece has the sign given by a balancing switch
        const SwitchSet sw = *balancing_switch(sub.graph);
        auto switched = [&](VertexId v) { return std::find(sw.begin(), sw.end(), *sub.vertex_image[v]) != sw.end(); };
        const Sign s = switched(a) == switched(b) ? Sign::positive : Sign::negative;
        Derive d1(g), d2(g);
        d1.keep_all(set_difference(all, piece));
        d2.keep_all(piece);
        const EdgeId e1 = d1.add(d1.vertex(a), d1.vertex(b), s);
        const EdgeId e2 = d2.add(d2.vertex(a), d2.vertex(b), s);
        auto h1 = d1.graph(), h2 = d2.graph();
        if (!bridges(h2).empty() || !coverable(h1)) return std::nullopt;
        note("balanced_piece");
        Built r1 = cover(h1);
        auto cdc = edge_sets(balanced_double_cover(h2));
        std::vector<EdgeSet> r2;
        for (int i = 0; i < 3; ++i) r2.insert(r2.end(), cdc.begin(), cdc.end());
        const EdgeId m1 = static_cast<EdgeId>(g.edge_count()), m2 = m1 + 1;
        auto lift_marked = [](const Derive& d, const std::vector<EdgeSet>& sets, EdgeId e, EdgeId marker) {
            std::vector<EdgeSet> out;
            for (const auto& es : sets) {
                EdgeSet l = d.lift(es);
                if (contains(es, e)) l = set_union(l, {marker});
                out.push_back(std::move(l));
            }
            return out;
        };
        return Built{glue(lift_marked(d1, r1.sets, e1, m1), m1, lift_marked(d2, r2, e2, m2), m2), r1.oracle};
    }

    std::optional<Built> two_sum_piece(const SignedGraph& g, VertexId x, VertexId y, const EdgeSet& piece, GadgetId gid) {
        const std::size_t dsize = gid == GadgetId::D1 ? 3 : 4;
        if (piece.size() <= dsize || piece.size() == g.edge_count()) return std::nullopt;
        const PsiShape shape = two_sum_shape(gid);
        std::vector<std::optional<PsiCover>> psi(4);
        for (int t = 0; t <= 3; ++t) {
            if (gid == GadgetId::D2 && t != 2) continue;
            psi[t] = structural_psi(g, piece, x, y, shape, t);
            if (!psi[t]) return std::nullopt;
        }
        TwoSum s;
        try {
            s = make_two_sum(g, piece, x, y, gid);
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
        if (!coverable(s.g_prime)) return std::nullopt;
        note(gid == GadgetId::D1 ? "two_sum_D1" : "two_sum_D2");
        Built inner = cover(s.g_prime);
        auto fp = parse_all(s.g_prime, inner.sets, "two-sum");
        const int t = two_sum_t(s, fp);
        return Built{edge_sets(two_sum_replace(s, fp, *psi[t])), inner.oracle};
    }
};

}  // namespace

CoverFamily balanced_double_cover(const SignedGraph& g) {
    if (!is_balanced(g)) throw PreconditionError("graph is unbalanced");
    std::vector<EdgeSet> sets;
    for (const auto& block : blocks_and_cuts(g).blocks) {
        if (block.size() == 1) {
            if (!g.edge(block[0]).is_loop()) throw PreconditionError("graph has a bridge");
            sets.push_back(block);
            sets.push_back(block);
            continue;
        }
        const Edge& e = g.edge(block[0]);
        SpNode root = sp_decompose_edges(g, block, e.u, e.v);
        TwoPaths tp = two_paths(root);
        sets.insert(sets.end(), tp.circuits.begin(), tp.circuits.end());
        std::vector<EdgeId> closing = tp.p1;
        closing.insert(closing.end(), tp.p2.begin(), tp.p2.end());
        sets.push_back(make_edge_set(std::move(closing)));
    }
    CoverFamily f = parse_all(g, sets, "the balanced double cover");
    if (auto v = verify_k_cover(g, f, 2); !v) throw Error("internal: balanced double cover fails: " + v.violation);
    return f;
}

ConstructResult construct_six_cover(const SignedGraph& g, const OracleCaps& caps) {
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    if (auto rep = is_coverable(g); !rep.coverable) throw PreconditionError("graph is not coverable: " + rep.reason());
    if (!is_k4_minor_free(g)) throw PreconditionError("graph has a K4 minor");
    ConstructResult res;
    Builder b(caps, res.stats);
    Built built = b.cover(g);
    res.family = parse_all(g, built.sets, "the builder");
    res.provenance = built.oracle ? Provenance::oracle_fallback : Provenance::structural;
    if (auto v = verify_k_cover(g, res.family, 6); !v) throw Error("internal: constructed family fails: " + v.violation);
    return res;
}

}  // namespace sigcover
