#include <algorithm>
#include <functional>

#include "sigcover/construct.hpp"

namespace sigcover {

bool ThetaPattern::admissible() const { return *this == mixed() || *this == all_negative(); }

const char* status_name(SeriesStatus s) {
    switch (s) {
        case SeriesStatus::psi2_clean: return "psi2_clean";
        case SeriesStatus::left_obstructed: return "left_obstructed";
        case SeriesStatus::right_obstructed: return "right_obstructed";
    }
    return "?";
}

std::vector<std::size_t> ChainCover::coverage(std::size_t edge_count) const {
    std::vector<std::size_t> c(edge_count, 0);
    auto add = [&](const EdgeSet& es) {
        for (EdgeId e : es) c.at(e)++;
    };
    for (const auto& sc : circuits) add(sc.edges);
    for (EdgeId e : loops) c.at(e)++;
    for (const auto& p : paths) add(p.edge_set());
    for (const auto& t : tadpoles_source) add(t.edges());
    for (const auto& t : tadpoles_target) add(t.edges());
    return c;
}

namespace {

using Pattern = std::array<Sign, 4>;

// The six ways to lay out (+, +, -, -) over four slots.
std::vector<Pattern> layouts() {
    std::vector<Pattern> out;
    Pattern p{Sign::negative, Sign::negative, Sign::positive, Sign::positive};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end(), [](Sign a, Sign b) { return to_int(a) < to_int(b); }));
    return out;
}

EdgeSet b1_edges_between(const PartsPartition& chain, std::size_t from, std::size_t to) {
    std::vector<EdgeId> es;
    for (std::size_t i = from; i < to; ++i)
        if (chain.parts[i].cls == PartClass::b1) es.insert(es.end(), chain.parts[i].edges.begin(), chain.parts[i].edges.end());
    return make_edge_set(std::move(es));
}

Tadpole loop_tadpole(const SignedGraph& h, EdgeId loop) {
    auto tp = is_tadpole_at(h, {loop}, h.edge(loop).u);
    if (!tp) throw PreconditionError("B0 part is not a negative loop");
    return *tp;
}

void check_inputs(const SignedGraph& h, const PartsPartition& chain, const PartCovers& psi_inputs) {
    for (std::size_t i : chain.indices(PartClass::b2)) {
        auto it = psi_inputs.find(i);
        if (it == psi_inputs.end()) throw PreconditionError("missing Psi(2)-cover for part " + std::to_string(i));
        const PsiCover& p = it->second;
        if (p.t != 2 || p.x != chain.parts[i].source || p.y != chain.parts[i].target)
            throw PreconditionError("cover of part " + std::to_string(i) + " is not a Psi(2)-cover at its terminals");
        if (auto v = verify_psi_cover_on(h, chain.parts[i].edges, p); !v)
            throw PreconditionError("cover of part " + std::to_string(i) + " fails: " + v.violation);
    }
}

}  // namespace

ChainCover series_compose(const SignedGraph& h, const PartsPartition& chain, const PartCovers& psi_inputs,
                          const ThetaPattern& theta) {
    if (!theta.admissible()) throw PreconditionError("theta must be (1,1,-1,-1) or (-1,-1,-1,-1)");
    const auto b2 = chain.indices(PartClass::b2);
    if (b2.empty()) throw PreconditionError("chain has no B2 part");
    if (theta == ThetaPattern::all_negative() && b2.size() < 2)
        throw PreconditionError("theta (-1,-1,-1,-1) needs at least two B2 parts");
    check_inputs(h, chain, psi_inputs);

    ChainCover out;
    out.source = chain.source;
    out.target = chain.target;

    // Paths: every B2 part spreads its two positive and two negative paths over
    // the four slots so that the products match theta.
    Sign link_sign = Sign::positive;
    for (const auto& p : chain.parts)
        if (p.cls == PartClass::b1) link_sign = link_sign * h.edge(p.edges.front()).sign;
    Pattern want;
    for (int j = 0; j < 4; ++j) want[j] = theta.signs[j] * link_sign;
    const auto lay = layouts();
    std::vector<std::size_t> choice(b2.size(), 0);
    std::function<bool(std::size_t, Pattern)> pick = [&](std::size_t k, Pattern acc) -> bool {
        if (k == b2.size()) return acc == want;
        for (std::size_t l = 0; l < lay.size(); ++l) {
            Pattern next;
            for (int j = 0; j < 4; ++j) next[j] = acc[j] * lay[l][j];
            choice[k] = l;
            if (pick(k + 1, next)) return true;
        }
        return false;
    };
    if (!pick(0, {Sign::positive, Sign::positive, Sign::positive, Sign::positive}))
        throw Error("internal: no path layout realizes theta");

    std::array<std::vector<EdgeId>, 4> path_edges;
    std::size_t k = 0;
    for (std::size_t i = 0; i < chain.parts.size(); ++i) {
        const Part& part = chain.parts[i];
        if (part.cls == PartClass::b0) continue;
        if (part.cls == PartClass::b1) {
            for (auto& pe : path_edges) pe.push_back(part.edges.front());
            continue;
        }
        const PsiCover& psi = psi_inputs.at(i);
        std::size_t np = 0, nn = 0;
        for (int j = 0; j < 4; ++j) {
            const XyPath& src = lay[choice[k]][j] == Sign::positive ? psi.pos_paths[np++] : psi.neg_paths[nn++];
            path_edges[j].insert(path_edges[j].end(), src.edges.begin(), src.edges.end());
        }
        ++k;
    }
    for (int j = 0; j < 4; ++j) {
        auto path = as_xy_path(h, make_edge_set(path_edges[j]), chain.source, chain.target);
        if (!path) throw Error("internal: concatenated paths do not form an x0xn-path");
        out.paths.push_back(std::move(*path));
    }

    // Tadpoles and barbells: chain the tadpoles of consecutive B0/B2 parts.
    std::vector<std::size_t> ends;
    for (std::size_t i = 0; i < chain.parts.size(); ++i)
        if (chain.parts[i].cls != PartClass::b1) ends.push_back(i);
    auto tadpole_of = [&](std::size_t i, int j) -> Tadpole {
        const Part& part = chain.parts[i];
        if (part.cls == PartClass::b0) return loop_tadpole(h, part.edges.front());
        const PsiCover& psi = psi_inputs.at(i);
        return j < 2 ? psi.tadpoles_x[j] : psi.tadpoles_y[j - 2];
    };
    for (std::size_t i : chain.indices(PartClass::b0))
        for (int c = 0; c < 2; ++c) out.loops.push_back(chain.parts[i].edges.front());
    for (std::size_t i : b2)
        for (const auto& c : psi_inputs.at(i).circuits) out.circuits.push_back(c);

    const EdgeSet head = b1_edges_between(chain, 0, ends.front());
    const EdgeSet tail = b1_edges_between(chain, ends.back() + 1, chain.parts.size());
    for (int j = 0; j < 2; ++j) {
        auto tp = is_tadpole_at(h, set_union(head, tadpole_of(ends.front(), j).edges()), chain.source);
        if (!tp) throw Error("internal: source tadpole does not parse");
        out.tadpoles_source.push_back(std::move(*tp));
    }
    for (int j = 2; j < 4; ++j) {
        auto tp = is_tadpole_at(h, set_union(tail, tadpole_of(ends.back(), j).edges()), chain.target);
        if (!tp) throw Error("internal: target tadpole does not parse");
        out.tadpoles_target.push_back(std::move(*tp));
    }
    for (std::size_t a = 0; a + 1 < ends.size(); ++a) {
        const EdgeSet mid = b1_edges_between(chain, ends[a] + 1, ends[a + 1]);
        for (int j = 0; j < 2; ++j) {
            EdgeSet es = set_union(set_union(tadpole_of(ends[a], j + 2).edges(), mid), tadpole_of(ends[a + 1], j).edges());
            auto sc = is_signed_circuit(h, es);
            if (!sc) throw Error("internal: chained tadpoles do not form a barbell");
            out.circuits.push_back(std::move(*sc));
        }
    }
    if (auto v = verify_chain_cover(h, chain, out, theta); !v) throw Error("internal: chain cover fails: " + v.violation);
    return out;
}

Verdict verify_chain_cover(const SignedGraph& h, const PartsPartition& chain, const ChainCover& c,
                           const ThetaPattern& theta) {
    EdgeSet all;
    for (const auto& p : chain.parts) all = set_union(all, p.edges);
    auto counts = c.coverage(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const std::size_t want = contains(all, e) ? 6 : 0;
        if (counts[e] != want) {
            Verdict v = Verdict::fail("edge " + std::to_string(e) + " covered " + std::to_string(counts[e]) +
                                      " times, expected " + std::to_string(want));
            v.edge = e;
            return v;
        }
    }
    for (std::size_t i = 0; i < c.circuits.size(); ++i)
        if (!is_signed_circuit(h, c.circuits[i].edges)) return Verdict::fail("circuit " + std::to_string(i) + " is not a signed circuit");
    if (c.paths.size() != 4) return Verdict::fail("expected four paths");
    for (int j = 0; j < 4; ++j) {
        auto p = as_xy_path(h, c.paths[j].edge_set(), chain.source, chain.target);
        if (!p) return Verdict::fail("path " + std::to_string(j) + " is not an x0xn-path");
        if (p->sign != theta.signs[j]) return Verdict::fail("path " + std::to_string(j) + " has the wrong sign");
    }
    std::vector<std::size_t> ends;
    for (std::size_t i = 0; i < chain.parts.size(); ++i)
        if (chain.parts[i].cls != PartClass::b1) ends.push_back(i);
    if (ends.empty()) return Verdict::fail("chain has no B0 or B2 part");
    auto check_tadpoles = [&](const std::vector<Tadpole>& ts, VertexId at, std::size_t part) -> Verdict {
        if (ts.size() != 2) return Verdict::fail("expected two tadpoles at each end");
        for (const auto& t : ts) {
            if (!is_tadpole_at(h, t.edges(), at)) return Verdict::fail("end tadpole does not parse");
            const EdgeSet& pe = chain.parts[part].edges;
            for (EdgeId e : t.circuit.edges)
                if (!contains(pe, e)) return Verdict::fail("tadpole circuit outside the extreme B0/B2 part");
        }
        return {};
    };
    if (auto v = check_tadpoles(c.tadpoles_source, chain.source, ends.front()); !v) return v;
    if (auto v = check_tadpoles(c.tadpoles_target, chain.target, ends.back()); !v) return v;
    std::vector<EdgeId> want_loops;
    for (std::size_t i : chain.indices(PartClass::b0))
        for (int k = 0; k < 2; ++k) want_loops.push_back(chain.parts[i].edges.front());
    std::vector<EdgeId> have = c.loops;
    std::sort(want_loops.begin(), want_loops.end());
    std::sort(have.begin(), have.end());
    if (have != want_loops) return Verdict::fail("negative loop parts must appear exactly twice");
    return {};
}

SeriesPsi series_psi_status(const SignedGraph& h, const PartsPartition& chain, const PartCovers& psi_inputs) {
    if (!chain.indices(PartClass::b0).empty()) throw PreconditionError("chain has a negative loop part");
    if (chain.indices(PartClass::b2).empty()) throw PreconditionError("chain has no B2 part");
    if (chain.parts.size() < 2) throw PreconditionError("chain needs at least two parts");
    auto cc = series_compose(h, chain, psi_inputs, ThetaPattern::mixed());

    PsiCover p;
    p.t = 2;
    p.x = chain.source;
    p.y = chain.target;
    p.circuits = cc.circuits;
    for (auto& path : cc.paths) (path.sign == Sign::positive ? p.pos_paths : p.neg_paths).push_back(path);
    p.tadpoles_x = cc.tadpoles_source;
    p.tadpoles_y = cc.tadpoles_target;

    EdgeSet all;
    for (const auto& part : chain.parts) all = set_union(all, part.edges);
    if (auto v = verify_psi_cover_on(h, all, p); !v) throw Error("internal: chain Psi-cover fails: " + v.violation);

    SeriesPsi out;
    bool target_crosses = false, source_crosses = false;
    for (const auto& t : p.tadpoles_y) target_crosses = target_crosses || tadpole_contains(h, t, p.x);
    for (const auto& t : p.tadpoles_x) source_crosses = source_crosses || tadpole_contains(h, t, p.y);
    if (target_crosses) out.status = SeriesStatus::left_obstructed;
    else if (source_crosses) out.status = SeriesStatus::right_obstructed;
    else out.psi = std::move(p);
    return out;
}

}  // namespace sigcover
