// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sigcover/circuits.hpp"
#include "sigcover/construct.hpp"
#include "sigcover/coverability.hpp"
#include "sigcover/instances.hpp"
#include "sigcover/negativeness.hpp"
#include "sigcover/oracle.hpp"
#include "sigcover/sp.hpp"
#include "support.hpp"

using namespace sigcover;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<EdgeSet> sets_of(const CoverFamily& f) {
    std::vector<EdgeSet> out;
    for (const auto& m : f.members) out.push_back(m.edges);
    return out;
}

// ------------------------------------------------------------------ 1

Outcome end_to_end() {
    SpParams with_loops;
    SpParams plain;
    plain.loop_prob = 0.0;
    auto a = coverable_corpus(150, with_loops, 101);
    auto b = coverable_corpus(150, plain, 202);
    std::vector<SignedGraph> graphs = a.graphs;
    graphs.insert(graphs.end(), b.graphs.begin(), b.graphs.end());

    const auto t0 = std::chrono::steady_clock::now();
    auto results = cover_corpus(graphs, true);
    std::size_t ok = 0, structural = 0, loops = 0, digons = 0;
    std::string first_error;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                ++loops;
                break;
            }
        }
        std::set<std::pair<VertexId, VertexId>> pairs;
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            if (!pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) {
                ++digons;
                break;
            }
        }
        const auto& r = results[i];
        if (!r.result) {
            if (first_error.empty()) first_error = "instance " + std::to_string(i) + ": " + r.error;
            continue;
        }
        // Round trip through the cover text format, as the command line does.
        std::stringstream text;
        write_cover(text, r.result->family, 6);
        auto family = family_from_file(g, read_cover(text));
        if (verify_k_cover(g, family, 6) && testsupport::brute_is_k_cover(g, sets_of(family), 6)) ++ok;
        else if (first_error.empty()) first_error = "instance " + std::to_string(i) + " fails verification";
        structural += r.result->provenance == Provenance::structural ? 1 : 0;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << ok << "/300 verified in " << secs << " s; structural=" << structural << "/300; with loops=" << loops
      << " with parallel edges=" << digons;
    if (!first_error.empty()) d << "; " << first_error;
    return {ok == 300 && secs < 600, d.str()};
}

// ------------------------------------------------------------------ 2

Outcome tightness() {
    const auto t0 = std::chrono::steady_clock::now();
    auto g = gadget(GadgetId::TIGHTNESS).graph;
    std::string pattern;
    bool ok = true;
    for (std::size_t k = 1; k <= 6; ++k) {
        auto rep = k_cover_feasible(g, k);
        pattern += rep.feasible ? "F" : "-";
        ok = ok && rep.feasible == (k == 6);
        if (rep.feasible) ok = ok && testsupport::brute_is_k_cover(g, sets_of(*rep.family), k);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << "k=1..6 feasibility " << pattern << " in " << secs << " s";
    return {ok && secs < 60, d.str()};
}

// ------------------------------------------------------------------ 3

Outcome coverability_equivalence() {
    // Catalog: seeded connected multigraphs on 1..5 vertices with 1..8 edges,
    // each taken with every sign pattern.
    std::mt19937_64 rng(303);
    std::size_t cases = 0, mismatches = 0, coverable = 0;
    std::set<std::vector<std::tuple<VertexId, VertexId>>> seen;
    std::string example;
    std::size_t graphs = 0;
    while (cases < 2400) {
        const std::size_t n = 1 + rng() % 5;
        const std::size_t m = std::max<std::size_t>(n - 1, 1 + rng() % 8);
        if (m > 8) continue;
        auto base = testsupport::random_connected_multigraph(rng, n, m, 0.2, 0.0);
        std::vector<std::tuple<VertexId, VertexId>> key;
        for (const Edge& e : base.edges()) key.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        ++graphs;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<Edge> es = base.edges();
            for (std::size_t i = 0; i < m; ++i) es[i].sign = ((mask >> i) & 1u) ? Sign::negative : Sign::positive;
            SignedGraph g(n, es);
            const bool a = is_coverable(g).coverable;
            const bool b = is_coverable_oracle(g);
            // an independent check: every edge lies in some signed circuit found by subset search
            auto sc = testsupport::brute_force_signed_circuits(g);
            std::vector<char> hit(m, 0);
            for (const auto& c : sc)
                for (EdgeId e : c) hit[e] = 1;
            const bool c = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
            ++cases;
            coverable += a ? 1 : 0;
            if (a != b || b != c) {
                ++mismatches;
                if (example.empty()) example = "\n" + graph_to_string(g);
            }
        }
    }
    std::ostringstream d;
    d << cases << " cases over " << graphs << " multigraphs, " << coverable << " coverable, " << mismatches
      << " discrepancies" << example;
    return {mismatches == 0 && cases >= 2000, d.str()};
}

// ------------------------------------------------------------------ 4

bool paths_ok(const SignedGraph& g, const PsiCover& p) {
    for (const auto& q : p.pos_paths)
        if (!testsupport::brute_is_path(g, q.edge_set(), p.x, p.y) || sign_of(g, q.edge_set()) != Sign::positive) return false;
    for (const auto& q : p.neg_paths)
        if (!testsupport::brute_is_path(g, q.edge_set(), p.x, p.y) || sign_of(g, q.edge_set()) != Sign::negative) return false;
    for (const auto& t : p.tadpoles_x)
        if (!testsupport::brute_is_tadpole(g, t.edges(), p.x)) return false;
    for (const auto& t : p.tadpoles_y)
        if (!testsupport::brute_is_tadpole(g, t.edges(), p.y)) return false;
    std::vector<std::size_t> cov(g.edge_count(), 0);
    auto add = [&](const EdgeSet& es) {
        for (EdgeId e : es) cov[e]++;
    };
    for (const auto& c : p.circuits) {
        if (!testsupport::member_is_signed_circuit(g, c.edges)) return false;
        add(c.edges);
    }
    for (const auto& q : p.pos_paths) add(q.edge_set());
    for (const auto& q : p.neg_paths) add(q.edge_set());
    for (const auto& t : p.tadpoles_x) add(t.edges());
    for (const auto& t : p.tadpoles_y) add(t.edges());
    return std::all_of(cov.begin(), cov.end(), [](std::size_t c) { return c == 6; });
}

Outcome base_families() {
    std::size_t checked = 0, passed = 0;
    std::string failures;
    auto check = [&](const char* what, GadgetId id, Orientation o, int t, bool star, PsiShape shape) {
        ++checked;
        auto p = base_psi_cover(id, o, t, star);
        const SignedGraph g = gadget(id).graph;
        const VertexId x = o == Orientation::xy ? 0 : 1, y = o == Orientation::xy ? 1 : 0;
        bool ok = p && p->t == t && verify_psi_cover(g, x, y, *p) && has_shape(g, *p, shape) && paths_ok(g, *p);
        // shape conditions restated from the definitions
        if (ok && shape == PsiShape::star) {
            auto side = [&](const std::vector<Tadpole>& ts, VertexId other) {
                bool avoid = false, link = false;
                for (const auto& tp : ts) {
                    avoid = avoid || !testsupport::tadpole_touches(g, tp.edges(), other);
                    link = link || path_has_link(g, tp, tp.tail, other);
                }
                return avoid && link;
            };
            ok = side(p->tadpoles_x, y) && side(p->tadpoles_y, x);
        }
        if (ok && shape == PsiShape::split_y) {
            for (const auto& tp : p->tadpoles_x) ok = ok && !testsupport::tadpole_touches(g, tp.edges(), y);
            bool avoid = false, link = false;
            for (const auto& tp : p->tadpoles_y) {
                avoid = avoid || !testsupport::tadpole_touches(g, tp.edges(), x);
                link = link || path_has_link(g, tp, x, y);
            }
            ok = ok && avoid && link;
        }
        if (ok && shape == PsiShape::one_y_avoids_x) {
            int avoid = 0;
            for (const auto& tp : p->tadpoles_y) avoid += testsupport::tadpole_touches(g, tp.edges(), x) ? 0 : 1;
            ok = avoid == 1;
        }
        if (ok) ++passed;
        else failures += std::string(" ") + what;
    };
    for (int t = 0; t <= 3; ++t) check("R2yx", GadgetId::R2, Orientation::yx, t, false, PsiShape::plain);
    check("R2xy", GadgetId::R2, Orientation::xy, 2, false, PsiShape::one_y_avoids_x);
    check("R3*", GadgetId::R3, Orientation::xy, 2, true, PsiShape::star);
    check("R4", GadgetId::R4, Orientation::xy, 2, false, PsiShape::split_y);
    check("R5", GadgetId::R5, Orientation::xy, 2, false, PsiShape::split_y);
    std::ostringstream d;
    d << passed << "/" << checked << " frozen families verified with side conditions";
    if (!failures.empty()) d << "; failing:" << failures;
    return {passed == checked, d.str()};
}

// ------------------------------------------------------------------ 5

// Appends a copy of `piece` (terminals 0 and 1 of its own graph) between a and b.
EdgeSet place(std::vector<Edge>& es, VertexId& n, const SignedGraph& piece, VertexId a, VertexId b) {
    std::vector<VertexId> vm(piece.vertex_count());
    for (VertexId v = 0; v < piece.vertex_count(); ++v) vm[v] = v == 0 ? a : v == 1 ? b : n++;
    EdgeSet out;
    for (const Edge& e : piece.edges()) {
        out.push_back(static_cast<EdgeId>(es.size()));
        es.push_back({vm[e.u], vm[e.v], e.sign});
    }
    return out;
}

Outcome chain_composition() {
    std::mt19937_64 rng(505);
    const std::vector<GadgetId> pool{GadgetId::R0, GadgetId::R2, GadgetId::R3, GadgetId::R4, GadgetId::R5};
    std::size_t chains = 0, passed = 0, two_theta = 0;
    std::string first;
    while (chains < 100) {
        std::vector<Edge> es;
        VertexId n = 1, at = 0;
        std::vector<std::pair<EdgeSet, std::pair<VertexId, VertexId>>> b2;
        const std::size_t len = 1 + rng() % 5;
        for (std::size_t i = 0; i < len; ++i) {
            const VertexId next = n++;
            if (rng() % 2 == 0 || (i + 1 == len && b2.empty())) {
                // B2 part: an R gadget in either orientation, or a small random piece
                SignedGraph piece;
                if (rng() % 3 == 0) {
                    SpParams sp;
                    sp.max_edges = 6;
                    sp.max_vertices = 5;
                    sp.loop_prob = 0.2;
                    piece = random_sp_signed(sp, rng());
                } else {
                    piece = gadget(pool[rng() % pool.size()]).graph;
                }
                const bool flip = rng() % 2;
                EdgeSet edges = flip ? place(es, n, piece, next, at) : place(es, n, piece, at, next);
                b2.push_back({edges, {at, next}});
            } else {
                es.push_back({at, next, rng() % 2 ? Sign::negative : Sign::positive});
            }
            if (i + 1 < len && rng() % 4 == 0) es.push_back({next, next, Sign::negative});
            at = next;
        }
        SignedGraph h(n, es);
        PartsPartition chain;
        try {
            chain = parts(h, 0, at);
        } catch (const PreconditionError&) {
            continue;
        }
        // every B2 part needs a Psi(2)-cover; pieces without one are redrawn
        PartCovers covers;
        bool have_all = true;
        for (std::size_t i : chain.indices(PartClass::b2)) {
            const auto& part = chain.parts[i];
            auto p = find_psi_cover_on(h, part.edges, part.source, part.target, PsiShape::plain, 2);
            if (!p) {
                have_all = false;
                break;
            }
            covers[i] = std::move(*p);
        }
        if (!have_all || chain.indices(PartClass::b2).empty()) continue;
        ++chains;
        std::vector<ThetaPattern> thetas{ThetaPattern::mixed()};
        if (chain.indices(PartClass::b2).size() >= 2) {
            thetas.push_back(ThetaPattern::all_negative());
            ++two_theta;
        }
        bool ok = true;
        for (const auto& theta : thetas) {
            try {
                auto cc = series_compose(h, chain, covers, theta);
                ok = ok && verify_chain_cover(h, chain, cc, theta);
                for (int j = 0; j < 4; ++j)
                    ok = ok && testsupport::brute_is_path(h, cc.paths[j].edge_set(), 0, at) &&
                         sign_of(h, cc.paths[j].edge_set()) == theta.signs[j];
                for (const auto& c : cc.circuits) ok = ok && testsupport::member_is_signed_circuit(h, c.edges);
                for (const auto& t : cc.tadpoles_source) ok = ok && testsupport::brute_is_tadpole(h, t.edges(), 0);
                for (const auto& t : cc.tadpoles_target) ok = ok && testsupport::brute_is_tadpole(h, t.edges(), at);
                auto cov = cc.coverage(h.edge_count());
                ok = ok && std::all_of(cov.begin(), cov.end(), [](std::size_t c) { return c == 6; });
            } catch (const Error& e) {
                ok = false;
                if (first.empty()) first = e.what();
            }
        }
        passed += ok ? 1 : 0;
        if (!ok && first.empty()) first = "\n" + graph_to_string(h);
    }
    std::ostringstream d;
    d << passed << "/100 chains verified (" << two_theta << " with both theta)";
    if (!first.empty()) d << "; " << first;
    return {passed == 100, d.str()};
}

// ------------------------------------------------------------------ 6

Outcome two_sum_splices() {
    std::mt19937_64 rng(606);
    std::map<GadgetId, std::size_t> done, ok, draws;
    std::string first;
    SpParams sp;
    sp.max_edges = 7;
    sp.max_vertices = 6;
    sp.loop_prob = 0.15;
    for (GadgetId gid : {GadgetId::D1, GadgetId::D2}) {
        while (done[gid] < 50) {
            if (++draws[gid] > 20000) break;
            SignedGraph h1 = random_sp_signed(sp, rng());
            SignedGraph h2 = random_sp_signed(sp, rng());
            std::vector<Edge> es = h1.edges();
            VertexId n = static_cast<VertexId>(h1.vertex_count());
            EdgeSet h2e = place(es, n, h2, 0, 1);
            SignedGraph g(n, es);
            if (!is_coverable(g).coverable) continue;
            TwoSum s;
            try {
                s = make_two_sum(g, h2e, 0, 1, gid);
            } catch (const PreconditionError&) {
                continue;
            }
            if (!is_coverable(s.g_prime).coverable) continue;
            SolveReport rep;
            try {
                rep = k_cover_feasible(s.g_prime, 6);
            } catch (const CapExceeded&) {
                continue;
            }
            if (!rep.feasible) continue;
            const int t = two_sum_t(s, *rep.family);
            auto psi = find_psi_cover_on(g, h2e, 0, 1, two_sum_shape(gid), t);
            if (!psi) continue;
            ++done[gid];
            try {
                auto out = two_sum_replace(s, *rep.family, *psi);
                if (testsupport::brute_is_k_cover(g, sets_of(out), 6)) ++ok[gid];
            } catch (const Error& e) {
                if (first.empty()) first = e.what();
            }
        }
    }
    std::ostringstream d;
    d << "D1 " << ok[GadgetId::D1] << "/" << done[GadgetId::D1] << " (" << draws[GadgetId::D1] << " draws), D2 "
      << ok[GadgetId::D2] << "/" << done[GadgetId::D2] << " (" << draws[GadgetId::D2] << " draws)";
    if (!first.empty()) d << "; " << first;
    return {ok[GadgetId::D1] == 50 && ok[GadgetId::D2] == 50, d.str()};
}

// ------------------------------------------------------------------ 7

Outcome switching() {
    std::mt19937_64 rng(707);
    std::size_t failures = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 9;
        const std::size_t m = std::max<std::size_t>(n - 1, 1 + rng() % 14);
        auto g = testsupport::random_connected_multigraph(rng, n, m, 0.15, 0.5);
        SwitchSet s;
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 2) s.push_back(v);
        auto gs = switch_at(g, s);
        auto back = switch_at(gs, s);
        const std::size_t e = negativeness(g);
        bool ok = negativeness(gs) == e && e == testsupport::brute_force_epsilon(g);
        ok = ok && negativeness(gs, default_epsilon_vertex_cap, Kernel::serial) == e;
        for (EdgeId x = 0; x < g.edge_count(); ++x) ok = ok && back.edge(x).sign == g.edge(x).sign;
        ok = ok && is_balanced(g) == (e == 0) && is_balanced(gs) == (e == 0);
        failures += ok ? 0 : 1;
    }
    return {failures == 0, "500 pairs, " + std::to_string(failures) + " failures"};
}

// ------------------------------------------------------------------ 8

Outcome circuits() {
    std::mt19937_64 rng(808);
    std::size_t failures = 0, total = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t m = std::max<std::size_t>(n - 1, 1 + rng() % 9);
        auto g = testsupport::random_connected_multigraph(rng, n, m, 0.15, 0.5);
        std::set<EdgeSet> got;
        for (const auto& c : enumerate_circuits(g)) got.insert(c.edges);
        auto want = testsupport::brute_force_circuits(g);
        total += want.size();
        failures += got == want ? 0 : 1;
    }
    return {failures == 0, "200 graphs, " + std::to_string(total) + " circuits, " + std::to_string(failures) + " mismatches"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"end-to-end 6-covers on 300 corpus graphs", end_to_end},
        {"tightness gadget", tightness},
        {"coverability criterion vs oracle", coverability_equivalence},
        {"small-gadget base families", base_families},
        {"chain composition", chain_composition},
        {"two-sum splice", two_sum_splices},
        {"switching and negativeness invariants", switching},
        {"circuit enumeration vs brute force", circuits},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}
