#include "sigcover/oracle.hpp"

#include <chrono>
#include <map>

#include "sigcover/exact_cover.hpp"

namespace sigcover {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Signed circuits of g, found on the suppressed graph and expanded back.
struct CircuitRows {
    Suppression sup;
    std::vector<SignedCircuit> small;  // on sup.graph
    std::vector<EdgeSet> expanded;     // on g
};

CircuitRows circuit_rows(const SignedGraph& g, const OracleCaps& caps) {
    CircuitRows cr;
    cr.sup = suppress(g);
    cr.small = enumerate_signed_circuits(cr.sup.graph, caps.circuits, caps.circuits);
    for (const auto& sc : cr.small) {
        std::vector<EdgeId> es;
        for (EdgeId e : sc.edges) es.insert(es.end(), cr.sup.edge_paths[e].begin(), cr.sup.edge_paths[e].end());
        cr.expanded.push_back(make_edge_set(std::move(es)));
    }
    return cr;
}

}  // namespace

namespace {

bool congruence_ok(const ExactCoverProblem& p) {
    for (int prime : {2, 3, 5})
        if (!congruence_solvable(p, prime)) return false;
    return true;
}

// Exact k-cover search on the suppressed graph. A k-cover is also assembled
// from an a-cover plus a (k-a)-cover when the direct search stalls, so the
// quick attempts run with a small node budget before the full one.
class KCoverSearch {
public:
    KCoverSearch(const CircuitRows& cr, std::uint64_t node_cap) : cr_(cr), cap_(node_cap) {}

    std::optional<std::vector<int>> solve(std::size_t k) {
        auto p = problem(k);
        if (!congruence_ok(p)) return std::nullopt;
        if (auto q = quick(k)) return q;
        if (known_.count(k)) return known_[k];
        auto res = run(p, cap_);
        if (!res.feasible) return std::nullopt;
        return res.multiplicity;
    }

    std::uint64_t nodes = 0;

private:
    static constexpr std::uint64_t quick_budget = 20000;
    const CircuitRows& cr_;
    std::uint64_t cap_;
    std::map<std::size_t, std::optional<std::vector<int>>> known_;  // settled exactly
    std::map<std::size_t, std::optional<std::vector<int>>> quick_;   // quick attempt results

    ExactCoverProblem problem(std::size_t k) const {
        ExactCoverProblem p;
        p.columns = cr_.sup.graph.edge_count();
        p.demand.assign(p.columns, static_cast<int>(k));
        for (const auto& sc : cr_.small) p.rows.emplace_back(sc.edges.begin(), sc.edges.end());
        return p;
    }

    ExactCoverResult run(const ExactCoverProblem& p, std::uint64_t budget) {
        try {
            auto r = solve_exact_cover(p, budget);
            nodes += r.nodes;
            return r;
        } catch (const CapExceeded&) {
            nodes += budget;
            throw;
        }
    }

    // Witness found without exceeding small budgets, or nullopt if none was found
    // (which says nothing unless recorded in known_).
    std::optional<std::vector<int>> quick(std::size_t k) {
        if (auto it = quick_.find(k); it != quick_.end()) return it->second;
        quick_[k] = std::nullopt;
        std::optional<std::vector<int>> out;
        auto p = problem(k);
        if (!congruence_ok(p)) {
            known_[k] = std::nullopt;
        } else {
            try {
                auto r = run(p, quick_budget);
                if (r.feasible) out = r.multiplicity;
                else known_[k] = std::nullopt;
            } catch (const CapExceeded&) {
                for (std::size_t a = 1; a + a <= k && !out; ++a) {
                    auto wa = quick(a);
                    if (!wa) continue;
                    auto wb = quick(k - a);
                    if (!wb) continue;
                    std::vector<int> sum(*wa);
                    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*wb)[i];
                    out = std::move(sum);
                }
            }
        }
        quick_[k] = out;
        return out;
    }
};

}  // namespace

SolveReport k_cover_feasible(const SignedGraph& g, std::size_t k, const OracleCaps& caps) {
    auto t0 = Clock::now();
    SolveReport rep;
    if (k == 0 || g.edge_count() == 0) {
        rep.feasible = true;
        rep.family = CoverFamily{};
        rep.wall_seconds = seconds_since(t0);
        return rep;
    }
    auto cr = circuit_rows(g, caps);
    KCoverSearch search(cr, caps.nodes);
    auto mult = search.solve(k);
    rep.nodes_explored = search.nodes;
    rep.feasible = mult.has_value();
    if (mult) {
        CoverFamily f;
        for (std::size_t r = 0; r < mult->size(); ++r) {
            if ((*mult)[r] == 0) continue;
            auto sc = is_signed_circuit(g, cr.expanded[r]);
            if (!sc) throw Error("internal: expanded row is not a signed circuit");
            for (int i = 0; i < (*mult)[r]; ++i) f.add_circuit(*sc);
        }
        if (auto v = verify_k_cover(g, f, k); !v) throw Error("internal: oracle witness fails verification: " + v.violation);
        rep.family = std::move(f);
    }
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

std::optional<std::size_t> min_k_with_cover(const SignedGraph& g, std::size_t k_max, const OracleCaps& caps) {
    for (std::size_t k = 1; k <= k_max; ++k)
        if (k_cover_feasible(g, k, caps).feasible) return k;
    return std::nullopt;
}

LengthReport min_cover_length(const SignedGraph& g, const OracleCaps& caps) {
    auto t0 = Clock::now();
    LengthReport rep;
    if (g.edge_count() == 0) return rep;
    auto cr = circuit_rows(g, caps);
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint64_t> weight;
    for (std::size_t i = 0; i < cr.small.size(); ++i) {
        rows.emplace_back(cr.small[i].edges.begin(), cr.small[i].edges.end());
        weight.push_back(cr.expanded[i].size());
    }
    auto res = solve_min_set_cover(cr.sup.graph.edge_count(), rows, weight, caps.nodes);
    if (!res.feasible) throw PreconditionError("graph is not coverable: some edge lies in no signed circuit");
    rep.length = res.cost;
    rep.nodes_explored = res.nodes;
    for (std::size_t r = 0; r < res.chosen.size(); ++r)
        if (res.chosen[r]) rep.family.add_circuit(*is_signed_circuit(g, cr.expanded[r]));
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

namespace {

struct PsiRows {
    ExactCoverProblem problem;
    std::vector<std::pair<Role, EdgeSet>> rows;
    bool impossible = false;
};

// Rows and columns of the Psi search: edge columns first, then one column per
// role class (positive paths, negative paths, two tadpole classes per terminal).
PsiRows psi_rows(const SignedGraph& h, VertexId x, VertexId y, const PsiSearchOptions& opt,
                 const std::vector<int>& edge_demand, const RowFilter& keep, const OracleCaps& caps) {
    if (opt.t < 0 || opt.t > 3) throw PreconditionError("t must lie in [0,3]");
    if (edge_demand.size() != h.edge_count()) throw PreconditionError("one demand per edge expected");
    PsiRows out;
    if (opt.star && opt.t != 2) {
        out.impossible = true;
        return out;
    }
    const int t = opt.t;
    const int ty = 6 - 2 * t;
    const std::size_t m = h.edge_count();

    enum Col { POS, NEG, TX_A, TX_B, TY_A, TY_B };
    std::vector<int> demand = edge_demand;
    int tx_a = t, tx_b = 0, ty_a = ty, ty_b = 0;
    if (opt.star) {
        tx_a = tx_b = 1;
        ty_a = ty_b = 1;
    } else if (opt.split_y_shape) {
        ty_a = ty_b = 1;
        if (ty != 2) out.impossible = true;
    } else if (opt.y_tadpoles_avoiding_x) {
        ty_a = *opt.y_tadpoles_avoiding_x;
        ty_b = ty - ty_a;
        if (ty_b < 0 || ty_a < 0) out.impossible = true;
    }
    if (out.impossible) return out;
    for (int d : {t, t, tx_a, tx_b, ty_a, ty_b}) demand.push_back(d);

    auto circuits = enumerate_circuits(h, caps.circuits);
    auto signed_circuits = enumerate_signed_circuits(h, caps.circuits, caps.circuits);
    auto paths = enumerate_xy_paths(h, x, y, caps.circuits);
    auto tads_x = enumerate_tadpoles(h, x, circuits, caps.circuits);
    auto tads_y = enumerate_tadpoles(h, y, circuits, caps.circuits);

    ExactCoverProblem& p = out.problem;
    p.columns = m + 6;
    p.demand = demand;
    auto add = [&](Role role, const EdgeSet& es, int col) {
        if (keep && !keep(role, es)) return;
        std::vector<std::uint32_t> cols(es.begin(), es.end());
        if (col >= 0) cols.push_back(static_cast<std::uint32_t>(m + col));
        p.rows.push_back(std::move(cols));
        out.rows.emplace_back(role, es);
    };
    for (const auto& sc : signed_circuits) add(Role::signed_circuit, sc.edges, -1);
    for (const auto& path : paths)
        add(path.sign == Sign::positive ? Role::positive_path : Role::negative_path, path.edge_set(),
            path.sign == Sign::positive ? POS : NEG);
    for (const auto& tp : tads_x) {
        const bool avoids = !tadpole_contains(h, tp, y);
        const bool link = path_has_link(h, tp, x, y);
        int col = TX_A;
        if (opt.star) {
            if (avoids) col = TX_A;
            else if (link) col = TX_B;
            else continue;
        } else if ((opt.x_tadpoles_avoid_y || opt.split_y_shape) && !avoids) {
            continue;
        }
        add(Role::tadpole_at_x, tp.edges(), col);
    }
    for (const auto& tp : tads_y) {
        const bool avoids = !tadpole_contains(h, tp, x);
        const bool link = path_has_link(h, tp, y, x);
        int col = TY_A;
        if (opt.star || opt.split_y_shape) {
            if (avoids) col = TY_A;
            else if (link) col = TY_B;
            else continue;
        } else if (opt.y_tadpoles_avoiding_x) {
            col = avoids ? TY_A : TY_B;
        } else if (opt.y_tadpoles_avoid_x && !avoids) {
            continue;
        }
        add(Role::tadpole_at_y, tp.edges(), col);
    }
    return out;
}

}  // namespace

std::optional<std::vector<std::pair<Role, EdgeSet>>> find_psi_members(const SignedGraph& h, VertexId x, VertexId y,
                                                                       const PsiSearchOptions& opt,
                                                                       const std::vector<int>& edge_demand,
                                                                       const RowFilter& keep, const OracleCaps& caps,
                                                                       std::uint64_t* nodes) {
    if (nodes) *nodes = 0;
    auto pr = psi_rows(h, x, y, opt, edge_demand, keep, caps);
    if (pr.impossible || !congruence_ok(pr.problem)) return std::nullopt;
    auto res = solve_exact_cover(pr.problem, caps.nodes);
    if (nodes) *nodes = res.nodes;
    if (!res.feasible) return std::nullopt;
    std::vector<std::pair<Role, EdgeSet>> members;
    for (std::size_t r = 0; r < pr.rows.size(); ++r)
        for (int i = 0; i < res.multiplicity[r]; ++i) members.push_back(pr.rows[r]);
    return members;
}

std::optional<PsiCover> find_psi_cover(const SignedGraph& h, VertexId x, VertexId y, const PsiSearchOptions& opt,
                                       const OracleCaps& caps, std::uint64_t* nodes) {
    auto members = find_psi_members(h, x, y, opt, std::vector<int>(h.edge_count(), 6), {}, caps, nodes);
    if (!members) return std::nullopt;
    PsiCover pc = make_psi_cover(h, x, y, opt.t, opt.star, *members);
    if (auto v = verify_psi_cover(h, x, y, pc); !v) throw Error("internal: psi search witness fails: " + v.violation);
    return pc;
}

std::optional<std::vector<EdgeSet>> find_cover_members(const SignedGraph& g, const std::vector<int>& edge_demand,
                                                       const RowFilter& keep, const OracleCaps& caps) {
    if (edge_demand.size() != g.edge_count()) throw PreconditionError("one demand per edge expected");
    ExactCoverProblem p;
    p.columns = g.edge_count();
    p.demand = edge_demand;
    std::vector<EdgeSet> rows;
    for (const auto& sc : enumerate_signed_circuits(g, caps.circuits, caps.circuits)) {
        if (keep && !keep(Role::signed_circuit, sc.edges)) continue;
        p.rows.emplace_back(sc.edges.begin(), sc.edges.end());
        rows.push_back(sc.edges);
    }
    if (!congruence_ok(p)) return std::nullopt;
    auto res = solve_exact_cover(p, caps.nodes);
    if (!res.feasible) return std::nullopt;
    std::vector<EdgeSet> out;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int i = 0; i < res.multiplicity[r]; ++i) out.push_back(rows[r]);
    return out;
}

}  // namespace sigcover
