#include "sigcover/exact_cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sigcover/types.hpp"

namespace sigcover {

namespace {

class ExactSearch {
public:
    ExactSearch(const ExactCoverProblem& p, std::uint64_t cap) : p_(p), cap_(cap) {
        const std::size_t nr = p.rows.size();
        residual_ = p.demand;
        mult_.assign(nr, 0);
        allowed_.assign(nr, 1);
        zeros_.assign(nr, 0);
        col_rows_.resize(p.columns);
        fit_.assign(p.columns, 0);
        for (std::uint32_t r = 0; r < nr; ++r) {
            if (p.rows[r].empty()) allowed_[r] = 0;
            for (auto c : p.rows[r]) {
                col_rows_[c].push_back(r);
                if (residual_[c] <= 0) zeros_[r]++;
            }
        }
        for (std::uint32_t r = 0; r < nr; ++r)
            if (allowed_[r] && zeros_[r] == 0)
                for (auto c : p.rows[r]) fit_[c]++;
    }

    bool run() { return node(); }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& multiplicity() const { return mult_; }

private:
    const ExactCoverProblem& p_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::vector<int> residual_, mult_;
    std::vector<char> allowed_;
    std::vector<int> zeros_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<int> fit_;  // allowed rows with no exhausted column, per column
    std::vector<int> room_;

    void set_fitting(std::uint32_t r, int delta) {
        for (auto c : p_.rows[r]) fit_[c] += delta;
    }

    void take(std::uint32_t r) {
        mult_[r]++;
        for (auto c : p_.rows[r]) {
            if (--residual_[c] == 0) {
                for (auto q : col_rows_[c]) {
                    if (allowed_[q] && zeros_[q] == 0) set_fitting(q, -1);
                    zeros_[q]++;
                }
            }
        }
    }

    void untake(std::uint32_t r) {
        mult_[r]--;
        for (auto c : p_.rows[r]) {
            if (residual_[c]++ == 0) {
                for (auto q : col_rows_[c]) {
                    zeros_[q]--;
                    if (allowed_[q] && zeros_[q] == 0) set_fitting(q, +1);
                }
            }
        }
    }

    void forbid(std::uint32_t r) {
        allowed_[r] = 0;
        if (zeros_[r] == 0) set_fitting(r, -1);
    }

    void allow(std::uint32_t r) {
        allowed_[r] = 1;
        if (zeros_[r] == 0) set_fitting(r, +1);
    }

    // Each open column must be reachable: the copies its fitting rows can still
    // take, each bounded by the smallest residual on the row, must add up.
    bool capacity_ok() {
        room_.assign(p_.columns, 0);
        for (std::uint32_t r = 0; r < p_.rows.size(); ++r) {
            if (!allowed_[r] || zeros_[r] != 0) continue;
            int cap = std::numeric_limits<int>::max();
            for (auto c : p_.rows[r]) cap = std::min(cap, residual_[c]);
            for (auto c : p_.rows[r]) room_[c] += cap;
        }
        for (std::size_t c = 0; c < p_.columns; ++c)
            if (room_[c] < residual_[c]) return false;
        return true;
    }

    bool node() {
        if (++nodes_ > cap_) throw CapExceeded("exact search exceeded node cap " + std::to_string(cap_));
        int best = -1;
        int best_fit = std::numeric_limits<int>::max();
        for (std::size_t c = 0; c < p_.columns; ++c) {
            if (residual_[c] <= 0) continue;
            if (fit_[c] == 0) return false;
            if (fit_[c] < best_fit || (fit_[c] == best_fit && residual_[c] > residual_[best])) {
                best = static_cast<int>(c);
                best_fit = fit_[c];
            }
        }
        if (best < 0) return true;
        if (!capacity_ok()) return false;
        std::uint32_t row = 0;
        bool found = false;
        for (auto q : col_rows_[best]) {
            if (allowed_[q] && zeros_[q] == 0) {
                row = q;
                found = true;
                break;
            }
        }
        if (!found) return false;
        take(row);
        if (node()) return true;
        untake(row);
        forbid(row);
        bool ok = node();
        allow(row);
        return ok;
    }
};

class SetCoverSearch {
public:
    SetCoverSearch(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows,
                   const std::vector<std::uint64_t>& weight, std::uint64_t cap)
        : columns_(columns), rows_(rows), weight_(weight), cap_(cap), covered_(columns, 0), col_rows_(columns),
          chosen_(rows.size(), 0), banned_(rows.size(), 0) {
        for (std::uint32_t r = 0; r < rows.size(); ++r)
            for (auto c : rows[r]) col_rows_[c].push_back(r);
        // cheapest rows first inside each column
        for (auto& lst : col_rows_)
            std::stable_sort(lst.begin(), lst.end(), [&](std::uint32_t a, std::uint32_t b) {
                return weight_[a] * rows_[b].size() < weight_[b] * rows_[a].size();
            });
    }

    bool feasible() const {
        for (const auto& l : col_rows_)
            if (l.empty()) return false;
        return true;
    }

    void run() {
        greedy();
        search(0);
    }

    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    std::vector<int> best;
    std::uint64_t nodes = 0;

private:
    std::size_t columns_;
    const std::vector<std::vector<std::uint32_t>>& rows_;
    const std::vector<std::uint64_t>& weight_;
    std::uint64_t cap_;
    std::vector<int> covered_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<int> chosen_;
    std::vector<char> banned_;

    void greedy() {
        std::vector<int> cov(columns_, 0);
        std::vector<int> pick(rows_.size(), 0);
        std::uint64_t cost = 0;
        while (true) {
            double best_ratio = -1;
            int best_row = -1;
            for (std::uint32_t r = 0; r < rows_.size(); ++r) {
                if (pick[r]) continue;
                std::size_t gain = 0;
                for (auto c : rows_[r]) gain += cov[c] == 0 ? 1 : 0;
                if (gain == 0) continue;
                double ratio = static_cast<double>(gain) / static_cast<double>(std::max<std::uint64_t>(1, weight_[r]));
                if (ratio > best_ratio) {
                    best_ratio = ratio;
                    best_row = static_cast<int>(r);
                }
            }
            if (best_row < 0) break;
            pick[best_row] = 1;
            cost += weight_[best_row];
            for (auto c : rows_[best_row]) cov[c]++;
        }
        best_cost = cost;
        best = pick;
    }

    // Each uncovered column needs some row; charge it the cheapest per-new-column share.
    double lower_bound() const {
        double lb = 0;
        for (std::size_t c = 0; c < columns_; ++c) {
            if (covered_[c]) continue;
            double cheapest = std::numeric_limits<double>::max();
            for (auto r : col_rows_[c]) {
                if (banned_[r]) continue;
                std::size_t fresh = 0;
                for (auto d : rows_[r]) fresh += covered_[d] == 0 ? 1 : 0;
                cheapest = std::min(cheapest, static_cast<double>(weight_[r]) / static_cast<double>(fresh));
            }
            lb += cheapest;
        }
        return lb;
    }

    void search(std::uint64_t cost) {
        if (++nodes > cap_) throw CapExceeded("set cover search exceeded node cap " + std::to_string(cap_));
        int col = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = 0; c < columns_; ++c) {
            if (covered_[c]) continue;
            std::size_t n = 0;
            for (auto r : col_rows_[c]) n += banned_[r] ? 0 : 1;
            if (n < fewest) {
                fewest = n;
                col = static_cast<int>(c);
            }
        }
        if (col < 0) {
            if (cost < best_cost) {
                best_cost = cost;
                best = chosen_;
            }
            return;
        }
        if (fewest == 0) return;
        if (static_cast<double>(cost) + lower_bound() >= static_cast<double>(best_cost) - 1e-9) return;
        std::vector<std::uint32_t> tried;
        for (auto r : col_rows_[col]) {
            if (banned_[r]) continue;
            chosen_[r] = 1;
            for (auto c : rows_[r]) covered_[c]++;
            search(cost + weight_[r]);
            for (auto c : rows_[r]) covered_[c]--;
            chosen_[r] = 0;
            banned_[r] = 1;
            tried.push_back(r);
        }
        for (auto r : tried) banned_[r] = 0;
    }
};

}  // namespace

ExactCoverResult solve_exact_cover(const ExactCoverProblem& problem, std::uint64_t node_cap) {
    ExactSearch s(problem, node_cap);
    ExactCoverResult res;
    res.feasible = s.run();
    res.nodes = s.nodes();
    if (res.feasible) res.multiplicity = s.multiplicity();
    return res;
}

bool congruence_solvable(const ExactCoverProblem& problem, int p) {
    const std::size_t m = problem.columns;
    const std::size_t n = problem.rows.size();
    auto mod = [p](long v) { return static_cast<int>(((v % p) + p) % p); };
    // one equation per column, one unknown per row, augmented by the demand
    std::vector<std::vector<int>> a(m, std::vector<int>(n + 1, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (auto c : problem.rows[r]) a[c][r] = mod(a[c][r] + 1);
    for (std::size_t c = 0; c < m; ++c) a[c][n] = mod(problem.demand[c]);
    auto inverse = [&](int v) {
        for (int w = 1; w < p; ++w)
            if (v * w % p == 1) return w;
        return 0;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        const int iv = inverse(a[rank][col]);
        for (auto& v : a[rank]) v = v * iv % p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const int f = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] = mod(a[i][j] - f * a[rank][j]);
        }
        ++rank;
    }
    for (std::size_t i = rank; i < m; ++i)
        if (a[i][n] != 0) return false;
    return true;
}

SetCoverResult solve_min_set_cover(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows,
                                   const std::vector<std::uint64_t>& weight, std::uint64_t node_cap) {
    SetCoverSearch s(columns, rows, weight, node_cap);
    SetCoverResult res;
    if (!s.feasible()) return res;
    s.run();
    res.feasible = true;
    res.chosen = s.best;
    res.cost = s.best_cost;
    res.nodes = s.nodes;
    return res;
}

}  // namespace sigcover
