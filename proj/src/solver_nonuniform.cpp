#include "orbital/solver_nonuniform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbital/solver_uniform.hpp"

namespace orbital {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct BranchState {
    const Instance* inst;
    LeaderStyle style;
    Clock::time_point deadline;
    bool timed_out = false;
    long nodes = 0;

    std::vector<int> order;        // order[0..depth-1] filled
    std::vector<char> used;
    std::vector<double> betas;     // per placed feature
    double prefix = 0.0;           // arc length consumed by placed labels
    double cost = 0.0;
    double remaining_bound = 0.0;  // sum of (radius - r) over unplaced features

    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best_order;

    void search(int depth) {
        if ((++nodes & 4095) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return;
        }
        const int n = inst->n();
        if (depth == n) {
            if (cost < best_cost) {
                best_cost = cost;
                best_order = order;
            }
            return;
        }
        for (int f = 0; f < n && !timed_out; ++f) {
            if (used[f]) continue;
            const Feature& feat = inst->features[f];
            const double beta = normalize_angle((prefix + feat.width / 2.0) / inst->radius);
            const double len = leader_length(style, feat.position, {beta}, inst->radius);
            const double slack = remaining_bound - (inst->radius - feat.position.r);
            if (cost + len + slack >= best_cost) continue;

            bool crosses = false;
            for (int d = 0; d < depth; ++d) {
                const int g = order[d];
                if (leaders_cross(style, feat.position, {beta}, inst->features[g].position,
                                  {betas[g]}, inst->radius)) {
                    crosses = true;
                    break;
                }
            }
            if (crosses) continue;

            order[depth] = f;
            used[f] = 1;
            betas[f] = beta;
            prefix += feat.width;
            cost += len;
            remaining_bound = slack;
            search(depth + 1);
            remaining_bound = slack + (inst->radius - feat.position.r);
            cost -= len;
            prefix -= feat.width;
            used[f] = 0;
        }
    }
};

void require_valid(const Instance& inst, const char* who) {
    if (auto violations = validate(inst); !violations.empty()) {
        std::string msg = std::string(who) + ": invalid instance: " + violations.front().message;
        throw ValidationError(std::move(msg), std::move(violations));
    }
}

}  // namespace

HeuristicResult solve_heuristic(const Instance& inst, const HeuristicConfig& cfg) {
    const auto t0 = Clock::now();
    require_valid(inst, "solve_heuristic");
    const int n = inst.n();
    const long budget = cfg.max_swaps > 0 ? cfg.max_swaps : 10L * n * n;

    // Seed order: solve as if all labels had the equal slot width, with costs
    // of the requested style, then keep only the resulting label sequence.
    std::vector<int> order = solve_uniform(inst, cfg.style, /*force_uniform_widths=*/true)
                                 .first.order;

    HeuristicResult res;
    res.report.optimal = false;
    long swaps = 0;
    int best_crossings = std::numeric_limits<int>::max();
    while (true) {
        Labeling lab = place_from_order(inst, order, cfg.style);
        const CrossingReport cr = count_crossings(inst, lab);
        if (cr.count < best_crossings) {
            best_crossings = cr.count;
            res.labeling = lab;
        }
        if (cr.count == 0) {
            res.success = true;
            res.labeling = std::move(lab);
            break;
        }
        if (swaps >= budget) {
            res.success = false;
            break;
        }
        // Uncross the lexicographically smallest crossing pair by exchanging
        // the two labels' positions in the order.
        const auto [a, b] = cr.pairs.front();
        const auto pa = std::find(order.begin(), order.end(), a);
        const auto pb = std::find(order.begin(), order.end(), b);
        std::iter_swap(pa, pb);
        ++swaps;
    }

    res.report.iterations = swaps;
    res.report.crossings = res.success ? 0 : best_crossings;
    res.report.tll = total_leader_length(inst, res.labeling);
    res.report.wall_time = seconds_since(t0);
    return res;
}

ExactResult solve_exact(const Instance& inst, LeaderStyle style, double time_limit_seconds,
                        int n_cap) {
    const auto t0 = Clock::now();
    require_valid(inst, "solve_exact");
    const int n = inst.n();
    if (n > n_cap)
        throw std::invalid_argument("solve_exact: instance size " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(n_cap) +
                                    " (raise n_cap to override)");

    BranchState st;
    st.inst = &inst;
    st.style = style;
    st.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(time_limit_seconds));
    st.order.assign(n, -1);
    st.used.assign(n, 0);
    st.betas.assign(n, 0.0);
    for (const Feature& f : inst.features) st.remaining_bound += inst.radius - f.position.r;
    st.search(0);

    ExactResult res;
    res.report.iterations = st.nodes;
    res.report.wall_time = seconds_since(t0);
    const bool found = std::isfinite(st.best_cost);
    if (st.timed_out) {
        res.status = ExactStatus::TimedOut;
        res.report.optimal = false;
    } else if (!found) {
        res.status = ExactStatus::Infeasible;
        res.report.optimal = false;
        return res;
    } else {
        res.status = ExactStatus::Optimal;
        res.report.optimal = true;
    }
    if (found) {
        res.labeling = place_from_order(inst, st.best_order, style);
        res.report.tll = total_leader_length(inst, *res.labeling);
        res.report.crossings = count_crossings(inst, *res.labeling).count;
    }
    return res;
}

std::vector<std::vector<int>> feasible_orders(const Instance& inst, LeaderStyle style) {
    require_valid(inst, "feasible_orders");
    const int n = inst.n();
    std::vector<std::vector<int>> out;
    std::vector<int> order;
    std::vector<char> used(n, 0);
    std::vector<double> betas(n, 0.0);

    const auto dfs = [&](auto&& self, double prefix) -> void {
        const int depth = static_cast<int>(order.size());
        if (depth == n) {
            out.push_back(order);
            return;
        }
        for (int f = 0; f < n; ++f) {
            if (used[f]) continue;
            const Feature& feat = inst.features[f];
            const double beta = normalize_angle((prefix + feat.width / 2.0) / inst.radius);
            bool crosses = false;
            for (int g = 0; g < n && !crosses; ++g) {
                if (!used[g]) continue;
                crosses = leaders_cross(style, feat.position, {beta}, inst.features[g].position,
                                        {betas[g]}, inst.radius);
            }
            if (crosses) continue;
            used[f] = 1;
            betas[f] = beta;
            order.push_back(f);
            self(self, prefix + feat.width);
            order.pop_back();
            used[f] = 0;
        }
    };
    dfs(dfs, 0.0);
    return out;
}

}  // namespace orbital
