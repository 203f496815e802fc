#pragma once

#include <optional>
#include <vector>

#include "orbital/labeling.hpp"

namespace orbital {

struct HeuristicConfig {
    LeaderStyle style = LeaderStyle::SL;
    long max_swaps = 0;  // <= 0 selects the default budget of 10 * n^2
};

// Swap-uncrossing heuristic: seed the label order by solving the instance as
// if widths were uniform, place with true widths, then repeatedly swap the
// lexicographically smallest pair of features whose leaders cross. On success
// the labeling is crossing-free (not necessarily optimal); on failure the
// fewest-crossings placement seen is returned with success = false.
struct HeuristicResult {
    bool success = false;
    Labeling labeling;
    SolveReport report;
};

HeuristicResult solve_heuristic(const Instance& inst, const HeuristicConfig& cfg);

enum class ExactStatus { Optimal, Infeasible, TimedOut };

struct ExactResult {
    ExactStatus status = ExactStatus::Infeasible;
    std::optional<Labeling> labeling;  // present for Optimal; best incumbent for TimedOut if any
    SolveReport report;
};

// Exact solver: depth-first branch-and-bound over anchored label orders.
// Slots are filled CCW from the anchor; a partial order fixes its ports
// permanently, so branches with a crossing among placed leaders are pruned,
// and cost pruning adds the admissible per-feature bound (radius - r) for
// every unplaced feature. Returns the minimum-TLL crossing-free labeling,
// proves infeasibility, or times out. Throws when n exceeds the cap.
ExactResult solve_exact(const Instance& inst, LeaderStyle style, double time_limit_seconds = 60.0,
                        int n_cap = 12);

// Test hook: every anchored order whose placement is crossing-free, in
// lexicographic order. Intended for small n only.
std::vector<std::vector<int>> feasible_orders(const Instance& inst, LeaderStyle style);

}  // namespace orbital
