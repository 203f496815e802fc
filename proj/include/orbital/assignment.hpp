#pragma once

#include <vector>

namespace orbital {

// Square cost matrix; costs[i*n + j] is the cost of assigning row i to column j.
struct CostMatrix {
    int n = 0;
    std::vector<double> costs;

    double at(int i, int j) const { return costs[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return costs[static_cast<std::size_t>(i) * n + j]; }
};

struct Matching {
    std::vector<int> assignment;  // assignment[i] = column matched to row i
    double total_cost = 0.0;
};

// Minimum-weight perfect matching via the Hungarian method with potentials,
// O(n^3). Among all minimum-cost matchings, returns the one with the
// lexicographically smallest assignment vector. Throws std::invalid_argument
// for malformed (wrong-size, non-finite, or negative) matrices.
Matching min_weight_matching(const CostMatrix& w);

}  // namespace orbital
