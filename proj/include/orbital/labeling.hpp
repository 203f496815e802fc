#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "orbital/geometry.hpp"
#include "orbital/instance.hpp"

namespace orbital {

// Half-open interval [start, end) in arc-length units measured CCW from the
// anchor along the boundary.
struct ArcInterval {
    double start = 0.0;
    double end = 0.0;
};

// A complete solution: per-feature ports and label arcs plus the CCW label
// sequence starting at the anchor. Arcs tile [0, circumference) and every port
// sits at its arc's midpoint.
struct Labeling {
    LeaderStyle style = LeaderStyle::SL;
    std::vector<int> order;          // order[k] = feature owning the k-th label slot
    std::vector<Port> ports;         // ports[i] = port of feature i
    std::vector<ArcInterval> label_arcs;  // label_arcs[i] = arc of feature i
};

struct SolveReport {
    double tll = 0.0;
    int crossings = 0;
    double wall_time = 0.0;  // seconds
    bool optimal = false;
    long iterations = 0;
};

struct CrossingReport {
    int count = 0;
    std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, lexicographically sorted
};

// Lays labels CCW from the anchor in the given feature order using the
// instance's true widths; ports at arc midpoints. Throws on a non-permutation.
Labeling place_from_order(const Instance& inst, const std::vector<int>& order, LeaderStyle style);

// Verifies structural consistency between an instance and a labeling: matching
// sizes, a valid order permutation, arcs tiling the boundary in order, and
// ports at arc midpoints. Label arcs are not required to equal the instance
// widths, so placements computed under substituted widths also qualify.
// Returns an explanation for the first failed rule, or an empty string.
std::string check_labeling(const Instance& inst, const Labeling& lab);

// Exact pairwise crossing count via the style-appropriate geometric predicate.
// Throws std::invalid_argument when the labeling is inconsistent.
CrossingReport count_crossings(const Instance& inst, const Labeling& lab);

// Sum of per-leader lengths for the labeling's style.
double total_leader_length(const Instance& inst, const Labeling& lab);

// JSON form: {"style", "order", "ports", "tll"}. Arcs are not stored; reading
// rebuilds them from the order and the instance widths, then cross-checks the
// stored ports against the rebuilt ones (SchemaError on mismatch).
std::string labeling_to_json_string(const Labeling& lab, double tll);
Labeling labeling_from_json_string(const std::string& text, const Instance& inst);
void write_labeling_json(const Labeling& lab, double tll, const std::filesystem::path& path);
Labeling read_labeling_json(const std::filesystem::path& path, const Instance& inst);

}  // namespace orbital
