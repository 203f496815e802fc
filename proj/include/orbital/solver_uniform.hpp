#pragma once

#include <utility>
#include <vector>

#include "orbital/labeling.hpp"

namespace orbital {

// Candidate ports for n equal label slots: port k at angle (2k+1)*pi/n, the
// midpoint of slot [k, k+1) * (circumference / n). Throws for n < 1.
std::vector<Port> uniform_ports(int n);

// Optimal labeling for equal label widths: build the feature-to-port cost
// matrix for the chosen style and take a minimum-weight perfect matching.
// The result is leader-length-optimal over all port assignments and is
// crossing-free. Requires (near-)uniform widths unless force_uniform_widths
// is set, in which case widths are treated as circumference / n throughout
// (the reported arcs then describe the equal slots, not the stored widths).
std::pair<Labeling, SolveReport> solve_uniform(const Instance& inst, LeaderStyle style,
                                               bool force_uniform_widths = false);

}  // namespace orbital
