#include "orbital/solver_uniform.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "orbital/assignment.hpp"

namespace orbital {

std::vector<Port> uniform_ports(int n) {
    if (n < 1) throw std::invalid_argument("uniform_ports: n must be at least 1");
    std::vector<Port> ports(n);
    for (int k = 0; k < n; ++k) ports[k].beta = normalize_angle((2 * k + 1) * kPi / n);
    return ports;
}

std::pair<Labeling, SolveReport> solve_uniform(const Instance& inst, LeaderStyle style,
                                               bool force_uniform_widths) {
    const auto t0 = std::chrono::steady_clock::now();

    if (auto violations = validate(inst); !violations.empty()) {
        std::string msg = "solve_uniform: invalid instance: " + violations.front().message;
        throw ValidationError(std::move(msg), std::move(violations));
    }
    const int n = inst.n();
    const double slot = inst.circumference() / n;
    if (!force_uniform_widths) {
        for (const Feature& f : inst.features) {
            if (std::abs(f.width - slot) > 1e-6 * slot)
                throw std::invalid_argument(
                    "solve_uniform: widths are not uniform; pass force_uniform_widths to "
                    "solve for equal slots regardless");
        }
    }

    const std::vector<Port> ports = uniform_ports(n);
    CostMatrix w;
    w.n = n;
    w.costs.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            w.at(i, k) = leader_length(style, inst.features[i].position, ports[k], inst.radius);

    const Matching m = min_weight_matching(w);

    Labeling lab;
    lab.style = style;
    lab.order.assign(n, -1);
    lab.ports.resize(n);
    lab.label_arcs.resize(n);
    for (int i = 0; i < n; ++i) {
        const int k = m.assignment[i];
        lab.order[k] = i;
        lab.ports[i] = ports[k];
        lab.label_arcs[i] = {k * slot, (k + 1) * slot};
    }

    SolveReport rep;
    rep.tll = m.total_cost;
    rep.crossings = count_crossings(inst, lab).count;
    rep.optimal = true;
    rep.iterations = n;
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(lab), rep};
}

}  // namespace orbital
