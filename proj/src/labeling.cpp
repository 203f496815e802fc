#include "orbital/labeling.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace orbital {

namespace {

constexpr double kAngleTol = 1e-9;  // radians, for midpoint/tiling agreement

bool is_permutation_of_n(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int f : order) {
        if (f < 0 || f >= n || seen[f]) return false;
        seen[f] = 1;
    }
    return true;
}

}  // namespace

Labeling place_from_order(const Instance& inst, const std::vector<int>& order, LeaderStyle style) {
    const int n = inst.n();
    if (!is_permutation_of_n(order, n))
        throw std::invalid_argument("place_from_order: order is not a permutation of the features");

    Labeling lab;
    lab.style = style;
    lab.order = order;
    lab.ports.resize(n);
    lab.label_arcs.resize(n);
    double prefix = 0.0;
    for (int slot = 0; slot < n; ++slot) {
        const int f = order[slot];
        const double w = inst.features[f].width;
        lab.label_arcs[f] = {prefix, prefix + w};
        lab.ports[f].beta = normalize_angle((prefix + w / 2.0) / inst.radius);
        prefix += w;
    }
    return lab;
}

std::string check_labeling(const Instance& inst, const Labeling& lab) {
    const int n = inst.n();
    std::ostringstream why;
    if (static_cast<int>(lab.ports.size()) != n || static_cast<int>(lab.label_arcs.size()) != n) {
        why << "labeling has " << lab.ports.size() << " ports / " << lab.label_arcs.size()
            << " arcs for " << n << " features";
        return why.str();
    }
    if (!is_permutation_of_n(lab.order, n)) return "labeling order is not a permutation";

    const double circumference = inst.circumference();
    const double len_tol = kAngleTol * inst.radius * 1e3;  // generous absolute slack on lengths
    double cursor = 0.0;
    for (int slot = 0; slot < n; ++slot) {
        const ArcInterval& arc = lab.label_arcs[lab.order[slot]];
        if (std::abs(arc.start - cursor) > len_tol) {
            why << "arc of slot " << slot << " starts at " << arc.start << ", expected " << cursor;
            return why.str();
        }
        if (!(arc.end > arc.start)) {
            why << "arc of slot " << slot << " is empty or reversed";
            return why.str();
        }
        cursor = arc.end;
    }
    if (std::abs(cursor - circumference) > len_tol) {
        why << "arcs cover " << cursor << " of " << circumference;
        return why.str();
    }
    for (int i = 0; i < n; ++i) {
        const double mid = (lab.label_arcs[i].start + lab.label_arcs[i].end) / 2.0;
        const double expected = normalize_angle(mid / inst.radius);
        const double diff = angular_distance(expected, lab.ports[i].beta).delta;
        if (diff > kAngleTol) {
            why << "port of feature " << i << " is off its arc midpoint by " << diff << " rad";
            return why.str();
        }
    }
    return {};
}

CrossingReport count_crossings(const Instance& inst, const Labeling& lab) {
    if (auto why = check_labeling(inst, lab); !why.empty())
        throw std::invalid_argument("count_crossings: inconsistent labeling: " + why);

    CrossingReport rep;
    const int n = inst.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (leaders_cross(lab.style, inst.features[i].position, lab.ports[i],
                              inst.features[j].position, lab.ports[j], inst.radius)) {
                rep.pairs.emplace_back(i, j);
            }
        }
    }
    rep.count = static_cast<int>(rep.pairs.size());
    return rep;
}

double total_leader_length(const Instance& inst, const Labeling& lab) {
    double sum = 0.0;
    for (int i = 0; i < inst.n(); ++i)
        sum += leader_length(lab.style, inst.features[i].position, lab.ports[i], inst.radius);
    return sum;
}

std::string labeling_to_json_string(const Labeling& lab, double tll) {
    nlohmann::json j;
    j["style"] = to_string(lab.style);
    j["order"] = lab.order;
    std::vector<double> betas;
    betas.reserve(lab.ports.size());
    for (const Port& p : lab.ports) betas.push_back(p.beta);
    j["ports"] = betas;
    j["tll"] = tll;
    return j.dump(2) + "\n";
}

Labeling labeling_from_json_string(const std::string& text, const Instance& inst) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("labeling JSON parse failure: ") + e.what());
    }
    try {
        const std::string style_name = j.at("style").get<std::string>();
        const std::vector<int> order = j.at("order").get<std::vector<int>>();
        const std::vector<double> betas = j.at("ports").get<std::vector<double>>();
        if (betas.size() != order.size())
            throw SchemaError("labeling JSON: ports/order size mismatch");

        Labeling lab = place_from_order(inst, order, style_from_string(style_name));
        for (std::size_t i = 0; i < betas.size(); ++i) {
            if (!std::isfinite(betas[i]))
                throw SchemaError("labeling JSON: non-finite port angle");
            if (angular_distance(normalize_angle(betas[i]), lab.ports[i].beta).delta >
                kAngleTol * 1e3) {
                std::ostringstream what;
                what << "labeling JSON: stored port " << i
                     << " disagrees with the arc midpoint implied by the order";
                throw SchemaError(what.str());
            }
        }
        return lab;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("labeling JSON schema violation: ") + e.what());
    }
}

void write_labeling_json(const Labeling& lab, double tll, const std::filesystem::path& path) {
    if (path.empty()) throw std::invalid_argument("write_labeling_json: empty path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << labeling_to_json_string(lab, tll);
    if (!out) throw std::runtime_error("write failure: " + path.string());
}

Labeling read_labeling_json(const std::filesystem::path& path, const Instance& inst) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open for reading: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return labeling_from_json_string(text, inst);
}

}  // namespace orbital
