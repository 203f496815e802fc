#include "orbital/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbital/rng.hpp"

namespace orbital {

namespace {

constexpr double kWidthSumRelTol = 1e-9;
constexpr double kRadiusDistinctRelTol = 1e-6;  // radii closer than this fraction of R collide
constexpr int kMaxGenerateAttempts = 100000;

double euclidean(const PolarPoint& a, const PolarPoint& b) {
    const Vec2 pa = to_cartesian(a);
    const Vec2 pb = to_cartesian(b);
    return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

}  // namespace

std::string to_string(Distribution d) {
    switch (d) {
        case Distribution::Uniform: return "uniform";
        case Distribution::UniformOffCenter: return "uniform_off_center";
        case Distribution::OffCenter: return "off_center";
    }
    throw std::logic_error("unknown distribution");
}

Distribution distribution_from_string(const std::string& s) {
    if (s == "uniform") return Distribution::Uniform;
    if (s == "uniform_off_center") return Distribution::UniformOffCenter;
    if (s == "off_center") return Distribution::OffCenter;
    throw std::invalid_argument("unknown distribution name: " + s);
}

std::vector<Violation> validate(const Instance& inst, double min_separation) {
    std::vector<Violation> out;
    const int n = inst.n();

    double width_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const Feature& f = inst.features[i];
        if (!(f.width > 0.0)) {
            out.push_back({ViolationKind::WidthPositive, i, -1,
                           "feature " + std::to_string(i) + " has non-positive width"});
        }
        width_sum += f.width;
        if (!(f.position.r < inst.radius)) {
            out.push_back({ViolationKind::FeatureOutside, i, -1,
                           "feature " + std::to_string(i) + " lies outside the disk"});
        }
    }

    const double target = inst.circumference();
    if (std::abs(width_sum - target) > kWidthSumRelTol * target) {
        std::ostringstream msg;
        msg << "widths sum to " << width_sum << ", expected " << target;
        out.push_back({ViolationKind::WidthSum, -1, -1, msg.str()});
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const PolarPoint& a = inst.features[i].position;
            const PolarPoint& b = inst.features[j].position;
            if (std::abs(a.r - b.r) < kRadiusDistinctRelTol * inst.radius) {
                out.push_back({ViolationKind::GeneralPosition, i, j,
                               "features " + std::to_string(i) + " and " + std::to_string(j) +
                                   " share the same radius"});
            }
            if (min_separation > 0.0 && euclidean(a, b) < min_separation) {
                out.push_back({ViolationKind::MinSeparation, i, j,
                               "features " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are closer than the minimum separation"});
            }
        }
    }
    return out;
}

Instance normalize_widths(Instance inst) {
    double sum = 0.0;
    for (const Feature& f : inst.features) {
        if (!(f.width > 0.0)) throw std::invalid_argument("normalize_widths: non-positive width");
        sum += f.width;
    }
    const double scale = inst.circumference() / sum;
    for (Feature& f : inst.features) f.width *= scale;
    return inst;
}

Instance generate(const GeneratorConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("generate: n must be at least 1");
    if (!(cfg.feature_radius_max < cfg.radius))
        throw std::invalid_argument("generate: feature_radius_max must be below the disk radius");
    if (!(cfg.min_separation > 0.0))
        throw std::invalid_argument("generate: min_separation must be positive");

    Rng rng(cfg.seed);
    Instance inst;
    inst.radius = cfg.radius;
    inst.id = to_string(cfg.distribution) + "_" + std::to_string(cfg.n) + "_" +
              std::to_string(cfg.seed);

    // The clustered distributions share one offset center per instance.
    Vec2 cluster{};
    if (cfg.distribution != Distribution::Uniform) {
        const double theta_c = rng.uniform(0.0, kTau);
        const double r_c = rng.uniform(0.0, 100.0);
        cluster = to_cartesian({r_c, theta_c});
    }
    const int uniform_count = cfg.distribution == Distribution::Uniform ? cfg.n
                              : cfg.distribution == Distribution::OffCenter
                                  ? 0
                                  : (cfg.n + 1) / 2;

    int attempts = 0;
    std::vector<PolarPoint> placed;
    placed.reserve(cfg.n);
    while (static_cast<int>(placed.size()) < cfg.n) {
        if (++attempts > kMaxGenerateAttempts)
            throw std::runtime_error("generate: resampling budget exhausted (over-constrained config)");

        PolarPoint cand;
        if (static_cast<int>(placed.size()) < uniform_count) {
            cand.theta = rng.uniform(0.0, kTau);
            cand.r = rng.uniform(0.0, cfg.feature_radius_max);
        } else {
            const double off_angle = rng.uniform(0.0, kTau);
            const double off_radius = std::abs(rng.normal(0.0, 75.0));
            const Vec2 p{cluster.x + off_radius * std::cos(off_angle),
                         cluster.y + off_radius * std::sin(off_angle)};
            cand.r = std::hypot(p.x, p.y);
            cand.theta = normalize_angle(std::atan2(p.y, p.x));
            if (cand.r > cfg.feature_radius_max) continue;
        }

        bool ok = true;
        for (const PolarPoint& q : placed) {
            if (std::abs(q.r - cand.r) < kRadiusDistinctRelTol * cfg.radius ||
                euclidean(q, cand) < cfg.min_separation) {
                ok = false;
                break;
            }
        }
        if (ok) placed.push_back(cand);
    }

    inst.features.reserve(cfg.n);
    for (int i = 0; i < cfg.n; ++i) {
        Feature f;
        f.position = placed[i];
        f.label_text = std::to_string(i);
        f.width = 1.0;
        inst.features.push_back(std::move(f));
    }
    if (cfg.uniform_widths) {
        const double w = inst.circumference() / cfg.n;
        for (Feature& f : inst.features) f.width = w;
    } else {
        for (Feature& f : inst.features) f.width = rng.uniform(cfg.width_min, cfg.width_max);
        inst = normalize_widths(std::move(inst));
    }
    return inst;
}

std::string to_json_string(const Instance& inst) {
    nlohmann::json j;
    j["id"] = inst.id;
    j["radius"] = inst.radius;
    auto& feats = j["features"] = nlohmann::json::array();
    for (const Feature& f : inst.features) {
        feats.push_back({{"theta", f.position.theta},
                         {"r", f.position.r},
                         {"width", f.width},
                         {"text", f.label_text}});
    }
    return j.dump(2) + "\n";
}

Instance from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("instance JSON parse failure: ") + e.what());
    }

    const auto require_finite = [](double v, const char* what) {
        if (!std::isfinite(v)) throw SchemaError(std::string("non-finite value for ") + what);
        return v;
    };

    Instance inst;
    try {
        inst.id = j.at("id").get<std::string>();
        inst.radius = require_finite(j.at("radius").get<double>(), "radius");
        for (const auto& fj : j.at("features")) {
            Feature f;
            f.position.theta = require_finite(fj.at("theta").get<double>(), "theta");
            f.position.r = require_finite(fj.at("r").get<double>(), "r");
            f.width = require_finite(fj.at("width").get<double>(), "width");
            f.label_text = fj.at("text").get<std::string>();
            inst.features.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("instance JSON schema violation: ") + e.what());
    }

    auto violations = validate(inst);
    if (!violations.empty()) {
        std::string msg = "instance fails validation: " + violations.front().message;
        throw ValidationError(std::move(msg), std::move(violations));
    }
    return inst;
}

void write_json(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << to_json_string(inst);
    if (!out) throw std::runtime_error("write failure: " + path.string());
}

Instance read_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open instance file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

}  // namespace orbital
