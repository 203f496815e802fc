#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbital/geometry.hpp"

namespace orbital {

struct Feature {
    PolarPoint position;
    std::string label_text;
    double width = 0.0;  // label arc length along the boundary, same units as the radius
};

struct Instance {
    std::string id;
    double radius = 0.0;
    std::vector<Feature> features;

    int n() const { return static_cast<int>(features.size()); }
    double circumference() const { return kTau * radius; }
};

enum class Distribution { Uniform, UniformOffCenter, OffCenter };

std::string to_string(Distribution d);
Distribution distribution_from_string(const std::string& s);

struct GeneratorConfig {
    int n = 1;
    Distribution distribution = Distribution::Uniform;
    std::uint64_t seed = 0;
    double radius = 200.0;
    double feature_radius_max = 150.0;
    double min_separation = 5.0;
    double width_min = 1.0;
    double width_max = 5.0;
    bool uniform_widths = false;
};

enum class ViolationKind {
    WidthPositive,     // some label width is not strictly positive
    FeatureOutside,    // some feature radius reaches or exceeds the disk radius
    WidthSum,          // widths do not sum to the boundary circumference
    GeneralPosition,   // two features share (nearly) the same radius
    MinSeparation,     // two features are closer than the requested separation
};

struct Violation {
    ViolationKind kind;
    int i = -1;  // offending feature indices, -1 when not applicable
    int j = -1;
    std::string message;
};

// Checks the structural invariants. min_separation = 0 skips the pairwise
// distance rule (stored instances carry no separation requirement of their own).
std::vector<Violation> validate(const Instance& inst, double min_separation = 0.0);

// Scales all widths by a common factor so they sum to the circumference.
// Throws std::invalid_argument when any width is zero or negative.
Instance normalize_widths(Instance inst);

// Deterministic synthetic instance generator. Positions are drawn according to
// the configured distribution, rejection-resampled until the minimum
// separation and distinct-radius rules hold; widths are drawn uniformly from
// [width_min, width_max] and normalized (or set uniform). Throws
// std::runtime_error when resampling exceeds its attempt budget.
Instance generate(const GeneratorConfig& cfg);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    ValidationError(std::string msg, std::vector<Violation> v)
        : std::runtime_error(std::move(msg)), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

// JSON form: {"id", "radius", "features": [{"theta", "r", "width", "text"}]},
// angles in radians, UTF-8, one instance per file.
std::string to_json_string(const Instance& inst);
Instance from_json_string(const std::string& text);
void write_json(const Instance& inst, const std::filesystem::path& path);
Instance read_json(const std::filesystem::path& path);

}  // namespace orbital
