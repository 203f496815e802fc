#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "orbital/instance.hpp"
#include "orbital/labeling.hpp"

namespace orbital {

// Fixed-size square canvas with the disk centred on it. World coordinates use
// y-up; the writer flips to screen y-down. All emitted coordinates are
// formatted with three decimals so output is byte-stable across runs.
struct RenderOptions {
    int canvas_px = 480;
    double boundary_radius_px = 220.0;  // disk boundary, in screen pixels
    double band_outer_px = 240.0;       // outer edge of the label band
    double text_radius_px = 227.0;      // baseline radius for curved label text
    double font_size = 10.0;
    double feature_radius_px = 2.5;  // dots are drawn 5 px across
    double gap_degrees = 1.0;  // visual shrink per label side, capped at a quarter span
    std::vector<int> highlight;  // feature indices drawn in red
};

// Produce a complete standalone SVG document for a solved instance.
std::string render_svg(const Instance& inst, const Labeling& lab,
                       const RenderOptions& opts = {});

void write_svg(const Instance& inst, const Labeling& lab, const std::filesystem::path& path,
               const RenderOptions& opts = {});

}  // namespace orbital
