#include "orbital/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "orbital/geometry.hpp"

namespace orbital {

namespace {

std::string f3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    // Avoid the distinct "-0.000" spelling so equal coordinates render equally.
    if (std::string s(buf); s == "-0.000") return "0.000";
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Mapper {
    double cx, cy, scale;
    // World angle phi at world radius r (in instance units) to screen point.
    std::string pt(double r, double phi) const {
        const double x = cx + scale * r * std::cos(phi);
        const double y = cy - scale * r * std::sin(phi);
        return f3(x) + " " + f3(y);
    }
    std::string px_pt(double r_px, double phi) const {
        const double x = cx + r_px * std::cos(phi);
        const double y = cy - r_px * std::sin(phi);
        return f3(x) + " " + f3(y);
    }
};

// Arc along increasing world angle appears counter-clockwise after the y flip,
// which is SVG sweep flag 0; decreasing world angle is sweep flag 1.
std::string arc_to(double r_px, double phi_end, bool large, bool world_ccw, const Mapper& m) {
    return "A " + f3(r_px) + " " + f3(r_px) + " 0 " + (large ? "1" : "0") + " " +
           (world_ccw ? "0" : "1") + " " + m.px_pt(r_px, phi_end);
}

}  // namespace

std::string render_svg(const Instance& inst, const Labeling& lab, const RenderOptions& opts) {
    if (auto why = check_labeling(inst, lab); !why.empty())
        throw std::invalid_argument("render_svg: inconsistent labeling: " + why);
    if (opts.boundary_radius_px <= 0.0 || opts.band_outer_px <= opts.boundary_radius_px)
        throw std::invalid_argument("render_svg: label band radii out of order");

    const int n = inst.n();
    const Mapper m{opts.canvas_px / 2.0, opts.canvas_px / 2.0,
                   opts.boundary_radius_px / inst.radius};
    const auto is_highlit = [&](int i) {
        return std::find(opts.highlight.begin(), opts.highlight.end(), i) !=
               opts.highlight.end();
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" "
           "xmlns:xlink=\"http://www.w3.org/1999/xlink\" width=\"" +
           std::to_string(opts.canvas_px) + "\" height=\"" + std::to_string(opts.canvas_px) +
           "\" viewBox=\"0 0 " + std::to_string(opts.canvas_px) + " " +
           std::to_string(opts.canvas_px) + "\">\n";
    svg += "<rect width=\"" + std::to_string(opts.canvas_px) + "\" height=\"" +
           std::to_string(opts.canvas_px) + "\" fill=\"#ffffff\"/>\n";

    // Label band: one annulus wedge per label, slightly shrunk at both ends so
    // neighbouring labels read as separate.
    const double gap_rad = opts.gap_degrees * kPi / 180.0;
    for (int slot = 0; slot < n; ++slot) {
        const int f = lab.order[slot];
        const ArcInterval& arc = lab.label_arcs[f];
        const double a0 = arc.start / inst.radius;
        const double a1 = arc.end / inst.radius;
        const double span = a1 - a0;
        const double shrink = std::min(gap_rad, span / 4.0);
        const double b0 = a0 + shrink;
        const double b1 = a1 - shrink;
        const bool large = (b1 - b0) > kPi;
        const double r_in = opts.boundary_radius_px;
        const double r_out = opts.band_outer_px;
        std::string d = "M " + m.px_pt(r_out, b0) + " " + arc_to(r_out, b1, large, true, m) +
                        " L " + m.px_pt(r_in, b1) + " " + arc_to(r_in, b0, large, false, m) +
                        " Z";
        svg += "<path d=\"" + d + "\" fill=\"" + (is_highlit(f) ? "#f4cccc" : "#cfe2f3") +
               "\" stroke=\"#6fa8dc\" stroke-width=\"1\"/>\n";
    }

    // Disk boundary.
    svg += "<circle cx=\"" + f3(m.cx) + "\" cy=\"" + f3(m.cy) + "\" r=\"" +
           f3(opts.boundary_radius_px) + "\" fill=\"none\" stroke=\"#333333\" "
           "stroke-width=\"1\"/>\n";

    // Leaders.
    for (int i = 0; i < n; ++i) {
        const Feature& feat = inst.features[i];
        const double beta = lab.ports[i].beta;
        const std::string stroke = is_highlit(i) ? "#cc0000" : "#555555";
        const std::string width = is_highlit(i) ? "1.5" : "1";
        if (lab.style == LeaderStyle::SL) {
            svg += "<path d=\"M " + m.pt(feat.position.r, feat.position.theta) + " L " +
                   m.pt(inst.radius, beta) + "\" fill=\"none\" stroke=\"" + stroke +
                   "\" stroke-width=\"" + width + "\"/>\n";
        } else {
            const AngularDistance turn = angular_distance(feat.position.theta, beta);
            std::string d = "M " + m.pt(feat.position.r, feat.position.theta);
            if (turn.delta > 0.0 && feat.position.r > 0.0) {
                d += " " + arc_to(m.scale * feat.position.r, beta, false,
                                  turn.dir == RotationDir::CCW, m);
            }
            d += " L " + m.pt(inst.radius, beta);
            svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
                   "\" stroke-width=\"" + width + "\"/>\n";
        }
    }

    // Feature dots on top of their leaders.
    for (int i = 0; i < n; ++i) {
        const Vec2 p = to_cartesian(inst.features[i].position);
        svg += "<circle cx=\"" + f3(m.cx + m.scale * p.x) + "\" cy=\"" +
               f3(m.cy - m.scale * p.y) + "\" r=\"" + f3(opts.feature_radius_px) +
               "\" fill=\"" + (is_highlit(i) ? "#cc0000" : "#444444") + "\"/>\n";
    }

    // Curved label text. The guide path runs along decreasing world angle so
    // the glyphs read left-to-right when the label sits at the top of the disk.
    for (int slot = 0; slot < n; ++slot) {
        const int f = lab.order[slot];
        const ArcInterval& arc = lab.label_arcs[f];
        const double a0 = arc.start / inst.radius;
        const double a1 = arc.end / inst.radius;
        const bool large = (a1 - a0) > kPi;
        const std::string id = "labelpath" + std::to_string(slot);
        svg += "<path id=\"" + id + "\" d=\"M " + m.px_pt(opts.text_radius_px, a1) + " " +
               arc_to(opts.text_radius_px, a0, large, false, m) + "\" fill=\"none\"/>\n";
        svg += "<text font-family=\"Helvetica, Arial, sans-serif\" font-size=\"" +
               f3(opts.font_size) + "\" fill=\"#222222\" text-anchor=\"middle\">"
               "<textPath href=\"#" + id + "\" xlink:href=\"#" + id +
               "\" startOffset=\"50%\">" + xml_escape(inst.features[f].label_text) +
               "</textPath></text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

void write_svg(const Instance& inst, const Labeling& lab, const std::filesystem::path& path,
               const RenderOptions& opts) {
    if (path.empty()) throw std::invalid_argument("write_svg: empty path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << render_svg(inst, lab, opts);
    if (!out) throw std::runtime_error("write failure: " + path.string());
}

}  // namespace orbital
