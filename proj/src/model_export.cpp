#include "orbital/model_export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orbital {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string nm(const char* stem, int i) { return std::string(stem) + "_" + std::to_string(i); }
std::string nm(const char* stem, int i, int j) {
    return std::string(stem) + "_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string nm(const char* stem, int i, int j, int k) {
    return nm(stem, i, j) + "_" + std::to_string(k);
}

// Incremental builder so the two model families share the ordering scaffold.
struct Builder {
    ModelDocument doc;

    int add_var(std::string name, VarKind kind, double lo, double hi) {
        const int idx = static_cast<int>(doc.variables.size());
        doc.var_index.emplace(name, idx);
        doc.variables.push_back({std::move(name), kind, lo, hi});
        return idx;
    }
    int add_binary(std::string name) { return add_var(std::move(name), VarKind::Binary, 0.0, 1.0); }

    void lin(std::string name, std::vector<LinTerm> terms, Relation rel, double rhs) {
        doc.linear_constraints.push_back({std::move(name), std::move(terms), rel, rhs});
    }
    void quad(std::string name, std::vector<LinTerm> lt, std::vector<QuadTerm> qt, Relation rel,
              double rhs) {
        doc.quadratic_constraints.push_back({std::move(name), std::move(lt), std::move(qt), rel, rhs});
    }
    void nonlin(std::string name, NonlinKind kind, int out, int beta, double r, double theta) {
        doc.nonlinear_constraints.push_back({std::move(name), kind, out, beta, r, theta});
    }
};

void require_valid(const Instance& inst, const char* who) {
    if (auto violations = validate(inst); !violations.empty()) {
        std::string msg = std::string(who) + ": invalid instance: " + violations.front().message;
        throw ValidationError(std::move(msg), std::move(violations));
    }
}

// Order binaries, transitivity rows, port bounds/equalities. a_i_j exists for
// i < j only; the reverse relation is 1 - a_i_j.
void add_ordering(Builder& b, const Instance& inst) {
    const int n = inst.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_binary(nm("a", i, j));
    for (int i = 0; i < n; ++i) b.add_var(nm("beta", i), VarKind::Continuous, 0.0, kTau);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const std::vector<LinTerm> chain{{1.0, b.doc.var(nm("a", i, j))},
                                                 {1.0, b.doc.var(nm("a", j, k))},
                                                 {-1.0, b.doc.var(nm("a", i, k))}};
                b.lin(nm("trans_lo", i, j, k), chain, Relation::GreaterEq, 0.0);
                b.lin(nm("trans_hi", i, j, k), chain, Relation::LessEq, 1.0);
            }

    // beta_i = w_i/(2R) + sum_{j != i} [j before i] * w_j / R, rewritten over
    // the i<j variables only.
    for (int i = 0; i < n; ++i) {
        std::vector<LinTerm> terms{{1.0, b.doc.var(nm("beta", i))}};
        double rhs = inst.features[i].width / (2.0 * inst.radius);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double wj = inst.features[j].width / inst.radius;
            if (j < i) {
                terms.push_back({-wj, b.doc.var(nm("a", j, i))});
            } else {
                terms.push_back({wj, b.doc.var(nm("a", i, j))});
                rhs += wj;
            }
        }
        b.lin(nm("port", i), std::move(terms), Relation::Equal, rhs);
    }
}

}  // namespace

int ModelDocument::var(const std::string& name) const {
    const auto it = var_index.find(name);
    if (it == var_index.end()) throw std::out_of_range("unknown model variable: " + name);
    return it->second;
}

ModelDocument build_or_mip(const Instance& inst) {
    require_valid(inst, "build_or_mip");
    const int n = inst.n();
    Builder b;
    b.doc.family = "or-mip";
    b.doc.instance_id = inst.id;
    b.doc.n = n;
    b.doc.radius = inst.radius;
    b.doc.notes = {
        "order binary a_i_j = 1 when label i precedes label j, counter-clockwise from the anchor",
        "port rows place each port angle at its label-arc midpoint (arc length / radius)",
        "delta_i with wrap binaries b1_i/b2_i measures the shorter feature-to-port angular span",
        "c_i indicates beta_i > theta_i; d_i indicates the span runs the direct way (no wrap "
        "past the anchor)",
        "e1_i_j/e2_i_j compare the radially inner port against the outer feature angle and port; "
        "cross_* rows forbid the inner radial run from piercing the outer arc",
        "angle comparisons use big-M gates of 2*pi, widened to 4*pi where a lower bound must go "
        "slack",
        "objective counts arc length only; the radial leader parts are order-independent "
        "constants",
    };

    add_ordering(b, inst);
    for (int i = 0; i < n; ++i) b.add_var(nm("delta", i), VarKind::Continuous, 0.0, kTau);
    for (int i = 0; i < n; ++i) b.add_binary(nm("b1", i));
    for (int i = 0; i < n; ++i) b.add_binary(nm("b2", i));
    for (int i = 0; i < n; ++i) b.add_binary(nm("c", i));
    for (int i = 0; i < n; ++i) b.add_binary(nm("d", i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_binary(nm("e1", i, j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_binary(nm("e2", i, j));

    for (int i = 0; i < n; ++i) {
        const double theta = inst.features[i].position.theta;
        const int beta = b.doc.var(nm("beta", i));
        const int delta = b.doc.var(nm("delta", i));
        const int b1 = b.doc.var(nm("b1", i));
        const int b2 = b.doc.var(nm("b2", i));
        const int c = b.doc.var(nm("c", i));
        const int d = b.doc.var(nm("d", i));

        // -delta <= theta - beta + 2 pi (b1 - b2) <= delta
        b.lin(nm("arc_lo", i), {{-1.0, beta}, {kTau, b1}, {-kTau, b2}, {1.0, delta}},
              Relation::GreaterEq, -theta);
        b.lin(nm("arc_hi", i), {{-1.0, beta}, {kTau, b1}, {-kTau, b2}, {-1.0, delta}},
              Relation::LessEq, -theta);

        // c = [beta > theta]
        b.lin(nm("side_hi", i), {{1.0, beta}, {-kTau, c}}, Relation::LessEq, theta);
        b.lin(nm("side_lo", i), {{1.0, beta}, {-kTau, c}}, Relation::GreaterEq, theta - kTau);

        // d = [the c-signed span theta/beta difference is at most pi]
        b.lin(nm("wrap1", i), {{-1.0, beta}, {2.0 * kTau, c}, {kTau, d}}, Relation::GreaterEq,
              kPi - theta);
        b.lin(nm("wrap2", i), {{-1.0, beta}, {-kTau, c}, {kTau, d}}, Relation::LessEq,
              kPi + kTau - theta);
        b.lin(nm("wrap3", i), {{1.0, beta}, {-2.0 * kTau, c}, {kTau, d}}, Relation::GreaterEq,
              theta + kPi - 2.0 * kTau);
        b.lin(nm("wrap4", i), {{1.0, beta}, {kTau, c}, {kTau, d}}, Relation::LessEq,
              theta + kPi + 2.0 * kTau);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool i_inner = inst.features[i].position.r < inst.features[j].position.r;
            const int in = i_inner ? i : j;
            const int out = i_inner ? j : i;
            const double theta_out = inst.features[out].position.theta;
            const int beta_in = b.doc.var(nm("beta", in));
            const int beta_out = b.doc.var(nm("beta", out));
            const int e1 = b.doc.var(nm("e1", i, j));
            const int e2 = b.doc.var(nm("e2", i, j));
            const int c_out = b.doc.var(nm("c", out));
            const int d_out = b.doc.var(nm("d", out));

            // e1 = [beta_in > theta_out], e2 = [beta_in > beta_out]
            b.lin(nm("e1_hi", i, j), {{1.0, beta_in}, {-kTau, e1}}, Relation::LessEq, theta_out);
            b.lin(nm("e1_lo", i, j), {{1.0, beta_in}, {-kTau, e1}}, Relation::GreaterEq,
                  theta_out - kTau);
            b.lin(nm("e2_hi", i, j), {{1.0, beta_in}, {-1.0, beta_out}, {-kTau, e2}},
                  Relation::LessEq, 0.0);
            b.lin(nm("e2_lo", i, j), {{1.0, beta_in}, {-1.0, beta_out}, {-kTau, e2}},
                  Relation::GreaterEq, -kTau);

            // Case split on (c_out, d_out): the inner port must avoid the open
            // angular span of the outer arc.
            b.lin(nm("cross_a", i, j),
                  {{1.0, e1}, {-1.0, e2}, {1.0, c_out}, {1.0, d_out}}, Relation::LessEq, 2.0);
            b.lin(nm("cross_b", i, j),
                  {{1.0, e1}, {-1.0, e2}, {-2.0, c_out}, {2.0, d_out}}, Relation::GreaterEq, -1.0);
            b.lin(nm("cross_c", i, j),
                  {{1.0, e2}, {-1.0, e1}, {-1.0, c_out}, {1.0, d_out}}, Relation::LessEq, 1.0);
            b.lin(nm("cross_d", i, j),
                  {{1.0, e2}, {-1.0, e1}, {2.0, c_out}, {2.0, d_out}}, Relation::GreaterEq, 1.0);
        }
    }

    b.doc.minimize = true;
    for (int i = 0; i < n; ++i)
        b.doc.objective.push_back({inst.features[i].position.r, b.doc.var(nm("delta", i))});
    return std::move(b.doc);
}

ModelDocument build_sl_qip(const Instance& inst) {
    require_valid(inst, "build_sl_qip");
    const int n = inst.n();
    const double radius = inst.radius;
    const double big_m = 8.0 * radius * radius;  // bound on any orientation product
    Builder b;
    b.doc.family = "sl-qip";
    b.doc.instance_id = inst.id;
    b.doc.n = n;
    b.doc.radius = radius;
    b.doc.notes = {
        "order binary a_i_j = 1 when label i precedes label j, counter-clockwise from the anchor",
        "port rows place each port angle at its label-arc midpoint (arc length / radius)",
        "gamma_i is the straight leader length; len_* rows stay symbolic (sqrt, cos) and are "
        "marked nonlinear",
        "qx_i/qy_i are Cartesian port coordinates, linked by the symbolic portx_*/porty_* rows",
        "f1..f4 capture the four point-against-line orientation signs per leader pair (the rows "
        "against a moving endpoint are quadratic in port coordinates)",
        "g1/g2 are pairwise XORs of the orientation signs; nocross_* forbids both straddles at "
        "once",
        "orientation gates use big-M = 8*R^2",
    };

    add_ordering(b, inst);
    for (int i = 0; i < n; ++i) b.add_var(nm("gamma", i), VarKind::Continuous, 0.0, 2.0 * radius);
    for (int i = 0; i < n; ++i) {
        b.add_var(nm("qx", i), VarKind::Continuous, -radius, radius);
        b.add_var(nm("qy", i), VarKind::Continuous, -radius, radius);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const char* stem : {"f1", "f2", "f3", "f4", "g1", "g2"})
                b.add_binary(nm(stem, i, j));

    for (int i = 0; i < n; ++i) {
        const Feature& f = inst.features[i];
        b.nonlin(nm("len", i), NonlinKind::SlLeaderLength, b.doc.var(nm("gamma", i)),
                 b.doc.var(nm("beta", i)), f.position.r, f.position.theta);
        b.nonlin(nm("portx", i), NonlinKind::PortX, b.doc.var(nm("qx", i)),
                 b.doc.var(nm("beta", i)), 0.0, 0.0);
        b.nonlin(nm("porty", i), NonlinKind::PortY, b.doc.var(nm("qy", i)),
                 b.doc.var(nm("beta", i)), 0.0, 0.0);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Vec2 pi_ = to_cartesian(inst.features[i].position);
            const Vec2 pj = to_cartesian(inst.features[j].position);
            const int qxi = b.doc.var(nm("qx", i)), qyi = b.doc.var(nm("qy", i));
            const int qxj = b.doc.var(nm("qx", j)), qyj = b.doc.var(nm("qy", j));

            // orient(p_j, q_j, p_i): feature i against the other leader's line.
            {
                const double k = -pj.x * (pi_.y - pj.y) + pj.y * (pi_.x - pj.x);
                const std::vector<LinTerm> expr{{pi_.y - pj.y, qxj}, {pj.x - pi_.x, qyj}};
                auto with_gate = [&](double gate) {
                    auto t = expr;
                    t.push_back({gate, b.doc.var(nm("f1", i, j))});
                    return t;
                };
                b.lin(nm("f1_lo", i, j), with_gate(big_m), Relation::GreaterEq, -k);
                b.lin(nm("f1_hi", i, j), with_gate(big_m), Relation::LessEq, big_m - k);
            }
            // orient(p_j, q_j, q_i): port i against the other leader's line.
            {
                const std::vector<LinTerm> lt{
                    {-pj.y, qxj}, {pj.x, qyj}, {pj.y, qxi}, {-pj.x, qyi}};
                const std::vector<QuadTerm> qt{{1.0, qxj, qyi}, {-1.0, qyj, qxi}};
                auto with_gate = [&]() {
                    auto t = lt;
                    t.push_back({big_m, b.doc.var(nm("f2", i, j))});
                    return t;
                };
                b.quad(nm("f2_lo", i, j), with_gate(), qt, Relation::GreaterEq, 0.0);
                b.quad(nm("f2_hi", i, j), with_gate(), qt, Relation::LessEq, big_m);
            }
            // orient(p_i, q_i, p_j): feature j against this leader's line.
            {
                const double k = -pi_.x * (pj.y - pi_.y) + pi_.y * (pj.x - pi_.x);
                const std::vector<LinTerm> expr{{pj.y - pi_.y, qxi}, {pi_.x - pj.x, qyi}};
                auto with_gate = [&](double gate) {
                    auto t = expr;
                    t.push_back({gate, b.doc.var(nm("f3", i, j))});
                    return t;
                };
                b.lin(nm("f3_lo", i, j), with_gate(big_m), Relation::GreaterEq, -k);
                b.lin(nm("f3_hi", i, j), with_gate(big_m), Relation::LessEq, big_m - k);
            }
            // orient(p_i, q_i, q_j): port j against this leader's line.
            {
                const std::vector<LinTerm> lt{
                    {-pi_.y, qxi}, {pi_.x, qyi}, {pi_.y, qxj}, {-pi_.x, qyj}};
                const std::vector<QuadTerm> qt{{1.0, qxi, qyj}, {-1.0, qyi, qxj}};
                auto with_gate = [&]() {
                    auto t = lt;
                    t.push_back({big_m, b.doc.var(nm("f4", i, j))});
                    return t;
                };
                b.quad(nm("f4_lo", i, j), with_gate(), qt, Relation::GreaterEq, 0.0);
                b.quad(nm("f4_hi", i, j), with_gate(), qt, Relation::LessEq, big_m);
            }

            for (const auto& [g, fa, fb] :
                 {std::tuple{"g1", "f1", "f2"}, std::tuple{"g2", "f3", "f4"}}) {
                const int gv = b.doc.var(nm(g, i, j));
                const int fav = b.doc.var(nm(fa, i, j));
                const int fbv = b.doc.var(nm(fb, i, j));
                b.lin(nm((std::string(g) + "_sum").c_str(), i, j),
                      {{1.0, gv}, {-1.0, fav}, {-1.0, fbv}}, Relation::LessEq, 0.0);
                b.lin(nm((std::string(g) + "_diff_a").c_str(), i, j),
                      {{1.0, gv}, {-1.0, fav}, {1.0, fbv}}, Relation::GreaterEq, 0.0);
                b.lin(nm((std::string(g) + "_diff_b").c_str(), i, j),
                      {{1.0, gv}, {1.0, fav}, {-1.0, fbv}}, Relation::GreaterEq, 0.0);
                b.lin(nm((std::string(g) + "_cap").c_str(), i, j),
                      {{1.0, gv}, {1.0, fav}, {1.0, fbv}}, Relation::LessEq, 2.0);
            }
            b.lin(nm("nocross", i, j),
                  {{1.0, b.doc.var(nm("g1", i, j))}, {1.0, b.doc.var(nm("g2", i, j))}},
                  Relation::LessEq, 1.0);
        }
    }

    b.doc.minimize = true;
    for (int i = 0; i < n; ++i) b.doc.objective.push_back({1.0, b.doc.var(nm("gamma", i))});
    return std::move(b.doc);
}

namespace {

const char* rel_text(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::GreaterEq: return ">=";
        case Relation::Equal: return "=";
    }
    return "?";
}

void append_terms(std::string& out, const ModelDocument& doc, const std::vector<LinTerm>& terms,
                  const std::vector<QuadTerm>* quad = nullptr) {
    bool first = true;
    for (const LinTerm& t : terms) {
        if (!first) out += ' ';
        first = false;
        out += t.coef < 0.0 ? '-' : '+';
        out += g17(std::abs(t.coef));
        out += '*';
        out += doc.variables[t.var].name;
    }
    if (quad) {
        for (const QuadTerm& t : *quad) {
            if (!first) out += ' ';
            first = false;
            out += t.coef < 0.0 ? '-' : '+';
            out += g17(std::abs(t.coef));
            out += '*';
            out += doc.variables[t.a].name;
            out += '*';
            out += doc.variables[t.b].name;
        }
    }
}

}  // namespace

std::string model_to_text(const ModelDocument& doc) {
    std::string out;
    out += "family: " + doc.family + "\n";
    out += "instance: " + doc.instance_id + "\n";
    out += "features: " + std::to_string(doc.n) + "\n";
    out += "radius: " + g17(doc.radius) + "\n";
    for (const std::string& note : doc.notes) out += "note: " + note + "\n";

    for (const Variable& v : doc.variables) {
        out += "var " + v.name;
        if (v.kind == VarKind::Binary) {
            out += " binary";
        } else {
            out += " continuous in [" + g17(v.lower) + ", " + g17(v.upper) + "]";
        }
        out += '\n';
    }

    out += doc.minimize ? "minimize: " : "maximize: ";
    append_terms(out, doc, doc.objective);
    out += '\n';

    for (const LinearConstraint& c : doc.linear_constraints) {
        out += "lin " + c.name + ": ";
        append_terms(out, doc, c.terms);
        out += std::string(" ") + rel_text(c.rel) + " " + g17(c.rhs) + "\n";
    }
    for (const QuadraticConstraint& c : doc.quadratic_constraints) {
        out += "quad " + c.name + ": ";
        append_terms(out, doc, c.lin, &c.quad);
        out += std::string(" ") + rel_text(c.rel) + " " + g17(c.rhs) + "\n";
    }
    for (const NonlinearConstraint& c : doc.nonlinear_constraints) {
        const std::string& outv = doc.variables[c.output_var].name;
        const std::string& betav = doc.variables[c.beta_var].name;
        out += "nonlin " + c.name + ": ";
        switch (c.kind) {
            case NonlinKind::SlLeaderLength:
                out += outv + " >= sqrt(r^2 + R^2 - 2*r*R*cos(theta - " + betav +
                       ")) with r=" + g17(c.r) + ", theta=" + g17(c.theta) +
                       ", R=" + g17(doc.radius);
                break;
            case NonlinKind::PortX:
                out += outv + " = R*cos(" + betav + ") with R=" + g17(doc.radius);
                break;
            case NonlinKind::PortY:
                out += outv + " = R*sin(" + betav + ") with R=" + g17(doc.radius);
                break;
        }
        out += '\n';
    }
    return out;
}

void write_model(const ModelDocument& doc, const std::filesystem::path& path) {
    if (path.empty()) throw std::invalid_argument("write_model: empty path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << model_to_text(doc);
    if (!out) throw std::runtime_error("write failure: " + path.string());
}

std::vector<double> substitute_labeling(const ModelDocument& doc, const Instance& inst,
                                        const Labeling& lab) {
    if (auto why = check_labeling(inst, lab); !why.empty())
        throw std::invalid_argument("substitute_labeling: inconsistent labeling: " + why);
    const int n = inst.n();
    if (n != doc.n) throw std::invalid_argument("substitute_labeling: instance size mismatch");

    std::vector<double> values(doc.variables.size(), 0.0);
    const auto set = [&](const std::string& name, double v) { values[doc.var(name)] = v; };

    std::vector<int> pos(n, 0);
    for (int slot = 0; slot < n; ++slot) pos[lab.order[slot]] = slot;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) set(nm("a", i, j), pos[i] < pos[j] ? 1.0 : 0.0);
    for (int i = 0; i < n; ++i) set(nm("beta", i), lab.ports[i].beta);

    if (doc.family == "or-mip") {
        for (int i = 0; i < n; ++i) {
            const double theta = inst.features[i].position.theta;
            const double beta = lab.ports[i].beta;
            const double diff = theta - beta;
            const int wrap = diff > kPi ? -1 : (diff < -kPi ? 1 : 0);
            set(nm("b1", i), wrap == 1 ? 1.0 : 0.0);
            set(nm("b2", i), wrap == -1 ? 1.0 : 0.0);
            set(nm("delta", i), std::abs(diff + wrap * kTau));
            set(nm("c", i), beta > theta ? 1.0 : 0.0);
            set(nm("d", i), std::abs(diff) <= kPi ? 1.0 : 0.0);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const bool i_inner = inst.features[i].position.r < inst.features[j].position.r;
                const int in = i_inner ? i : j;
                const int out = i_inner ? j : i;
                const double beta_in = lab.ports[in].beta;
                set(nm("e1", i, j), beta_in > inst.features[out].position.theta ? 1.0 : 0.0);
                set(nm("e2", i, j), beta_in > lab.ports[out].beta ? 1.0 : 0.0);
            }
        }
    } else if (doc.family == "sl-qip") {
        for (int i = 0; i < n; ++i) {
            set(nm("gamma", i),
                sl_length(inst.features[i].position, lab.ports[i], inst.radius));
            const Vec2 q = port_point(lab.ports[i], inst.radius);
            set(nm("qx", i), q.x);
            set(nm("qy", i), q.y);
        }
        const auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
            return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        };
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Vec2 pi_ = to_cartesian(inst.features[i].position);
                const Vec2 pj = to_cartesian(inst.features[j].position);
                const Vec2 qi = port_point(lab.ports[i], inst.radius);
                const Vec2 qj = port_point(lab.ports[j], inst.radius);
                const double o_f1 = orient(pj, qj, pi_);
                const double o_f2 = orient(pj, qj, qi);
                const double o_f3 = orient(pi_, qi, pj);
                const double o_f4 = orient(pi_, qi, qj);
                // A zero orientation means a boundary contact; pick the free
                // binary to match its partner so the XOR stays 0.
                double f1 = o_f1 < 0.0 ? 1.0 : 0.0, f2 = o_f2 < 0.0 ? 1.0 : 0.0;
                if (o_f1 == 0.0) f1 = f2;
                if (o_f2 == 0.0) f2 = f1;
                double f3 = o_f3 < 0.0 ? 1.0 : 0.0, f4 = o_f4 < 0.0 ? 1.0 : 0.0;
                if (o_f3 == 0.0) f3 = f4;
                if (o_f4 == 0.0) f4 = f3;
                set(nm("f1", i, j), f1);
                set(nm("f2", i, j), f2);
                set(nm("f3", i, j), f3);
                set(nm("f4", i, j), f4);
                set(nm("g1", i, j), f1 != f2 ? 1.0 : 0.0);
                set(nm("g2", i, j), f3 != f4 ? 1.0 : 0.0);
            }
        }
    } else {
        throw std::invalid_argument("substitute_labeling: unknown model family " + doc.family);
    }
    return values;
}

std::vector<ConstraintViolation> check_assignment(const ModelDocument& doc,
                                                  const std::vector<double>& values,
                                                  double lin_tol, double nonlin_tol) {
    if (values.size() != doc.variables.size())
        throw std::invalid_argument("check_assignment: value vector size mismatch");

    std::vector<ConstraintViolation> out;
    const auto residual_of = [](double lhs, Relation rel, double rhs) {
        switch (rel) {
            case Relation::LessEq: return std::max(0.0, lhs - rhs);
            case Relation::GreaterEq: return std::max(0.0, rhs - lhs);
            case Relation::Equal: return std::abs(lhs - rhs);
        }
        return 0.0;
    };

    for (std::size_t i = 0; i < doc.variables.size(); ++i) {
        const Variable& v = doc.variables[i];
        const double x = values[i];
        if (x < v.lower - lin_tol || x > v.upper + lin_tol)
            out.push_back({"bound:" + v.name, std::max(v.lower - x, x - v.upper)});
        if (v.kind == VarKind::Binary && std::abs(x - std::round(x)) > lin_tol)
            out.push_back({"integrality:" + v.name, std::abs(x - std::round(x))});
    }

    for (const LinearConstraint& c : doc.linear_constraints) {
        double lhs = 0.0;
        for (const LinTerm& t : c.terms) lhs += t.coef * values[t.var];
        const double res = residual_of(lhs, c.rel, c.rhs);
        if (res > lin_tol * (1.0 + std::abs(c.rhs))) out.push_back({c.name, res});
    }
    for (const QuadraticConstraint& c : doc.quadratic_constraints) {
        double lhs = 0.0;
        for (const LinTerm& t : c.lin) lhs += t.coef * values[t.var];
        for (const QuadTerm& t : c.quad) lhs += t.coef * values[t.a] * values[t.b];
        const double res = residual_of(lhs, c.rel, c.rhs);
        if (res > nonlin_tol * (1.0 + std::abs(c.rhs))) out.push_back({c.name, res});
    }
    for (const NonlinearConstraint& c : doc.nonlinear_constraints) {
        const double beta = values[c.beta_var];
        const double outv = values[c.output_var];
        double res = 0.0;
        switch (c.kind) {
            case NonlinKind::SlLeaderLength: {
                const double sq = c.r * c.r + doc.radius * doc.radius -
                                  2.0 * c.r * doc.radius * std::cos(c.theta - beta);
                res = std::max(0.0, std::sqrt(std::max(sq, 0.0)) - outv);
                break;
            }
            case NonlinKind::PortX:
                res = std::abs(outv - doc.radius * std::cos(beta));
                break;
            case NonlinKind::PortY:
                res = std::abs(outv - doc.radius * std::sin(beta));
                break;
        }
        if (res > nonlin_tol) out.push_back({c.name, res});
    }
    return out;
}

}  // namespace orbital
