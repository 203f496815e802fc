#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "orbital/labeling.hpp"

namespace orbital {

enum class VarKind { Binary, Continuous };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lower = 0.0;
    double upper = 1.0;
};

enum class Relation { LessEq, GreaterEq, Equal };

struct LinTerm {
    double coef = 0.0;
    int var = -1;  // index into ModelDocument::variables
};

struct QuadTerm {
    double coef = 0.0;
    int a = -1;
    int b = -1;
};

// All variable terms on the left-hand side, constant on the right.
struct LinearConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

struct QuadraticConstraint {
    std::string name;
    std::vector<LinTerm> lin;
    std::vector<QuadTerm> quad;
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

// Rows that are neither linear nor quadratic are kept symbolic and annotated;
// a consuming solver is expected to approximate sqrt/cos itself.
enum class NonlinKind {
    SlLeaderLength,  // out >= sqrt(r^2 + R^2 - 2 r R cos(theta - beta))
    PortX,           // out  = R cos(beta)
    PortY,           // out  = R sin(beta)
};

struct NonlinearConstraint {
    std::string name;
    NonlinKind kind = NonlinKind::SlLeaderLength;
    int output_var = -1;
    int beta_var = -1;
    double r = 0.0;      // feature radius (unused for PortX/PortY)
    double theta = 0.0;  // feature angle (unused for PortX/PortY)
};

struct ModelDocument {
    std::string family;  // "or-mip" or "sl-qip"
    std::string instance_id;
    int n = 0;
    double radius = 0.0;
    std::vector<std::string> notes;
    std::vector<Variable> variables;
    std::vector<LinearConstraint> linear_constraints;
    std::vector<QuadraticConstraint> quadratic_constraints;
    std::vector<NonlinearConstraint> nonlinear_constraints;
    bool minimize = true;
    std::vector<LinTerm> objective;

    std::map<std::string, int> var_index;  // name -> index in variables

    int var(const std::string& name) const;  // throws std::out_of_range when absent
};

// Mixed-integer model for OR leaders: order binaries with transitivity, port
// equalities, arc-angle variables with wraparound binaries, and combinatorial
// non-crossing constraints; objective minimizes the total arc length.
ModelDocument build_or_mip(const Instance& inst);

// Quadratic model for SL leaders: the same ordering and port structure, plus
// leader-length and port-coordinate rows kept symbolic, and orientation-based
// non-crossing constraints (two of the four orientation rows per pair are
// quadratic in the port coordinates).
ModelDocument build_sl_qip(const Instance& inst);

// Deterministic human-readable text form; identical documents give identical
// bytes.
std::string model_to_text(const ModelDocument& doc);
void write_model(const ModelDocument& doc, const std::filesystem::path& path);

// Values for every model variable implied by a concrete labeling of the
// instance: order binaries from the label sequence, ports from the placement,
// and indicator binaries chosen exactly as the geometric predicates decide.
std::vector<double> substitute_labeling(const ModelDocument& doc, const Instance& inst,
                                        const Labeling& lab);

struct ConstraintViolation {
    std::string constraint;
    double residual = 0.0;
};

// Checks an assignment against every constraint. Linear rows must hold to
// lin_tol, quadratic and symbolic rows (evaluated with true sqrt/cos) to
// nonlin_tol; both tolerances scale mildly with the right-hand side.
std::vector<ConstraintViolation> check_assignment(const ModelDocument& doc,
                                                  const std::vector<double>& values,
                                                  double lin_tol = 1e-9,
                                                  double nonlin_tol = 1e-6);

}  // namespace orbital
