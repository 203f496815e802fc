#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "orbital/geometry.hpp"
#include "orbital/instance.hpp"

namespace orbital {

enum class SolverKind { UniformExact, Heuristic, ExactBB };

std::string to_string(SolverKind s);
SolverKind solver_from_string(const std::string& s);

enum class RunStatus { Ok, Infeasible, Timeout, Failure };

std::string to_string(RunStatus s);
RunStatus status_from_string(const std::string& s);

// One benchmark measurement: a single solver applied to a single instance in a
// single leader style. tll_ratio compares against the exact run on the same
// instance and style and is absent when no successful exact reference exists.
struct BenchRecord {
    std::string instance_id;
    int n = 0;
    std::string distribution;
    LeaderStyle style = LeaderStyle::SL;
    SolverKind solver = SolverKind::Heuristic;
    double tll = 0.0;
    std::optional<double> tll_ratio;
    double wall_time_ms = 0.0;
    int crossings = 0;
    RunStatus status = RunStatus::Ok;

    bool operator==(const BenchRecord&) const = default;
};

// Generate a grid corpus into dir: for every n and every distribution,
// per_cell instances with consecutive seeds starting at base_seed. Returns the
// number of files written. Existing files with the same names are overwritten.
int make_corpus(const std::filesystem::path& dir, const std::vector<int>& ns,
                const std::vector<Distribution>& distributions, int per_cell,
                std::uint64_t base_seed, bool uniform_widths = false);

// Run every requested solver on every instance JSON found in corpus_dir, in
// both requested styles. Wall time is the median over `repeats` calls and
// covers only the solve call. Solver errors become status entries; the run
// itself only fails if the corpus directory cannot be read. Output is ordered
// by instance id, then by the given style and solver order.
std::vector<BenchRecord> run_corpus(const std::filesystem::path& corpus_dir,
                                    const std::vector<LeaderStyle>& styles,
                                    const std::vector<SolverKind>& solvers, int repeats);

// CSV round-trip with a fixed header, one row per record, RFC-4180 quoting.
void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path);
std::vector<BenchRecord> read_csv(const std::filesystem::path& path);
std::string records_to_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> records_from_csv(const std::string& text);

// Aggregates per (style, solver) group, in first-appearance order.
struct SummaryRow {
    LeaderStyle style = LeaderStyle::SL;
    SolverKind solver = SolverKind::Heuristic;
    int records = 0;
    int ok = 0;
    double success_rate = 0.0;              // ok / records
    std::optional<double> mean_ratio;       // over records carrying a ratio
    std::optional<double> max_ratio;
    double mean_wall_ms = 0.0;
};

// Throws std::invalid_argument on an empty record list.
std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

std::string summary_to_text(const std::vector<SummaryRow>& rows);

}  // namespace orbital
