#include "orbital/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "orbital/labeling.hpp"
#include "orbital/solver_nonuniform.hpp"
#include "orbital/solver_uniform.hpp"

namespace orbital {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size();
    if (k == 0) return 0.0;
    return k % 2 == 1 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

// Instance ids follow "<distribution>_<n>_<seed>"; recover the distribution
// tag by dropping the two trailing underscore groups.
std::string distribution_of_id(const std::string& id) {
    const auto last = id.rfind('_');
    if (last == std::string::npos) return "unknown";
    const auto prev = id.rfind('_', last - 1);
    if (prev == std::string::npos || prev == 0) return "unknown";
    return id.substr(0, prev);
}

struct RunOutcome {
    RunStatus status = RunStatus::Failure;
    double tll = 0.0;
    int crossings = 0;
};

RunOutcome run_one(const Instance& inst, LeaderStyle style, SolverKind solver) {
    RunOutcome out;
    try {
        switch (solver) {
            case SolverKind::UniformExact: {
                const auto [lab, report] = solve_uniform(inst, style);
                out = {RunStatus::Ok, report.tll, report.crossings};
                break;
            }
            case SolverKind::Heuristic: {
                const HeuristicResult res = solve_heuristic(inst, {style, 0});
                out = {res.success ? RunStatus::Ok : RunStatus::Failure, res.report.tll,
                       res.report.crossings};
                break;
            }
            case SolverKind::ExactBB: {
                const ExactResult res = solve_exact(inst, style);
                switch (res.status) {
                    case ExactStatus::Optimal:
                        out = {RunStatus::Ok, res.report.tll, res.report.crossings};
                        break;
                    case ExactStatus::Infeasible: out = {RunStatus::Infeasible, 0.0, 0}; break;
                    case ExactStatus::TimedOut:
                        out = {RunStatus::Timeout, res.labeling ? res.report.tll : 0.0,
                               res.labeling ? res.report.crossings : 0};
                        break;
                }
                break;
            }
        }
    } catch (const std::exception&) {
        out = {RunStatus::Failure, 0.0, 0};
    }
    return out;
}

const char* kCsvHeader =
    "instance_id,n,distribution,style,solver,tll,tll_ratio,wall_time_ms,crossings,status";

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

// Splits RFC-4180 text into rows of fields, honouring quoted fields with
// doubled-quote escapes and accepting both LF and CRLF row breaks.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    const auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    const auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"' && !field_started) {
            quoted = true;
            field_started = true;
        } else if (ch == ',') {
            end_field();
        } else if (ch == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field += ch;
            field_started = true;
        }
    }
    if (quoted) throw std::runtime_error("csv: unterminated quoted field");
    if (field_started || !row.empty()) end_row();
    return rows;
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("csv: bad ") + what + " value: " + s);
    }
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("csv: bad ") + what + " value: " + s);
    }
}

}  // namespace

std::string to_string(SolverKind s) {
    switch (s) {
        case SolverKind::UniformExact: return "uniform_exact";
        case SolverKind::Heuristic: return "heuristic";
        case SolverKind::ExactBB: return "exact_bb";
    }
    throw std::logic_error("unknown solver kind");
}

SolverKind solver_from_string(const std::string& s) {
    if (s == "uniform_exact") return SolverKind::UniformExact;
    if (s == "heuristic") return SolverKind::Heuristic;
    if (s == "exact_bb") return SolverKind::ExactBB;
    throw std::invalid_argument("unknown solver name: " + s);
}

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::Infeasible: return "infeasible";
        case RunStatus::Timeout: return "timeout";
        case RunStatus::Failure: return "failure";
    }
    throw std::logic_error("unknown run status");
}

RunStatus status_from_string(const std::string& s) {
    if (s == "ok") return RunStatus::Ok;
    if (s == "infeasible") return RunStatus::Infeasible;
    if (s == "timeout") return RunStatus::Timeout;
    if (s == "failure") return RunStatus::Failure;
    throw std::invalid_argument("unknown status name: " + s);
}

int make_corpus(const std::filesystem::path& dir, const std::vector<int>& ns,
                const std::vector<Distribution>& distributions, int per_cell,
                std::uint64_t base_seed, bool uniform_widths) {
    if (per_cell < 1) throw std::invalid_argument("make_corpus: per_cell must be positive");
    std::filesystem::create_directories(dir);
    int written = 0;
    std::uint64_t seed = base_seed;
    for (int n : ns) {
        for (Distribution dist : distributions) {
            for (int k = 0; k < per_cell; ++k, ++seed) {
                GeneratorConfig cfg;
                cfg.n = n;
                cfg.distribution = dist;
                cfg.seed = seed;
                cfg.uniform_widths = uniform_widths;
                const Instance inst = generate(cfg);
                write_json(inst, dir / (inst.id + ".json"));
                ++written;
            }
        }
    }
    return written;
}

std::vector<BenchRecord> run_corpus(const std::filesystem::path& corpus_dir,
                                    const std::vector<LeaderStyle>& styles,
                                    const std::vector<SolverKind>& solvers, int repeats) {
    if (repeats < 1) throw std::invalid_argument("run_corpus: repeats must be positive");
    if (!std::filesystem::is_directory(corpus_dir))
        throw std::runtime_error("run_corpus: not a readable directory: " + corpus_dir.string());

    std::vector<Instance> corpus;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        corpus.push_back(read_json(entry.path()));
    }
    std::sort(corpus.begin(), corpus.end(),
              [](const Instance& a, const Instance& b) { return a.id < b.id; });

    std::vector<BenchRecord> records;
    for (const Instance& inst : corpus) {
        for (LeaderStyle style : styles) {
            const std::size_t group_begin = records.size();
            for (SolverKind solver : solvers) {
                RunOutcome outcome;
                std::vector<double> times_ms;
                times_ms.reserve(static_cast<std::size_t>(repeats));
                for (int rep = 0; rep < repeats; ++rep) {
                    const auto t0 = std::chrono::steady_clock::now();
                    outcome = run_one(inst, style, solver);
                    const auto t1 = std::chrono::steady_clock::now();
                    times_ms.push_back(
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
                }
                BenchRecord rec;
                rec.instance_id = inst.id;
                rec.n = inst.n();
                rec.distribution = distribution_of_id(inst.id);
                rec.style = style;
                rec.solver = solver;
                rec.tll = outcome.tll;
                rec.wall_time_ms = median_of(std::move(times_ms));
                rec.crossings = outcome.crossings;
                rec.status = outcome.status;
                records.push_back(std::move(rec));
            }
            // Attach ratios once the whole (instance, style) group is known.
            const BenchRecord* reference = nullptr;
            for (std::size_t i = group_begin; i < records.size(); ++i) {
                const BenchRecord& r = records[i];
                if (r.status != RunStatus::Ok) continue;
                if (r.solver == SolverKind::ExactBB) reference = &r;
                if (r.solver == SolverKind::UniformExact && reference == nullptr)
                    reference = &r;
            }
            if (reference != nullptr && reference->tll > 0.0) {
                const double ref_tll = reference->tll;
                for (std::size_t i = group_begin; i < records.size(); ++i) {
                    if (records[i].status == RunStatus::Ok)
                        records[i].tll_ratio = records[i].tll / ref_tll;
                }
            }
        }
    }
    return records;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const BenchRecord& r : records) {
        out += csv_quote(r.instance_id);
        out += ',' + std::to_string(r.n);
        out += ',' + csv_quote(r.distribution);
        out += ',' + to_string(r.style);
        out += ',' + to_string(r.solver);
        out += ',' + g17(r.tll);
        out += ',';
        if (r.tll_ratio) out += g17(*r.tll_ratio);
        out += ',' + g17(r.wall_time_ms);
        out += ',' + std::to_string(r.crossings);
        out += ',' + to_string(r.status);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path) {
    if (path.empty()) throw std::invalid_argument("write_csv: empty path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << records_to_csv(records);
    if (!out) throw std::runtime_error("write failure: " + path.string());
}

std::vector<BenchRecord> records_from_csv(const std::string& text) {
    const auto rows = csv_rows(text);
    if (rows.empty()) throw std::runtime_error("csv: missing header row");
    {
        std::string joined;
        for (std::size_t i = 0; i < rows[0].size(); ++i) {
            if (i) joined += ',';
            joined += rows[0][i];
        }
        if (joined != kCsvHeader) throw std::runtime_error("csv: unexpected header: " + joined);
    }
    std::vector<BenchRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 10)
            throw std::runtime_error("csv: row " + std::to_string(r + 1) + " has " +
                                     std::to_string(row.size()) + " fields, expected 10");
        BenchRecord rec;
        rec.instance_id = row[0];
        rec.n = parse_int(row[1], "n");
        rec.distribution = row[2];
        rec.style = style_from_string(row[3]);
        rec.solver = solver_from_string(row[4]);
        rec.tll = parse_double(row[5], "tll");
        if (!row[6].empty()) rec.tll_ratio = parse_double(row[6], "tll_ratio");
        rec.wall_time_ms = parse_double(row[7], "wall_time_ms");
        rec.crossings = parse_int(row[8], "crossings");
        rec.status = status_from_string(row[9]);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<BenchRecord> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return records_from_csv(text);
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");
    std::vector<SummaryRow> rows;
    std::map<std::pair<int, int>, std::size_t> index;  // (style, solver) -> row
    for (const BenchRecord& r : records) {
        const std::pair<int, int> key{static_cast<int>(r.style), static_cast<int>(r.solver)};
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, rows.size()).first;
            SummaryRow row;
            row.style = r.style;
            row.solver = r.solver;
            rows.push_back(row);
        }
        SummaryRow& row = rows[it->second];
        row.records += 1;
        if (r.status == RunStatus::Ok) row.ok += 1;
        row.mean_wall_ms += r.wall_time_ms;
        if (r.tll_ratio) {
            row.mean_ratio = row.mean_ratio.value_or(0.0) + *r.tll_ratio;
            row.max_ratio = std::max(row.max_ratio.value_or(*r.tll_ratio), *r.tll_ratio);
        }
    }
    for (SummaryRow& row : rows) {
        row.success_rate = static_cast<double>(row.ok) / row.records;
        row.mean_wall_ms /= row.records;
        if (row.mean_ratio) {
            int with_ratio = 0;
            for (const BenchRecord& r : records)
                if (r.style == row.style && r.solver == row.solver && r.tll_ratio) ++with_ratio;
            *row.mean_ratio /= with_ratio;
        }
    }
    return rows;
}

std::string summary_to_text(const std::vector<SummaryRow>& rows) {
    const auto ratio_text = [](const std::optional<double>& v) -> std::string {
        if (!v) return "-";
        char b[32];
        std::snprintf(b, sizeof(b), "%.4f", *v);
        return b;
    };
    std::string out =
        "style  solver         records  ok    success  mean_ratio  max_ratio  mean_wall_ms\n";
    for (const SummaryRow& row : rows) {
        const std::string style = to_string(row.style);
        const std::string solver = to_string(row.solver);
        const std::string mean_r = ratio_text(row.mean_ratio);
        const std::string max_r = ratio_text(row.max_ratio);
        char line[160];
        std::snprintf(line, sizeof(line), "%-5s  %-13s  %7d  %4d  %7.3f  %10s  %9s  %12.3f\n",
                      style.c_str(), solver.c_str(), row.records, row.ok, row.success_rate,
                      mean_r.c_str(), max_r.c_str(), row.mean_wall_ms);
        out += line;
    }
    return out;
}

}  // namespace orbital
