// Command-line front end: instance generation, solving, benchmarking, model
// export, and SVG rendering for disk boundary labelings.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbital/harness.hpp"
#include "orbital/instance.hpp"
#include "orbital/labeling.hpp"
#include "orbital/model_export.hpp"
#include "orbital/render.hpp"
#include "orbital/solver_nonuniform.hpp"
#include "orbital/solver_uniform.hpp"

namespace {

using namespace orbital;

int cmd_generate(int n, const std::string& dist, std::uint64_t seed, int count,
                 const std::string& out, bool uniform_widths) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.distribution = distribution_from_string(dist);
    cfg.uniform_widths = uniform_widths;
    const std::filesystem::path out_path(out);
    const bool single_file = count == 1 && out_path.extension() == ".json";
    if (!single_file) std::filesystem::create_directories(out_path);
    for (int k = 0; k < count; ++k) {
        cfg.seed = seed + static_cast<std::uint64_t>(k);
        const Instance inst = generate(cfg);
        const auto file = single_file ? out_path : out_path / (inst.id + ".json");
        write_json(inst, file);
        std::printf("%s -> %s\n", inst.id.c_str(), file.string().c_str());
    }
    return 0;
}

int cmd_solve(const std::string& style_name, const std::string& solver_name,
              const std::string& in, const std::string& out_labeling,
              const std::string& out_svg) {
    const Instance inst = read_json(in);
    const LeaderStyle style = style_from_string(style_name);
    const SolverKind solver = solver_from_string(solver_name);

    std::optional<Labeling> lab;
    double tll = 0.0;
    std::string status = "ok";
    switch (solver) {
        case SolverKind::UniformExact: {
            auto [labeling, report] = solve_uniform(inst, style);
            lab = std::move(labeling);
            tll = report.tll;
            break;
        }
        case SolverKind::Heuristic: {
            HeuristicResult res = solve_heuristic(inst, {style, 0});
            lab = std::move(res.labeling);
            tll = res.report.tll;
            if (!res.success) status = "failure";
            break;
        }
        case SolverKind::ExactBB: {
            ExactResult res = solve_exact(inst, style);
            switch (res.status) {
                case ExactStatus::Optimal: status = "ok"; break;
                case ExactStatus::Infeasible: status = "infeasible"; break;
                case ExactStatus::TimedOut: status = "timeout"; break;
            }
            if (res.labeling) {
                lab = std::move(*res.labeling);
                tll = res.report.tll;
            }
            break;
        }
    }

    if (!lab) {
        std::printf("status %s (no labeling produced)\n", status.c_str());
        return 2;
    }
    const CrossingReport crossings = count_crossings(inst, *lab);
    std::printf("status %s tll %.6f crossings %d\n", status.c_str(), tll, crossings.count);
    if (!out_labeling.empty()) write_labeling_json(*lab, tll, out_labeling);
    if (!out_svg.empty()) write_svg(inst, *lab, out_svg);
    return status == "ok" ? 0 : 2;
}

int cmd_bench(const std::string& corpus, const std::vector<std::string>& style_names,
              const std::vector<std::string>& solver_names, int repeats,
              const std::string& csv) {
    std::vector<LeaderStyle> styles;
    for (const auto& s : style_names) styles.push_back(style_from_string(s));
    std::vector<SolverKind> solvers;
    for (const auto& s : solver_names) solvers.push_back(solver_from_string(s));

    const std::vector<BenchRecord> records = run_corpus(corpus, styles, solvers, repeats);
    if (!csv.empty()) write_csv(records, csv);
    std::printf("%zu records\n", records.size());
    if (!records.empty()) std::fputs(summary_to_text(summarize(records)).c_str(), stdout);
    return 0;
}

int cmd_export_model(const std::string& family, const std::string& in, const std::string& out) {
    const Instance inst = read_json(in);
    ModelDocument doc;
    if (family == "or-mip") {
        doc = build_or_mip(inst);
    } else if (family == "sl-qip") {
        doc = build_sl_qip(inst);
    } else {
        std::fprintf(stderr, "unknown model family: %s (expected or-mip or sl-qip)\n",
                     family.c_str());
        return 1;
    }
    write_model(doc, out);
    std::printf("%s: %zu variables, %zu linear, %zu quadratic, %zu nonlinear\n",
                family.c_str(), doc.variables.size(), doc.linear_constraints.size(),
                doc.quadratic_constraints.size(), doc.nonlinear_constraints.size());
    return 0;
}

int cmd_render(const std::string& in, const std::string& labeling, const std::string& out,
               const std::vector<int>& highlight) {
    const Instance inst = read_json(in);
    const Labeling lab = read_labeling_json(labeling, inst);
    RenderOptions opts;
    opts.highlight = highlight;
    write_svg(inst, lab, out, opts);
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crossing-free boundary labeling of point features in a disk"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Generate synthetic instances");
    int gen_n = 10;
    std::string gen_dist = "uniform";
    std::uint64_t gen_seed = 1;
    int gen_count = 1;
    std::string gen_out = "corpus";
    bool gen_uniform_widths = false;
    gen->add_option("--n", gen_n, "Features per instance")->required();
    gen->add_option("--dist", gen_dist, "uniform | off_center | uniform_off_center");
    gen->add_option("--seed", gen_seed, "Seed of the first instance");
    gen->add_option("--count", gen_count, "Number of instances (consecutive seeds)");
    gen->add_option("--out", gen_out, "Output directory (or a .json file when count is 1)");
    gen->add_flag("--uniform-widths", gen_uniform_widths, "Give every label the same width");

    auto* solve = app.add_subcommand("solve", "Solve one instance");
    std::string solve_style = "or", solve_solver = "heuristic", solve_in;
    std::string solve_out_labeling, solve_out_svg;
    solve->add_option("--style", solve_style, "sl | or");
    solve->add_option("--solver", solve_solver, "uniform_exact | heuristic | exact_bb");
    solve->add_option("--in", solve_in, "Instance JSON")->required();
    solve->add_option("--out-labeling", solve_out_labeling, "Labeling JSON output path");
    solve->add_option("--out-svg", solve_out_svg, "SVG output path");

    auto* bench = app.add_subcommand("bench", "Run solvers over a corpus directory");
    std::string bench_corpus;
    std::vector<std::string> bench_styles{"sl", "or"};
    std::vector<std::string> bench_solvers{"heuristic", "exact_bb"};
    int bench_repeats = 5;
    std::string bench_csv;
    bench->add_option("--corpus", bench_corpus, "Directory of instance JSON files")->required();
    bench->add_option("--styles", bench_styles, "Comma-separated styles")->delimiter(',');
    bench->add_option("--solvers", bench_solvers, "Comma-separated solvers")->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "Timing repeats per run (median)");
    bench->add_option("--csv", bench_csv, "CSV output path");

    auto* exportm = app.add_subcommand("export-model", "Write an optimization model as text");
    std::string export_family = "or-mip", export_in, export_out;
    exportm->add_option("--family", export_family, "or-mip | sl-qip");
    exportm->add_option("--in", export_in, "Instance JSON")->required();
    exportm->add_option("--out", export_out, "Model text output path")->required();

    auto* render = app.add_subcommand("render", "Render an instance plus labeling to SVG");
    std::string render_in, render_labeling, render_out;
    std::vector<int> render_highlight;
    render->add_option("--in", render_in, "Instance JSON")->required();
    render->add_option("--labeling", render_labeling, "Labeling JSON")->required();
    render->add_option("--out", render_out, "SVG output path")->required();
    render->add_option("--highlight", render_highlight, "Feature indices to draw in red")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(gen_n, gen_dist, gen_seed, gen_count, gen_out,
                                gen_uniform_widths);
        if (solve->parsed())
            return cmd_solve(solve_style, solve_solver, solve_in, solve_out_labeling,
                             solve_out_svg);
        if (bench->parsed())
            return cmd_bench(bench_corpus, bench_styles, bench_solvers, bench_repeats,
                             bench_csv);
        if (exportm->parsed()) return cmd_export_model(export_family, export_in, export_out);
        if (render->parsed())
            return cmd_render(render_in, render_labeling, render_out, render_highlight);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
