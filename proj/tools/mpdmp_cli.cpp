#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpdmp/experiment.hpp"

namespace {

using namespace mpdmp;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRunFailure = 2;

const char* kind_name(PsKind kind) {
    switch (kind) {
        case PsKind::Point: return "point";
        case PsKind::Segment: return "segment";
        case PsKind::ConvexPolygon: return "polygon";
    }
    return "?";
}

int cmd_problems(const std::string& out_dir) {
    for (int id = 1; id <= 8; ++id) {
        MpDmpProblem problem = suite(id);
        PsRegion ps = true_ps(id);
        std::cout << problem.name << ": m=" << problem.num_objectives()
                  << " parties=(";
        for (std::size_t p = 0; p < problem.layout.num_parties(); ++p) {
            std::cout << (p ? "," : "") << problem.layout.party(p).size();
        }
        std::cout << ") PS=" << kind_name(ps.kind) << " [";
        for (const auto& v : ps.vertices) {
            std::cout << " (" << format_double(v.x) << ',' << format_double(v.y)
                      << ')';
        }
        std::cout << " ]\n";
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::ofstream geo(std::filesystem::path(out_dir) /
                              ("mpdmp" + std::to_string(id) + "_targets.csv"));
            export_problem(problem, geo);
            std::ofstream ref(std::filesystem::path(out_dir) /
                              ("mpdmp" + std::to_string(id) + "_reference.csv"));
            export_reference_front(problem, ps, 1000, ref);
        }
    }
    return kExitOk;
}

int cmd_verify() {
    bool ok = true;
    for (int id = 1; id <= 8; ++id) {
        MpDmpProblem problem = suite(id);
        PsRegion expected = true_ps(id);
        PsRegion derived = ps_oracle(problem);
        bool kind_match = derived.kind == expected.kind;
        bool vertices_match =
            derived.vertices.size() == expected.vertices.size();
        if (vertices_match) {
            for (const auto& v : expected.vertices) {
                if (geom::distance_to_region(derived.vertices, v) > 1e-9) {
                    vertices_match = false;
                    break;
                }
            }
        }
        // Pareto optimality spot check of sampled PS points.
        bool optimal = true;
        Rng rng(2024 + static_cast<std::uint64_t>(id));
        auto samples = sample_ps_points(expected, 32);
        for (const auto& q : samples) {
            ObjectiveVector fq = evaluate(problem, {q.x, q.y});
            for (int trial = 0; trial < 2000; ++trial) {
                DecisionVector x{rng.uniform(problem.bounds.lo, problem.bounds.hi),
                                 rng.uniform(problem.bounds.lo, problem.bounds.hi)};
                if (compare(evaluate(problem, x), fq) == Dominance::Dominates) {
                    optimal = false;
                    break;
                }
            }
            if (!optimal) break;
        }
        bool pass = kind_match && vertices_match && optimal;
        ok = ok && pass;
        std::cout << problem.name << ": oracle=" << kind_name(derived.kind)
                  << " expected=" << kind_name(expected.kind) << " vertices="
                  << (vertices_match ? "match" : "MISMATCH") << " optimality="
                  << (optimal ? "ok" : "VIOLATED") << " => "
                  << (pass ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitRunFailure;
}

int cmd_plot(const std::string& solutions_csv, int problem_id,
             const std::string& out_prefix) {
    std::ifstream in(solutions_csv);
    if (!in) {
        std::cerr << "cannot read " << solutions_csv << '\n';
        return kExitConfigError;
    }
    RunResult result;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("run,", 0) == 0 ||
            line.rfind("x1,", 0) == 0) {
            continue;
        }
        std::istringstream row(line);
        std::vector<double> fields;
        std::string cell;
        while (std::getline(row, cell, ',')) fields.push_back(std::stod(cell));
        // Accept both solutions CSVs (run,x1,x2,...) and MPS CSVs (x1,x2).
        std::size_t base = (fields.size() >= 3) ? 1 : 0;
        if (fields.size() < base + 2) continue;
        Individual ind;
        ind.x = {fields[base], fields[base + 1]};
        ind.f = evaluate(suite(problem_id), ind.x);
        result.mps.push_back(std::move(ind));
    }
    export_plot_data(problem_id, result, out_prefix);
    std::cout << "wrote " << out_prefix << ".svg (" << result.mps.size()
              << " points)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiparty distance-minimization benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a seeded experiment grid");
    std::string config_path;
    ExperimentSpec spec;
    std::vector<int> problems;
    std::vector<std::string> algorithms;
    long long runs = -1, seed = -1, pop = -1, fe = -1, fei = -1, ref_size = -1,
              jobs = -1;
    std::string out_dir;
    bool plots = false;
    run->add_option("--config", config_path, "JSON config file");
    run->add_option("--problems", problems, "Problem ids (1..8)");
    run->add_option("--algorithms", algorithms,
                    "optall optmpnds optmpnds2 optmpnds3");
    run->add_option("--runs", runs, "Independent runs per cell");
    run->add_option("--seed", seed, "Base seed (run r uses seed+r)");
    run->add_option("--pop", pop, "Population size");
    run->add_option("--fe", fe, "Total fitness-evaluation budget");
    run->add_option("--fei", fei, "Per-party initialization budget");
    run->add_option("--ref-size", ref_size, "Reference front size");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--jobs", jobs, "Max concurrent runs");
    run->add_flag("--plots", plots, "Export SVG plots per run");

    // plot
    auto* plot = app.add_subcommand("plot", "Re-export an SVG from solutions");
    std::string plot_csv, plot_prefix = "plot";
    int plot_problem = 1;
    plot->add_option("--solutions", plot_csv, "Solutions CSV")->required();
    plot->add_option("--problem", plot_problem, "Problem id")->required();
    plot->add_option("--out", plot_prefix, "Output path prefix");

    // problems
    auto* probs = app.add_subcommand("problems", "Print suite geometry");
    std::string probs_out;
    probs->add_option("--out", probs_out,
                      "Also export target/reference CSVs to this directory");

    // verify
    app.add_subcommand("verify",
                       "Check the Pareto-set oracle and geometry invariants");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("problems")) return cmd_problems(probs_out);
        if (app.got_subcommand("verify")) return cmd_verify();
        if (app.got_subcommand("plot")) {
            return cmd_plot(plot_csv, plot_problem, plot_prefix);
        }

        if (!config_path.empty()) spec = load_spec(config_path);
        if (!problems.empty()) spec.problems = problems;
        if (!algorithms.empty()) {
            spec.algorithms.clear();
            for (const auto& name : algorithms) {
                spec.algorithms.push_back(algorithm_from_string(name));
            }
        }
        if (runs >= 0) spec.runs = static_cast<std::size_t>(runs);
        if (seed >= 0) spec.base_seed = static_cast<std::uint64_t>(seed);
        if (pop >= 0) spec.config.pop_size = static_cast<std::size_t>(pop);
        if (fe >= 0) spec.config.fe_budget = static_cast<std::size_t>(fe);
        if (fei >= 0) spec.config.fei_budget = static_cast<std::size_t>(fei);
        if (ref_size >= 0)
            spec.reference_size = static_cast<std::size_t>(ref_size);
        if (jobs >= 0) spec.jobs = static_cast<std::size_t>(jobs);
        if (!out_dir.empty()) spec.output_dir = out_dir;
        if (plots) spec.plots = true;

        ExperimentResults results = run_experiment(spec);
        std::cout << "completed " << results.records.size() << " runs; results in "
                  << spec.output_dir << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "run failure: " << e.what() << '\n';
        return kExitRunFailure;
    }
}
