#include "mpdmp/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace mpdmp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_header(std::ostream& out, std::uint64_t spec_hash,
                  std::uint64_t seed) {
    out << "# artifact_version=" << kArtifactVersion << " spec_hash="
        << spec_hash << " seed=" << seed << " std=population\n";
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    return out;
}

RunRecord execute_cell(const ExperimentSpec& spec, int problem_id,
                       AlgorithmId algo, std::size_t run,
                       const std::vector<ObjectiveVector>& reference) {
    RunRecord rec;
    rec.problem = problem_id;
    rec.algorithm = algo;
    rec.run = run;
    rec.seed = spec.base_seed + run;
    try {
        MpDmpProblem problem = suite(problem_id);
        AlgorithmConfig config = spec.config;
        config.seed = rec.seed;
        auto start = std::chrono::steady_clock::now();
        rec.result = run_algorithm(algo, problem, config);
        auto stop = std::chrono::steady_clock::now();
        rec.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                .count();
        std::vector<ObjectiveVector> front;
        front.reserve(rec.result.mps.size());
        for (const auto& ind : rec.result.mps) front.push_back(ind.f);
        rec.igd = igd(reference, front, problem.layout).value;
        rec.mps_size = rec.result.mps.size();
        rec.fe_used = rec.result.fe_used;
    } catch (const std::exception& e) {
        rec.failed = true;
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char probe[32];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(probe, "%lf", &back);
        if (back == v) return probe;
    }
    return std::string(buf, static_cast<std::size_t>(n));
}

std::uint64_t ExperimentSpec::hash() const {
    std::ostringstream os;
    for (int p : problems) os << p << ',';
    os << '|';
    for (AlgorithmId a : algorithms) os << to_string(a) << ',';
    os << '|' << runs << '|' << base_seed << '|' << config.pop_size << '|'
       << config.fe_budget << '|' << config.fei_budget << '|'
       << format_double(config.sbx_eta) << '|' << format_double(config.sbx_pc)
       << '|' << format_double(config.pm) << '|' << format_double(config.pm_eta)
       << '|' << format_double(config.jade_p) << '|'
       << format_double(config.jade_c) << '|' << reference_size;
    return fnv1a(0xcbf29ce484222325ULL, os.str());
}

ExperimentSpec load_spec(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) {
        throw std::runtime_error("cannot read config file: " + config_path);
    }
    json j = json::parse(in);
    ExperimentSpec spec;
    if (j.contains("problems")) spec.problems = j["problems"].get<std::vector<int>>();
    if (j.contains("algorithms")) {
        spec.algorithms.clear();
        for (const auto& name : j["algorithms"]) {
            spec.algorithms.push_back(
                algorithm_from_string(name.get<std::string>()));
        }
    }
    if (j.contains("runs")) spec.runs = j["runs"].get<std::size_t>();
    if (j.contains("seed")) spec.base_seed = j["seed"].get<std::uint64_t>();
    if (j.contains("pop")) spec.config.pop_size = j["pop"].get<std::size_t>();
    if (j.contains("fe")) spec.config.fe_budget = j["fe"].get<std::size_t>();
    if (j.contains("fei")) spec.config.fei_budget = j["fei"].get<std::size_t>();
    if (j.contains("sbx_eta")) spec.config.sbx_eta = j["sbx_eta"].get<double>();
    if (j.contains("sbx_pc")) spec.config.sbx_pc = j["sbx_pc"].get<double>();
    if (j.contains("pm")) spec.config.pm = j["pm"].get<double>();
    if (j.contains("pm_eta")) spec.config.pm_eta = j["pm_eta"].get<double>();
    if (j.contains("jade_p")) spec.config.jade_p = j["jade_p"].get<double>();
    if (j.contains("jade_c")) spec.config.jade_c = j["jade_c"].get<double>();
    if (j.contains("ref_size"))
        spec.reference_size = j["ref_size"].get<std::size_t>();
    if (j.contains("out")) spec.output_dir = j["out"].get<std::string>();
    if (j.contains("jobs")) spec.jobs = j["jobs"].get<std::size_t>();
    if (j.contains("plots")) spec.plots = j["plots"].get<bool>();
    return spec;
}

ExperimentResults run_experiment(const ExperimentSpec& spec) {
    if (spec.runs == 0 || spec.problems.empty() || spec.algorithms.empty()) {
        throw std::invalid_argument("experiment spec selects no runs");
    }
    for (int p : spec.problems) {
        if (p < 1 || p > 8)
            throw std::invalid_argument("problem id out of range 1..8");
    }
    fs::create_directories(spec.output_dir);
    const std::uint64_t spec_hash = spec.hash();

    // Reference fronts are shared across all runs of a problem.
    std::map<int, std::vector<ObjectiveVector>> references;
    for (int p : spec.problems) {
        MpDmpProblem problem = suite(p);
        references[p] =
            sample_reference_front(problem, true_ps(p), spec.reference_size);
    }

    struct Cell {
        int problem;
        AlgorithmId algorithm;
        std::size_t run;
    };
    std::vector<Cell> cells;
    for (int p : spec.problems) {
        for (AlgorithmId a : spec.algorithms) {
            for (std::size_t r = 0; r < spec.runs; ++r) {
                cells.push_back({p, a, r});
            }
        }
    }

    ExperimentResults results;
    results.records.resize(cells.size());
    std::atomic<std::size_t> cursor{0};
    std::size_t workers = std::max<std::size_t>(1, spec.jobs);
    workers = std::min(workers, cells.size());
    auto work = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& c = cells[i];
            results.records[i] = execute_cell(spec, c.problem, c.algorithm,
                                              c.run, references.at(c.problem));
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    fs::path dir(spec.output_dir);
    {
        std::ofstream out = open_output(dir / "runs.csv");
        write_header(out, spec_hash, spec.base_seed);
        out << "problem,algorithm,run,seed,igd,mps_size,fe_used\n";
        for (const auto& rec : results.records) {
            if (rec.failed) continue;
            out << rec.problem << ',' << to_string(rec.algorithm) << ','
                << rec.run << ',' << rec.seed << ',' << format_double(rec.igd)
                << ',' << rec.mps_size << ',' << rec.fe_used << '\n';
        }
    }
    {
        // Wall-clock timings are kept out of runs.csv so reruns of the same
        // spec are byte-identical.
        std::ofstream out = open_output(dir / "timings.csv");
        write_header(out, spec_hash, spec.base_seed);
        out << "problem,algorithm,run,elapsed_ms,status\n";
        for (const auto& rec : results.records) {
            out << rec.problem << ',' << to_string(rec.algorithm) << ','
                << rec.run << ',' << rec.elapsed_ms << ','
                << (rec.failed ? "failed" : "ok") << '\n';
        }
    }
    {
        std::ofstream out = open_output(dir / "aggregate.csv");
        write_header(out, spec_hash, spec.base_seed);
        out << "problem,algorithm,igd_mean,igd_std,runs\n";
        for (int p : spec.problems) {
            for (AlgorithmId a : spec.algorithms) {
                std::vector<double> values;
                for (const auto& rec : results.records) {
                    if (!rec.failed && rec.problem == p && rec.algorithm == a) {
                        values.push_back(rec.igd);
                    }
                }
                if (values.empty()) continue;
                auto [mean, std_dev] = summarize(values);
                out << p << ',' << to_string(a) << ',' << format_double(mean)
                    << ',' << format_double(std_dev) << ',' << values.size()
                    << '\n';
            }
        }
    }
    if (spec.keep_solutions) {
        for (int p : spec.problems) {
            MpDmpProblem problem = suite(p);
            for (AlgorithmId a : spec.algorithms) {
                std::ostringstream name;
                name << "solutions_mpdmp" << p << '_' << to_string(a) << ".csv";
                std::ofstream out = open_output(dir / name.str());
                write_header(out, spec_hash, spec.base_seed);
                out << "run,x1,x2";
                for (std::size_t j = 1; j <= problem.num_objectives(); ++j) {
                    out << ",f" << j;
                }
                out << '\n';
                for (const auto& rec : results.records) {
                    if (rec.failed || rec.problem != p || rec.algorithm != a)
                        continue;
                    for (const auto& ind : rec.result.mps) {
                        out << rec.run << ',' << format_double(ind.x.x1) << ','
                            << format_double(ind.x.x2);
                        for (double f : ind.f) out << ',' << format_double(f);
                        out << '\n';
                    }
                }
            }
        }
    }
    if (spec.plots) {
        for (const auto& rec : results.records) {
            if (rec.failed) continue;
            std::ostringstream name;
            name << "plot_mpdmp" << rec.problem << '_'
                 << to_string(rec.algorithm) << "_run" << rec.run;
            export_plot_data(rec.problem, rec.result,
                             (dir / name.str()).string(), rec.seed);
        }
    }

    for (const auto& rec : results.records) {
        if (rec.failed) {
            throw std::runtime_error(
                "run failed: mpdmp" + std::to_string(rec.problem) + "/" +
                to_string(rec.algorithm) + " run " + std::to_string(rec.run) +
                ": " + rec.error);
        }
    }
    return results;
}

void export_problem(const MpDmpProblem& problem, std::ostream& out) {
    out << "# " << problem.name << " bounds=[" << problem.bounds.lo << ','
        << problem.bounds.hi << "]^2 parties="
        << problem.layout.num_parties() << '\n';
    out << "objective,party,px,py\n";
    for (std::size_t party = 0; party < problem.layout.num_parties(); ++party) {
        const IndexRange range = problem.layout.party(party);
        for (std::size_t obj = range.begin; obj < range.end; ++obj) {
            for (const auto& t : problem.objective_targets[obj]) {
                out << (obj + 1) << ',' << (party + 1) << ','
                    << format_double(t.x) << ',' << format_double(t.y) << '\n';
            }
        }
    }
}

void export_reference_front(const MpDmpProblem& problem, const PsRegion& region,
                            std::size_t n, std::ostream& out) {
    out << "x1,x2";
    for (std::size_t j = 1; j <= problem.num_objectives(); ++j) out << ",f" << j;
    out << '\n';
    for (const auto& p : sample_ps_points(region, n)) {
        out << format_double(p.x) << ',' << format_double(p.y);
        for (double f : evaluate(problem, {p.x, p.y})) {
            out << ',' << format_double(f);
        }
        out << '\n';
    }
}

namespace {

struct SvgMapper {
    double min_x, min_y, max_x, max_y;
    static constexpr double kSize = 480.0;
    static constexpr double kMargin = 32.0;

    double sx(double x) const {
        return kMargin + (x - min_x) / (max_x - min_x) * kSize;
    }
    double sy(double y) const {
        return kMargin + (max_y - y) / (max_y - min_y) * kSize;
    }
};

}  // namespace

void export_plot_data(int problem_id, const RunResult& result,
                      const std::string& path_prefix, std::uint64_t seed) {
    MpDmpProblem problem = suite(problem_id);
    PsRegion ps = true_ps(problem_id);
    const std::uint64_t spec_hash = 0;

    {
        std::ofstream out = open_output(path_prefix + "_mps.csv");
        write_header(out, spec_hash, seed);
        out << "x1,x2\n";
        for (const auto& ind : result.mps) {
            out << format_double(ind.x.x1) << ',' << format_double(ind.x.x2)
                << '\n';
        }
    }
    {
        std::ofstream out = open_output(path_prefix + "_ps.csv");
        write_header(out, spec_hash, seed);
        const char* kind = ps.kind == PsKind::Point ? "point"
                           : ps.kind == PsKind::Segment ? "segment"
                                                        : "polygon";
        out << "kind,x1,x2\n";
        for (const auto& v : ps.vertices) {
            out << kind << ',' << format_double(v.x) << ','
                << format_double(v.y) << '\n';
        }
    }

    // Plot extent: all targets, the PS, and the obtained points, padded.
    SvgMapper map{kInfinity, kInfinity, -kInfinity, -kInfinity};
    auto grow = [&](Point2 p) {
        map.min_x = std::min(map.min_x, p.x);
        map.max_x = std::max(map.max_x, p.x);
        map.min_y = std::min(map.min_y, p.y);
        map.max_y = std::max(map.max_y, p.y);
    };
    for (const auto& set : problem.objective_targets) {
        for (const auto& t : set) grow(t);
    }
    for (const auto& v : ps.vertices) grow(v);
    for (const auto& ind : result.mps) grow({ind.x.x1, ind.x.x2});
    double pad = 0.05 * std::max(map.max_x - map.min_x, map.max_y - map.min_y);
    if (pad <= 0.0) pad = 1.0;
    map.min_x -= pad;
    map.min_y -= pad;
    map.max_x += pad;
    map.max_y += pad;

    std::ofstream out = open_output(path_prefix + ".svg");
    double canvas = SvgMapper::kSize + 2 * SvgMapper::kMargin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas
        << "\" height=\"" << canvas << "\">\n";
    out << "<!-- artifact_version=" << kArtifactVersion << " seed=" << seed
        << " problem=" << problem.name << " -->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (ps.kind == PsKind::ConvexPolygon) {
        out << "<polygon points=\"";
        for (const auto& v : ps.vertices) {
            out << map.sx(v.x) << ',' << map.sy(v.y) << ' ';
        }
        out << "\" fill=\"#dddddd\" stroke=\"#444444\"/>\n";
    } else if (ps.kind == PsKind::Segment) {
        out << "<line x1=\"" << map.sx(ps.vertices[0].x) << "\" y1=\""
            << map.sy(ps.vertices[0].y) << "\" x2=\"" << map.sx(ps.vertices[1].x)
            << "\" y2=\"" << map.sy(ps.vertices[1].y)
            << "\" stroke=\"#444444\" stroke-width=\"2\"/>\n";
    } else {
        out << "<circle cx=\"" << map.sx(ps.vertices[0].x) << "\" cy=\""
            << map.sy(ps.vertices[0].y)
            << "\" r=\"5\" fill=\"none\" stroke=\"#444444\" stroke-width=\"2\"/>\n";
    }

    const char* party_colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
    for (std::size_t party = 0; party < problem.layout.num_parties(); ++party) {
        const IndexRange range = problem.layout.party(party);
        const char* color = party_colors[party % 4];
        for (std::size_t obj = range.begin; obj < range.end; ++obj) {
            for (const auto& t : problem.objective_targets[obj]) {
                out << "<rect x=\"" << map.sx(t.x) - 4 << "\" y=\""
                    << map.sy(t.y) - 4
                    << "\" width=\"8\" height=\"8\" fill=\"" << color
                    << "\"/>\n";
            }
        }
    }
    for (const auto& ind : result.mps) {
        out << "<circle cx=\"" << map.sx(ind.x.x1) << "\" cy=\""
            << map.sy(ind.x.x2)
            << "\" r=\"2.5\" fill=\"#ff7f0e\" fill-opacity=\"0.8\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace mpdmp
