#ifndef MPDMP_EXPERIMENT_HPP
#define MPDMP_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mpdmp/algorithms.hpp"
#include "mpdmp/metrics.hpp"
#include "mpdmp/problems.hpp"

namespace mpdmp {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct ExperimentSpec {
    std::vector<int> problems = {1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<AlgorithmId> algorithms = {
        AlgorithmId::OptAll, AlgorithmId::OptMpnds, AlgorithmId::OptMpnds2,
        AlgorithmId::OptMpnds3};
    std::size_t runs = 30;
    std::uint64_t base_seed = 1;
    AlgorithmConfig config;  // seed field ignored; run r uses base_seed + r
    std::string output_dir = "results";
    std::size_t reference_size = 1000;
    std::size_t jobs = 1;
    bool plots = false;
    bool keep_solutions = true;

    /// Stable 64-bit hash of every reproducibility-relevant field.
    std::uint64_t hash() const;
};

ExperimentSpec load_spec(const std::string& config_path);

struct RunRecord {
    int problem = 0;
    AlgorithmId algorithm = AlgorithmId::OptAll;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double igd = 0.0;
    std::size_t mps_size = 0;
    std::size_t fe_used = 0;
    long long elapsed_ms = 0;
    bool failed = false;
    std::string error;
    RunResult result;
};

struct ExperimentResults {
    std::vector<RunRecord> records;
};

/// Executes every (problem, algorithm, run) cell on a bounded worker pool and
/// writes runs.csv, aggregate.csv, timings.csv, and per-cell solution CSVs
/// (plus SVG plots when enabled) under spec.output_dir.
ExperimentResults run_experiment(const ExperimentSpec& spec);

/// Writes MPS decision points (CSV), true-PS geometry (CSV), and a decision-
/// space scatter plot (SVG) for one completed run. `path_prefix` is extended
/// with _mps.csv, _ps.csv, and .svg.
void export_plot_data(int problem_id, const RunResult& result,
                      const std::string& path_prefix,
                      std::uint64_t seed = 0);

/// One record per target point: objective index, party index, coordinates.
void export_problem(const MpDmpProblem& problem, std::ostream& out);

/// Reference front as CSV with columns x1,x2,f1..fm.
void export_reference_front(const MpDmpProblem& problem, const PsRegion& region,
                            std::size_t n, std::ostream& out);

/// Deterministic shortest round-trip double formatting used by all outputs.
std::string format_double(double v);

}  // namespace mpdmp

#endif
