#ifndef MPDMP_ALGORITHMS_HPP
#define MPDMP_ALGORITHMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mpdmp/core.hpp"
#include "mpdmp/operators.hpp"
#include "mpdmp/problems.hpp"
#include "mpdmp/rng.hpp"
#include "mpdmp/sorting.hpp"

namespace mpdmp {

enum class AlgorithmId { OptAll, OptMpnds, OptMpnds2, OptMpnds3 };

std::string to_string(AlgorithmId id);
AlgorithmId algorithm_from_string(const std::string& name);

struct AlgorithmConfig {
    std::size_t pop_size = 200;
    std::size_t fe_budget = 80000;
    std::size_t fei_budget = 10000;  // per-party initialization budget
    double sbx_eta = 15.0;
    double sbx_pc = 1.0;
    double pm = 0.5;
    double pm_eta = 20.0;
    double jade_p = 0.05;
    double jade_c = 0.05;
    std::uint64_t seed = 0;
};

struct RunResult {
    std::vector<Individual> mps;
    std::size_t fe_used = 0;
    std::size_t init_fe_used = 0;  // OptMPNDS3 only
    /// True when no individual was rank 1 in every party and the mpnds2
    /// rank-1 set was returned instead.
    bool degenerate_mps = false;
};

/// Evaluation with a per-run fitness-evaluation counter.
struct Evaluator {
    const MpDmpProblem& problem;
    std::size_t used = 0;

    Individual make(DecisionVector x) {
        ++used;
        return Individual{x, evaluate(problem, x), {}, 0.0, {}, {}};
    }
};

/// Generational NSGA-II restricted to `subset`, stopping when `budget`
/// evaluations have been consumed through `eval` (the final generation may be
/// partial so the budget is exhausted exactly).
std::vector<Individual> nsga2_loop(const MpDmpProblem& problem,
                                   IndexRange subset, std::size_t pop_size,
                                   std::size_t budget,
                                   const AlgorithmConfig& config,
                                   Evaluator& eval, Rng& rng);

/// Per-party NSGA-II runs of size floor(N/M) unioned, topped up with random
/// individuals to exactly N.
std::vector<Individual> initialization(const MpDmpProblem& problem,
                                       std::size_t pop_size, std::size_t fei,
                                       const AlgorithmConfig& config,
                                       Evaluator& eval, Rng& rng);

RunResult opt_all(const MpDmpProblem& problem, const AlgorithmConfig& config);
RunResult opt_mpnds(const MpDmpProblem& problem, const AlgorithmConfig& config);
RunResult opt_mpnds2(const MpDmpProblem& problem, const AlgorithmConfig& config);
RunResult opt_mpnds3(const MpDmpProblem& problem, const AlgorithmConfig& config);

RunResult run_algorithm(AlgorithmId id, const MpDmpProblem& problem,
                        const AlgorithmConfig& config);

/// Keeps the individuals that are rank 1 in every party; assigns party_levels.
/// Falls back to the mpnds2 rank-1 set (flagged) if the intersection is empty.
std::vector<Individual> final_mps_filter(const std::vector<Individual>& pop,
                                         const MpDmpProblem& problem,
                                         bool* degenerate = nullptr);

}  // namespace mpdmp

#endif
