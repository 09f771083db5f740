#ifndef MPDMP_OPERATORS_HPP
#define MPDMP_OPERATORS_HPP

#include <utility>
#include <vector>

#include "mpdmp/core.hpp"
#include "mpdmp/problems.hpp"
#include "mpdmp/rng.hpp"

namespace mpdmp {

/// Adaptive-DE control state: location parameters for CR/F sampling,
/// per-generation success memories, and the bounded external archive.
struct JadeState {
    double mu_cr = 0.5;
    double mu_f = 0.5;
    std::vector<double> s_cr;
    std::vector<double> s_f;
    std::vector<Individual> archive;
    std::size_t archive_capacity = 0;
    double c = 0.05;  // learning rate
    double p = 0.05;  // pbest top fraction
};

/// Simulated binary crossover; children clamped to bounds.
std::pair<DecisionVector, DecisionVector> sbx(DecisionVector p1,
                                              DecisionVector p2, double eta,
                                              double pc, Bounds bounds,
                                              Rng& rng);

/// Polynomial mutation with per-variable probability pm; clamped to bounds.
DecisionVector poly_mutate(DecisionVector x, double pm, double eta,
                           Bounds bounds, Rng& rng);

/// CR ~ Normal(mu_cr, 0.1) clamped to [0,1];
/// F ~ Cauchy(mu_f, 0.1), resampled while <= 0, truncated to 1.
std::pair<double, double> sample_params(const JadeState& state, Rng& rng);

/// DE/current-to-pbest/1 donor vector. sorted_pop must be ordered best-first;
/// the result is repaired to bounds by one reflection then a clamp.
DecisionVector current_to_pbest(std::size_t i,
                                const std::vector<Individual>& sorted_pop,
                                const std::vector<Individual>& archive,
                                double f, double p, Bounds bounds, Rng& rng);

/// Binomial crossover with the forced j_rand variable.
DecisionVector binomial_crossover(DecisionVector xi, DecisionVector u,
                                  double cr, Rng& rng);

/// Appends below capacity; at capacity, replaces the archive member closest
/// to the newcomer in decision space (lowest index on ties).
void archive_add(JadeState& state, Individual loser);

/// Lehmer mean, sum(F^2)/sum(F).
double lehmer_mean(const std::vector<double>& values);

/// End-of-generation location-parameter update; clears both memories.
void update_means(JadeState& state);

/// One reflection off a violated bound, then clamp.
double reflect_clamp(double v, Bounds bounds);

}  // namespace mpdmp

#endif
