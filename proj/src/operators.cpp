#include "mpdmp/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mpdmp {

namespace {

double sbx_variable(double y1, double y2, double eta, Rng& rng, double& other) {
    double u = rng.uniform01();
    double beta = (u <= 0.5)
                      ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                      : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
    double c1 = 0.5 * ((1.0 + beta) * y1 + (1.0 - beta) * y2);
    double c2 = 0.5 * ((1.0 - beta) * y1 + (1.0 + beta) * y2);
    other = c2;
    return c1;
}

double poly_variable(double y, double eta, Bounds b, Rng& rng) {
    double span = b.hi - b.lo;
    double u = rng.uniform01();
    double delta;
    if (u < 0.5) {
        double d = (y - b.lo) / span;
        double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d, eta + 1.0);
        delta = std::pow(val, 1.0 / (eta + 1.0)) - 1.0;
    } else {
        double d = (b.hi - y) / span;
        double val = 2.0 * (1.0 - u) +
                     2.0 * (u - 0.5) * std::pow(1.0 - d, eta + 1.0);
        delta = 1.0 - std::pow(val, 1.0 / (eta + 1.0));
    }
    return b.clamp(y + delta * span);
}

}  // namespace

std::pair<DecisionVector, DecisionVector> sbx(DecisionVector p1,
                                              DecisionVector p2, double eta,
                                              double pc, Bounds bounds,
                                              Rng& rng) {
    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (rng.uniform01() <= pc) {
        if (rng.uniform01() <= 0.5) {
            c1.x1 = sbx_variable(p1.x1, p2.x1, eta, rng, c2.x1);
        }
        if (rng.uniform01() <= 0.5) {
            c1.x2 = sbx_variable(p1.x2, p2.x2, eta, rng, c2.x2);
        }
    }
    c1.x1 = bounds.clamp(c1.x1);
    c1.x2 = bounds.clamp(c1.x2);
    c2.x1 = bounds.clamp(c2.x1);
    c2.x2 = bounds.clamp(c2.x2);
    return {c1, c2};
}

DecisionVector poly_mutate(DecisionVector x, double pm, double eta,
                           Bounds bounds, Rng& rng) {
    if (rng.uniform01() <= pm) x.x1 = poly_variable(x.x1, eta, bounds, rng);
    if (rng.uniform01() <= pm) x.x2 = poly_variable(x.x2, eta, bounds, rng);
    return x;
}

std::pair<double, double> sample_params(const JadeState& state, Rng& rng) {
    double cr = std::clamp(rng.normal(state.mu_cr, 0.1), 0.0, 1.0);
    double f = rng.cauchy(state.mu_f, 0.1);
    while (f <= 0.0) f = rng.cauchy(state.mu_f, 0.1);
    f = std::min(f, 1.0);
    return {cr, f};
}

DecisionVector current_to_pbest(std::size_t i,
                                const std::vector<Individual>& sorted_pop,
                                const std::vector<Individual>& archive,
                                double f, double p, Bounds bounds, Rng& rng) {
    const std::size_t n = sorted_pop.size();
    if (n < 3) throw std::invalid_argument("current_to_pbest: population < 3");

    std::size_t top = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::ceil(p * static_cast<double>(n)) + 0.5));
    top = std::min(top, n);

    std::size_t pbest, r1, r2;
    bool r1_from_archive;
    int attempts = 0;
    for (;;) {
        ++attempts;
        pbest = rng.index(top);
        std::size_t union_pick = rng.index(n + archive.size());
        r1_from_archive = union_pick >= n;
        r1 = r1_from_archive ? union_pick - n : union_pick;
        r2 = rng.index(n);
        bool r1_is_i = !r1_from_archive && r1 == i;
        bool r1_is_pbest = !r1_from_archive && r1 == pbest;
        bool distinct = pbest != i && !r1_is_i && r2 != i && !r1_is_pbest &&
                        r2 != pbest && (r1_from_archive || r1 != r2);
        if (distinct) break;
        if (attempts >= 100) {
            // Tiny population or pbest pool of size 1 containing x_i itself:
            // keep only the donor-difference constraints.
            if (!r1_is_i && r2 != i && (r1_from_archive || r1 != r2)) break;
        }
        if (attempts >= 200) {
            if (!r1_is_i && r2 != i) break;
        }
    }

    const DecisionVector& xi = sorted_pop[i].x;
    const DecisionVector& xb = sorted_pop[pbest].x;
    const DecisionVector& x1 =
        r1_from_archive ? archive[r1].x : sorted_pop[r1].x;
    const DecisionVector& x2 = sorted_pop[r2].x;

    DecisionVector u;
    u.x1 = xi.x1 + f * (xb.x1 - xi.x1) + f * (x1.x1 - x2.x1);
    u.x2 = xi.x2 + f * (xb.x2 - xi.x2) + f * (x1.x2 - x2.x2);
    u.x1 = reflect_clamp(u.x1, bounds);
    u.x2 = reflect_clamp(u.x2, bounds);
    return u;
}

DecisionVector binomial_crossover(DecisionVector xi, DecisionVector u,
                                  double cr, Rng& rng) {
    std::size_t j_rand = rng.index(2);
    DecisionVector trial = xi;
    if (j_rand == 0 || rng.uniform01() < cr) trial.x1 = u.x1;
    if (j_rand == 1 || rng.uniform01() < cr) trial.x2 = u.x2;
    return trial;
}

void archive_add(JadeState& state, Individual loser) {
    if (state.archive.size() < state.archive_capacity) {
        state.archive.push_back(std::move(loser));
        return;
    }
    if (state.archive_capacity == 0) return;
    std::size_t closest = 0;
    double best = kInfinity;
    for (std::size_t k = 0; k < state.archive.size(); ++k) {
        double d = geom::distance({state.archive[k].x.x1, state.archive[k].x.x2},
                                  {loser.x.x1, loser.x.x2});
        if (d < best) {
            best = d;
            closest = k;
        }
    }
    state.archive[closest] = std::move(loser);
}

double lehmer_mean(const std::vector<double>& values) {
    double num = 0.0, den = 0.0;
    for (double v : values) {
        num += v * v;
        den += v;
    }
    return num / den;
}

void update_means(JadeState& state) {
    if (!state.s_cr.empty()) {
        double mean_a =
            std::accumulate(state.s_cr.begin(), state.s_cr.end(), 0.0) /
            static_cast<double>(state.s_cr.size());
        state.mu_cr = (1.0 - state.c) * state.mu_cr + state.c * mean_a;
    }
    if (!state.s_f.empty()) {
        state.mu_f =
            (1.0 - state.c) * state.mu_f + state.c * lehmer_mean(state.s_f);
    }
    state.s_cr.clear();
    state.s_f.clear();
}

double reflect_clamp(double v, Bounds bounds) {
    if (v < bounds.lo) v = 2.0 * bounds.lo - v;
    else if (v > bounds.hi) v = 2.0 * bounds.hi - v;
    return bounds.clamp(v);
}

}  // namespace mpdmp
