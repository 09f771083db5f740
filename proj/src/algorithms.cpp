#include "mpdmp/algorithms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mpdmp {

namespace {

std::vector<ObjectiveVector> objectives_of(const std::vector<Individual>& pop) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.f);
    return objs;
}

Individual random_individual(const MpDmpProblem& problem, Evaluator& eval,
                             Rng& rng) {
    DecisionVector x{rng.uniform(problem.bounds.lo, problem.bounds.hi),
                     rng.uniform(problem.bounds.lo, problem.bounds.hi)};
    return eval.make(x);
}

using Ranker = std::function<RankAssignment(const std::vector<ObjectiveVector>&)>;
using Diversity = std::function<std::vector<double>(
    const std::vector<ObjectiveVector>&)>;

/// (mu+lambda) elitist truncation: whole fronts first, the split front by
/// descending diversity (stable on input index). Ranks and diversity scores
/// are written back into the survivors.
std::vector<Individual> environmental_selection(
    std::vector<Individual> pool, const RankAssignment& ranks,
    const Diversity& diversity, std::size_t target,
    std::vector<int>* out_ranks) {
    std::vector<Individual> next;
    next.reserve(target);
    if (out_ranks) out_ranks->clear();
    for (const auto& front : ranks.fronts()) {
        std::vector<ObjectiveVector> front_objs;
        front_objs.reserve(front.size());
        for (std::size_t idx : front) front_objs.push_back(pool[idx].f);
        std::vector<double> scores = diversity(front_objs);
        for (std::size_t k = 0; k < front.size(); ++k) {
            pool[front[k]].diversity = scores[k];
        }
        std::vector<std::size_t> members(front.begin(), front.end());
        std::stable_sort(members.begin(), members.end(),
                         [&](std::size_t a, std::size_t b) {
                             return pool[a].diversity > pool[b].diversity;
                         });
        if (next.size() + members.size() > target) {
            members.resize(target - next.size());
        }
        int level = ranks.levels[front.empty() ? 0 : front[0]];
        for (std::size_t idx : members) {
            next.push_back(pool[idx]);
            if (out_ranks) out_ranks->push_back(level);
        }
        if (next.size() == target) break;
    }
    return next;
}

std::size_t tournament(const std::vector<int>& ranks,
                       const std::vector<Individual>& pop, Rng& rng) {
    std::size_t a = rng.index(pop.size());
    std::size_t b = rng.index(pop.size());
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b] ? a : b;
    if (pop[a].diversity != pop[b].diversity)
        return pop[a].diversity > pop[b].diversity ? a : b;
    return a;
}

/// Shared generational loop of OptAll/OptMPNDS/OptMPNDS2 and the per-party
/// NSGA-II runs; only the ranking and diversity policies differ.
std::vector<Individual> ga_loop(const MpDmpProblem& problem,
                                const Ranker& ranker,
                                const Diversity& diversity,
                                std::size_t pop_size, std::size_t budget,
                                const AlgorithmConfig& config, Evaluator& eval,
                                Rng& rng) {
    if (budget < pop_size) {
        throw std::invalid_argument("ga_loop: budget below population size");
    }
    std::size_t used = 0;
    std::vector<Individual> pop;
    pop.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        pop.push_back(random_individual(problem, eval, rng));
    }
    used += pop_size;

    std::vector<int> ranks;
    {
        RankAssignment ra = ranker(objectives_of(pop));
        pop = environmental_selection(std::move(pop), ra, diversity, pop_size,
                                      &ranks);
    }

    while (used < budget) {
        std::size_t batch = std::min(pop_size, budget - used);
        std::vector<Individual> offspring;
        offspring.reserve(batch);
        while (offspring.size() < batch) {
            std::size_t pa = tournament(ranks, pop, rng);
            std::size_t pb = tournament(ranks, pop, rng);
            auto [c1, c2] = sbx(pop[pa].x, pop[pb].x, config.sbx_eta,
                                config.sbx_pc, problem.bounds, rng);
            offspring.push_back(eval.make(
                poly_mutate(c1, config.pm, config.pm_eta, problem.bounds, rng)));
            if (offspring.size() < batch) {
                offspring.push_back(eval.make(poly_mutate(
                    c2, config.pm, config.pm_eta, problem.bounds, rng)));
            }
        }
        used += batch;
        std::vector<Individual> pool = std::move(pop);
        pool.insert(pool.end(), offspring.begin(), offspring.end());
        RankAssignment ra = ranker(objectives_of(pool));
        pop = environmental_selection(std::move(pool), ra, diversity, pop_size,
                                      &ranks);
    }
    return pop;
}

RunResult finish(std::vector<Individual> pop, const MpDmpProblem& problem,
                 Evaluator& eval, std::size_t init_fe) {
    RunResult result;
    result.mps = final_mps_filter(pop, problem, &result.degenerate_mps);
    result.fe_used = eval.used;
    result.init_fe_used = init_fe;
    return result;
}

RunResult run_generic(const MpDmpProblem& problem,
                      const AlgorithmConfig& config, const Ranker& ranker) {
    Evaluator eval{problem};
    Rng rng(config.seed);
    IndexRange all = problem.layout.all();
    Diversity diversity = [all](const std::vector<ObjectiveVector>& front) {
        return crowding_distance(front, all);
    };
    std::vector<Individual> pop =
        ga_loop(problem, ranker, diversity, config.pop_size, config.fe_budget,
                config, eval, rng);
    return finish(std::move(pop), problem, eval, 0);
}

}  // namespace

std::string to_string(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::OptAll: return "optall";
        case AlgorithmId::OptMpnds: return "optmpnds";
        case AlgorithmId::OptMpnds2: return "optmpnds2";
        case AlgorithmId::OptMpnds3: return "optmpnds3";
    }
    throw std::logic_error("unknown algorithm");
}

AlgorithmId algorithm_from_string(const std::string& name) {
    if (name == "optall") return AlgorithmId::OptAll;
    if (name == "optmpnds") return AlgorithmId::OptMpnds;
    if (name == "optmpnds2") return AlgorithmId::OptMpnds2;
    if (name == "optmpnds3") return AlgorithmId::OptMpnds3;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::vector<Individual> nsga2_loop(const MpDmpProblem& problem,
                                   IndexRange subset, std::size_t pop_size,
                                   std::size_t budget,
                                   const AlgorithmConfig& config,
                                   Evaluator& eval, Rng& rng) {
    Ranker ranker = [subset](const std::vector<ObjectiveVector>& objs) {
        return nds(objs, subset);
    };
    Diversity diversity = [subset](const std::vector<ObjectiveVector>& front) {
        return crowding_distance(front, subset);
    };
    return ga_loop(problem, ranker, diversity, pop_size, budget, config, eval,
                   rng);
}

std::vector<Individual> initialization(const MpDmpProblem& problem,
                                       std::size_t pop_size, std::size_t fei,
                                       const AlgorithmConfig& config,
                                       Evaluator& eval, Rng& rng) {
    const std::size_t parties = problem.layout.num_parties();
    const std::size_t sub_size = pop_size / parties;
    std::vector<Individual> pop;
    pop.reserve(pop_size);
    for (std::size_t party = 0; party < parties; ++party) {
        std::vector<Individual> sub = nsga2_loop(
            problem, problem.layout.party(party), sub_size, fei, config, eval,
            rng);
        pop.insert(pop.end(), sub.begin(), sub.end());
    }
    while (pop.size() < pop_size) {
        pop.push_back(random_individual(problem, eval, rng));
    }
    return pop;
}

RunResult opt_all(const MpDmpProblem& problem, const AlgorithmConfig& config) {
    IndexRange all = problem.layout.all();
    return run_generic(problem, config,
                       [all](const std::vector<ObjectiveVector>& objs) {
                           return nds(objs, all);
                       });
}

RunResult opt_mpnds(const MpDmpProblem& problem,
                    const AlgorithmConfig& config) {
    const PartyLayout& layout = problem.layout;
    return run_generic(problem, config,
                       [&layout](const std::vector<ObjectiveVector>& objs) {
                           return mpnds_ranks(party_level_rows(objs, layout));
                       });
}

RunResult opt_mpnds2(const MpDmpProblem& problem,
                     const AlgorithmConfig& config) {
    const PartyLayout& layout = problem.layout;
    return run_generic(problem, config,
                       [&layout](const std::vector<ObjectiveVector>& objs) {
                           return mpnds2(objs, layout);
                       });
}

RunResult opt_mpnds3(const MpDmpProblem& problem,
                     const AlgorithmConfig& config) {
    const std::size_t n = config.pop_size;
    const std::size_t parties = problem.layout.num_parties();
    const IndexRange all = problem.layout.all();
    if (parties * config.fei_budget > config.fe_budget) {
        throw std::invalid_argument(
            "opt_mpnds3: initialization budget exceeds total budget");
    }

    Evaluator eval{problem};
    Rng rng(config.seed);
    std::vector<Individual> pop =
        initialization(problem, n, config.fei_budget, config, eval, rng);
    const std::size_t init_fe = eval.used;

    JadeState jade;
    jade.archive_capacity = n;
    jade.p = config.jade_p;
    jade.c = config.jade_c;

    Diversity entropy = [all](const std::vector<ObjectiveVector>& front) {
        return crowding_entropy(front, all);
    };

    while (eval.used < config.fe_budget) {
        // Rank and sort the current population best-first for pbest selection.
        {
            RankAssignment ra = mpnds2(objectives_of(pop), problem.layout);
            pop = environmental_selection(std::move(pop), ra, entropy,
                                          pop.size(), nullptr);
        }

        std::size_t batch = std::min(n, config.fe_budget - eval.used);

        // JADE2 trial generation + stage-1 pairwise selection.
        std::vector<Individual> survivors;
        std::vector<char> is_trial;
        survivors.reserve(pop.size() + batch);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (i >= batch) {
                survivors.push_back(pop[i]);
                is_trial.push_back(0);
                continue;
            }
            auto [cr, f] = sample_params(jade, rng);
            DecisionVector donor = current_to_pbest(
                i, pop, jade.archive, f, jade.p, problem.bounds, rng);
            DecisionVector tx = binomial_crossover(pop[i].x, donor, cr, rng);
            Individual trial = eval.make(tx);
            trial.cr_used = cr;
            trial.f_used = f;
            switch (compare(trial.f, pop[i].f, all)) {
                case Dominance::Dominates:
                    archive_add(jade, pop[i]);
                    survivors.push_back(std::move(trial));
                    is_trial.push_back(1);
                    break;
                case Dominance::DominatedBy:
                    archive_add(jade, std::move(trial));
                    survivors.push_back(pop[i]);
                    is_trial.push_back(0);
                    break;
                default:
                    survivors.push_back(pop[i]);
                    is_trial.push_back(0);
                    survivors.push_back(std::move(trial));
                    is_trial.push_back(1);
                    break;
            }
        }

        // Environmental selection: whole mpnds2 fronts, then the split front
        // trimmed by repeatedly dropping its lowest-entropy member.
        RankAssignment ra = mpnds2(objectives_of(survivors), problem.layout);
        std::vector<Individual> next;
        next.reserve(n);
        std::vector<char> next_is_trial;
        for (const auto& front : ra.fronts()) {
            if (next.size() == n) {
                for (std::size_t idx : front) archive_add(jade, survivors[idx]);
                continue;
            }
            std::vector<std::size_t> members(front.begin(), front.end());
            std::size_t room = n - next.size();
            while (members.size() > room) {
                std::vector<ObjectiveVector> front_objs;
                front_objs.reserve(members.size());
                for (std::size_t idx : members)
                    front_objs.push_back(survivors[idx].f);
                std::vector<double> scores = crowding_entropy(front_objs, all);
                std::size_t worst = static_cast<std::size_t>(
                    std::min_element(scores.begin(), scores.end()) -
                    scores.begin());
                archive_add(jade, survivors[members[worst]]);
                members.erase(members.begin() +
                              static_cast<std::ptrdiff_t>(worst));
            }
            for (std::size_t idx : members) {
                next.push_back(survivors[idx]);
                next_is_trial.push_back(is_trial[idx]);
            }
        }

        for (std::size_t k = 0; k < next.size(); ++k) {
            if (next_is_trial[k]) {
                jade.s_cr.push_back(*next[k].cr_used);
                jade.s_f.push_back(*next[k].f_used);
            }
        }
        update_means(jade);
        pop = std::move(next);
    }

    return finish(std::move(pop), problem, eval, init_fe);
}

RunResult run_algorithm(AlgorithmId id, const MpDmpProblem& problem,
                        const AlgorithmConfig& config) {
    switch (id) {
        case AlgorithmId::OptAll: return opt_all(problem, config);
        case AlgorithmId::OptMpnds: return opt_mpnds(problem, config);
        case AlgorithmId::OptMpnds2: return opt_mpnds2(problem, config);
        case AlgorithmId::OptMpnds3: return opt_mpnds3(problem, config);
    }
    throw std::logic_error("unknown algorithm");
}

std::vector<Individual> final_mps_filter(const std::vector<Individual>& pop,
                                         const MpDmpProblem& problem,
                                         bool* degenerate) {
    std::vector<ObjectiveVector> objs = objectives_of(pop);
    std::vector<std::vector<int>> rows = party_level_rows(objs, problem.layout);
    std::vector<Individual> mps;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (std::all_of(rows[i].begin(), rows[i].end(),
                        [](int v) { return v == 1; })) {
            Individual ind = pop[i];
            ind.party_levels = rows[i];
            mps.push_back(std::move(ind));
        }
    }
    if (degenerate) *degenerate = false;
    if (mps.empty()) {
        if (degenerate) *degenerate = true;
        RankAssignment ra = mpnds2(objs, problem.layout);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (ra.levels[i] == 1) {
                Individual ind = pop[i];
                ind.party_levels = rows[i];
                mps.push_back(std::move(ind));
            }
        }
    }
    return mps;
}

}  // namespace mpdmp
