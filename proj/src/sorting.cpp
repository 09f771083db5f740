#include "mpdmp/sorting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mpdmp {

int RankAssignment::max_level() const {
    return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
}

std::vector<std::vector<std::size_t>> RankAssignment::fronts() const {
    std::vector<std::vector<std::size_t>> out(max_level());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        out[static_cast<std::size_t>(levels[i]) - 1].push_back(i);
    }
    return out;
}

RankAssignment nds(const std::vector<ObjectiveVector>& objs, IndexRange subset) {
    const std::size_t n = objs.size();
    if (n == 0) throw std::invalid_argument("nds: empty population");

    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<int> domination_count(n, 0);
    std::vector<int> levels(n, 0);
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            switch (compare(objs[i], objs[j], subset)) {
                case Dominance::Dominates:
                    dominated[i].push_back(j);
                    ++domination_count[j];
                    break;
                case Dominance::DominatedBy:
                    dominated[j].push_back(i);
                    ++domination_count[i];
                    break;
                default:
                    break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            levels[i] = 1;
            current.push_back(i);
        }
    }
    int level = 1;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated[i]) {
                if (--domination_count[j] == 0) {
                    levels[j] = level + 1;
                    next.push_back(j);
                }
            }
        }
        ++level;
        current = std::move(next);
    }
    return {std::move(levels)};
}

std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front,
                                      IndexRange subset) {
    const std::size_t n = front.size();
    std::vector<double> score(n, 0.0);
    if (n <= 2) {
        std::fill(score.begin(), score.end(), kInfinity);
        return score;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t obj = subset.begin; obj < subset.end; ++obj) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return front[a][obj] < front[b][obj];
                         });
        double range = front[order[n - 1]][obj] - front[order[0]][obj];
        score[order[0]] = kInfinity;
        score[order[n - 1]] = kInfinity;
        if (range <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            score[order[k]] +=
                (front[order[k + 1]][obj] - front[order[k - 1]][obj]) / range;
        }
    }
    return score;
}

std::vector<double> crowding_entropy(const std::vector<ObjectiveVector>& front,
                                     IndexRange subset) {
    const std::size_t n = front.size();
    std::vector<double> score(n, 0.0);
    if (n <= 2) {
        std::fill(score.begin(), score.end(), kInfinity);
        return score;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t obj = subset.begin; obj < subset.end; ++obj) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return front[a][obj] < front[b][obj];
                         });
        double range = front[order[n - 1]][obj] - front[order[0]][obj];
        score[order[0]] = kInfinity;
        score[order[n - 1]] = kInfinity;
        if (range <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            double dl = front[order[k]][obj] - front[order[k - 1]][obj];
            double du = front[order[k + 1]][obj] - front[order[k]][obj];
            double total = dl + du;
            if (total <= 0.0) continue;
            double pl = dl / total;
            double pu = du / total;
            auto plog2 = [](double p) {
                return p > 0.0 ? p * std::log2(p) : 0.0;
            };
            double entropy = -(plog2(pl) + plog2(pu));
            score[order[k]] += total * entropy / range;
        }
    }
    return score;
}

std::vector<MpndsKey> mpnds_order(
    const std::vector<std::vector<int>>& party_levels) {
    std::vector<MpndsKey> keys;
    keys.reserve(party_levels.size());
    for (const auto& row : party_levels) {
        if (row.empty()) throw std::invalid_argument("mpnds_order: empty row");
        bool common = std::all_of(row.begin(), row.end(),
                                  [&](int v) { return v == row.front(); });
        int number = common ? row.front()
                            : *std::max_element(row.begin(), row.end());
        keys.push_back({number, common});
    }
    return keys;
}

RankAssignment mpnds_ranks(const std::vector<std::vector<int>>& party_levels) {
    std::vector<MpndsKey> keys = mpnds_order(party_levels);
    std::vector<MpndsKey> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> levels(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), keys[i]);
        levels[i] = static_cast<int>(it - distinct.begin()) + 1;
    }
    return {std::move(levels)};
}

std::vector<std::vector<int>> party_level_rows(
    const std::vector<ObjectiveVector>& objs, const PartyLayout& layout) {
    const std::size_t n = objs.size();
    const std::size_t m = layout.num_parties();
    std::vector<std::vector<int>> rows(n, std::vector<int>(m));
    for (std::size_t party = 0; party < m; ++party) {
        RankAssignment ranks = nds(objs, layout.party(party));
        for (std::size_t i = 0; i < n; ++i) rows[i][party] = ranks.levels[i];
    }
    return rows;
}

RankAssignment mpnds2(const std::vector<ObjectiveVector>& objs,
                      const PartyLayout& layout) {
    std::vector<std::vector<int>> rows = party_level_rows(objs, layout);
    std::vector<ObjectiveVector> level_objs;
    level_objs.reserve(rows.size());
    for (const auto& row : rows) {
        level_objs.emplace_back(row.begin(), row.end());
    }
    return nds(level_objs, IndexRange{0, layout.num_parties()});
}

}  // namespace mpdmp
