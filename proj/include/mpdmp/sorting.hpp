#ifndef MPDMP_SORTING_HPP
#define MPDMP_SORTING_HPP

#include <vector>

#include "mpdmp/core.hpp"

namespace mpdmp {

/// One Pareto level per individual, 1 = best front.
struct RankAssignment {
    std::vector<int> levels;

    int max_level() const;
    /// Indices grouped by front, front 1 first, input order within a front.
    std::vector<std::vector<std::size_t>> fronts() const;
};

/// Ordering key of the max-level multiparty ranking: common solutions with a
/// given level precede non-common ones with the same level.
struct MpndsKey {
    int number = 0;
    bool common = false;

    friend bool operator<(const MpndsKey& a, const MpndsKey& b) {
        if (a.number != b.number) return a.number < b.number;
        return a.common && !b.common;
    }
    friend bool operator==(const MpndsKey& a, const MpndsKey& b) {
        return a.number == b.number && a.common == b.common;
    }
};

/// Fast non-dominated sorting restricted to the `subset` objectives.
RankAssignment nds(const std::vector<ObjectiveVector>& objs, IndexRange subset);

/// NSGA-II crowding distance over one front. Boundary individuals get +inf.
std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front,
                                      IndexRange subset);

/// Crowding entropy over one front: each neighbor-gap pair is weighted by the
/// binary entropy of its split, so evenly spaced neighbors score highest.
std::vector<double> crowding_entropy(const std::vector<ObjectiveVector>& front,
                                     IndexRange subset);

/// Keys for the max-level ranking, one per row of per-party levels.
std::vector<MpndsKey> mpnds_order(const std::vector<std::vector<int>>& party_levels);

/// Ranks from mpnds_order keys, 1 = best distinct key.
RankAssignment mpnds_ranks(const std::vector<std::vector<int>>& party_levels);

/// Two-stage multiparty sorting: per-party levels, then non-dominated sorting
/// of the level rows treated as minimization objectives.
RankAssignment mpnds2(const std::vector<ObjectiveVector>& objs,
                      const PartyLayout& layout);

/// The per-party level matrix (row per individual) used by mpnds2.
std::vector<std::vector<int>> party_level_rows(
    const std::vector<ObjectiveVector>& objs, const PartyLayout& layout);

}  // namespace mpdmp

#endif
