#include "mpdmp/core.hpp"

namespace mpdmp {

PartyLayout::PartyLayout(const std::vector<std::size_t>& sizes) {
    if (sizes.size() < 2) {
        throw std::invalid_argument("PartyLayout requires at least 2 parties");
    }
    bool any_multi = false;
    std::size_t begin = 0;
    parties_.reserve(sizes.size());
    for (std::size_t s : sizes) {
        if (s == 0) throw std::invalid_argument("empty party");
        if (s >= 2) any_multi = true;
        parties_.push_back({begin, begin + s});
        begin += s;
    }
    if (!any_multi) {
        throw std::invalid_argument(
            "at least one party must have 2 or more objectives");
    }
    total_ = begin;
}

Dominance compare(const ObjectiveVector& a, const ObjectiveVector& b,
                  IndexRange subset) {
    if (subset.end > a.size() || subset.end > b.size()) {
        throw std::out_of_range("compare: subset exceeds vector length");
    }
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = subset.begin; i < subset.end; ++i) {
        if (a[i] < b[i]) a_better = true;
        else if (b[i] < a[i]) b_better = true;
    }
    if (a_better && b_better) return Dominance::Incomparable;
    if (a_better) return Dominance::Dominates;
    if (b_better) return Dominance::DominatedBy;
    return Dominance::Equal;
}

}  // namespace mpdmp
