#ifndef MPDMP_CORE_HPP
#define MPDMP_CORE_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace mpdmp {

struct DecisionVector {
    double x1 = 0.0;
    double x2 = 0.0;
};

using ObjectiveVector = std::vector<double>;

/// Contiguous range [begin, end) of objective indices belonging to one party.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
};

/// Partition of objective indices {0,...,m-1} into M parties.
class PartyLayout {
public:
    /// Builds a layout from per-party objective counts.
    explicit PartyLayout(const std::vector<std::size_t>& sizes);

    std::size_t num_parties() const { return parties_.size(); }
    std::size_t num_objectives() const { return total_; }
    const IndexRange& party(std::size_t i) const { return parties_.at(i); }
    const std::vector<IndexRange>& parties() const { return parties_; }

    /// The full objective index range.
    IndexRange all() const { return {0, total_}; }

private:
    std::vector<IndexRange> parties_;
    std::size_t total_ = 0;
};

struct Individual {
    DecisionVector x;
    ObjectiveVector f;
    std::vector<int> party_levels;  // 1 = best, one entry per party
    double diversity = 0.0;
    std::optional<double> cr_used;
    std::optional<double> f_used;
};

enum class Dominance { Dominates, DominatedBy, Incomparable, Equal };

/// Pareto comparison of two objective vectors restricted to `subset`.
/// Minimization throughout.
Dominance compare(const ObjectiveVector& a, const ObjectiveVector& b,
                  IndexRange subset);

inline Dominance compare(const ObjectiveVector& a, const ObjectiveVector& b) {
    return compare(a, b, IndexRange{0, a.size()});
}

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace mpdmp

#endif
