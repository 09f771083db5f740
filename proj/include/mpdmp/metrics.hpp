#ifndef MPDMP_METRICS_HPP
#define MPDMP_METRICS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "mpdmp/core.hpp"

namespace mpdmp {

struct IgdReport {
    double value = 0.0;
    std::size_t reference_size = 0;
    std::size_t front_size = 0;
};

/// Multiparty inverted generational distance: the point-to-front distance is
/// the sum over parties of per-party Euclidean distances. With one party this
/// is the textbook IGD.
IgdReport igd(const std::vector<ObjectiveVector>& reference,
              const std::vector<ObjectiveVector>& front,
              const PartyLayout& layout);

/// Mean and population (divisor n) standard deviation.
std::pair<double, double> summarize(const std::vector<double>& values);

}  // namespace mpdmp

#endif
