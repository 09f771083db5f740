#include "mpdmp/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mpdmp {

namespace {

double multiparty_distance(const ObjectiveVector& v, const ObjectiveVector& s,
                           const PartyLayout& layout) {
    double total = 0.0;
    for (const IndexRange& party : layout.parties()) {
        double sq = 0.0;
        for (std::size_t j = party.begin; j < party.end; ++j) {
            double d = v[j] - s[j];
            sq += d * d;
        }
        total += std::sqrt(sq);
    }
    return total;
}

}  // namespace

IgdReport igd(const std::vector<ObjectiveVector>& reference,
              const std::vector<ObjectiveVector>& front,
              const PartyLayout& layout) {
    if (reference.empty()) throw std::invalid_argument("igd: empty reference");
    if (front.empty()) throw std::invalid_argument("igd: empty front");
    double sum = 0.0;
    for (const auto& v : reference) {
        double best = kInfinity;
        for (const auto& s : front) {
            best = std::min(best, multiparty_distance(v, s, layout));
        }
        sum += best;
    }
    return {sum / static_cast<double>(reference.size()), reference.size(),
            front.size()};
}

std::pair<double, double> summarize(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty input");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return {mean, std::sqrt(var)};
}

}  // namespace mpdmp
