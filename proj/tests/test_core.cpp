#include <doctest.h>

#include "mpdmp/core.hpp"
#include "mpdmp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace mpdmp;

namespace {

ObjectiveVector random_vec(Rng& rng, std::size_t len) {
    ObjectiveVector v(len);
    for (auto& x : v) x = rng.uniform_int(0, 3);  // small ints force ties
    return v;
}

}  // namespace

TEST_CASE("compare basic cases") {
    IndexRange both{0, 2};
    CHECK(compare({1, 1}, {2, 2}, both) == Dominance::Dominates);
    CHECK(compare({1, 2}, {1, 2}, both) == Dominance::Equal);
    CHECK(compare({2, 2}, {1, 1}, both) == Dominance::DominatedBy);
    CHECK(compare({1, 2}, {2, 1}, both) == Dominance::Incomparable);
    CHECK(compare({1, 1}, {1, 2}, both) == Dominance::Dominates);
}

TEST_CASE("compare on subsets") {
    ObjectiveVector a{1, 3, 2, 1};
    ObjectiveVector b{2, 2, 3, 1};
    CHECK(compare(a, b, {0, 2}) == Dominance::Incomparable);
    CHECK(compare(a, b, {2, 4}) == Dominance::Dominates);
}

TEST_CASE("compare rejects out-of-range subsets") {
    CHECK_THROWS_AS(compare({1.0}, {1.0}, {0, 2}), std::out_of_range);
}

TEST_CASE("dominance is a strict partial order plus Equal") {
    Rng rng(7);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t len = 1 + rng.index(6);
        IndexRange all{0, len};
        ObjectiveVector a = random_vec(rng, len);
        ObjectiveVector b = random_vec(rng, len);
        ObjectiveVector c = random_vec(rng, len);

        CHECK(compare(a, a, all) == Dominance::Equal);

        // antisymmetry
        Dominance ab = compare(a, b, all);
        Dominance ba = compare(b, a, all);
        if (ab == Dominance::Dominates) CHECK(ba == Dominance::DominatedBy);
        if (ab == Dominance::Incomparable) CHECK(ba == Dominance::Incomparable);
        if (ab == Dominance::Equal) CHECK(ba == Dominance::Equal);

        // transitivity
        if (ab == Dominance::Dominates &&
            compare(b, c, all) == Dominance::Dominates) {
            CHECK(compare(a, c, all) == Dominance::Dominates);
        }

        // full-set dominance never reverses on a subset
        if (ab == Dominance::Dominates && len > 1) {
            for (std::size_t i = 0; i < len; ++i) {
                CHECK(compare(a, b, {i, i + 1}) != Dominance::DominatedBy);
            }
        }
    }
}

TEST_CASE("party layout partitions objectives") {
    PartyLayout layout({2, 3});
    CHECK(layout.num_parties() == 2);
    CHECK(layout.num_objectives() == 5);
    CHECK(layout.party(0).begin == 0);
    CHECK(layout.party(0).end == 2);
    CHECK(layout.party(1).begin == 2);
    CHECK(layout.party(1).end == 5);
    CHECK_THROWS(PartyLayout({4}));
    CHECK_THROWS(PartyLayout({1, 1}));
    CHECK_THROWS(PartyLayout({2, 0}));
}

TEST_CASE("rng determinism") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform01() == b.uniform01());
}

TEST_CASE("rng normal mean") {
    Rng rng(3);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += rng.normal(0.5, 0.1);
    CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("rng cauchy median") {
    Rng rng(4);
    const int n = 100000;
    std::vector<double> draws(n);
    for (auto& d : draws) d = rng.cauchy(0.5, 0.1);
    std::nth_element(draws.begin(), draws.begin() + n / 2, draws.end());
    CHECK(std::abs(draws[n / 2] - 0.5) < 0.01);
}
