#include <doctest.h>

#include "mpdmp/core.hpp"
#include "mpdmp/rng.hpp"
#include "mpdmp/sorting.hpp"

#include <cmath>

using namespace mpdmp;

namespace {

/// O(n^2) oracle: front 1 is the non-dominated set, peel and repeat.
std::vector<int> brute_force_nds(const std::vector<ObjectiveVector>& objs,
                                 IndexRange subset) {
    const std::size_t n = objs.size();
    std::vector<int> levels(n, 0);
    int level = 0;
    std::size_t assigned = 0;
    while (assigned < n) {
        ++level;
        std::vector<std::size_t> current;
        for (std::size_t i = 0; i < n; ++i) {
            if (levels[i] != 0) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < n && !dominated; ++j) {
                if (j != i && levels[j] == 0 &&
                    compare(objs[j], objs[i], subset) == Dominance::Dominates) {
                    dominated = true;
                }
            }
            if (!dominated) current.push_back(i);
        }
        for (std::size_t i : current) levels[i] = level;
        assigned += current.size();
    }
    return levels;
}

std::vector<ObjectiveVector> random_pop(Rng& rng, std::size_t n,
                                        std::size_t m) {
    std::vector<ObjectiveVector> objs(n, ObjectiveVector(m));
    for (auto& row : objs) {
        for (auto& v : row) v = rng.uniform_int(0, 9);
    }
    return objs;
}

}  // namespace

TEST_CASE("nds examples") {
    IndexRange all{0, 2};
    // (1,1) dominates both; (1,2) dominates (2,2)
    RankAssignment r = nds({{1, 1}, {2, 2}, {1, 2}}, all);
    CHECK(r.levels == std::vector<int>{1, 3, 2});

    r = nds({{3, 3}, {3, 3}, {3, 3}}, all);
    CHECK(r.levels == std::vector<int>{1, 1, 1});

    r = nds({{1, 1}, {2, 2}, {3, 3}}, all);
    CHECK(r.levels == std::vector<int>{1, 2, 3});
}

TEST_CASE("nds matches the brute-force oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng.index(50);
        std::size_t m = 1 + rng.index(6);
        auto objs = random_pop(rng, n, m);
        IndexRange all{0, m};
        CHECK(nds(objs, all).levels == brute_force_nds(objs, all));
    }
}

TEST_CASE("crowding distance") {
    IndexRange one{0, 1};
    auto d = crowding_distance({{0}, {5}}, one);
    CHECK(d == std::vector<double>{kInfinity, kInfinity});

    d = crowding_distance({{0}, {5}, {10}}, one);
    CHECK(d[0] == kInfinity);
    CHECK(d[1] == doctest::Approx(1.0));
    CHECK(d[2] == kInfinity);

    // constant objective column contributes nothing
    IndexRange both{0, 2};
    d = crowding_distance({{0, 7}, {5, 7}, {10, 7}}, both);
    CHECK(d[1] == doctest::Approx(1.0));
}

TEST_CASE("crowding entropy") {
    IndexRange one{0, 1};
    // midway point: maximal entropy, contribution (dl+du)/range = 1
    auto e = crowding_entropy({{0}, {5}, {10}}, one);
    CHECK(e[0] == kInfinity);
    CHECK(e[1] == doctest::Approx(1.0));
    CHECK(e[2] == kInfinity);

    // duplicate neighbor: zero entropy
    e = crowding_entropy({{0}, {0}, {10}}, one);
    CHECK(e[1] == doctest::Approx(0.0));

    // hand-evaluated asymmetric case
    e = crowding_entropy({{0}, {2}, {10}}, one);
    double expected = -(0.2 * std::log2(0.2) + 0.8 * std::log2(0.8));
    CHECK(e[1] == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("diversity scores are permutation equivariant") {
    Rng rng(23);
    IndexRange all{0, 3};
    // distinct values: equivariance only holds without ties
    std::vector<ObjectiveVector> objs(8, ObjectiveVector(3));
    for (auto& row : objs) {
        for (auto& v : row) v = rng.uniform(0, 10);
    }
    auto base_cd = crowding_distance(objs, all);
    auto base_ce = crowding_entropy(objs, all);
    std::vector<std::size_t> perm{3, 1, 7, 0, 5, 2, 6, 4};
    std::vector<ObjectiveVector> shuffled;
    for (std::size_t i : perm) shuffled.push_back(objs[i]);
    auto cd = crowding_distance(shuffled, all);
    auto ce = crowding_entropy(shuffled, all);
    auto same = [](double a, double b) {
        return (std::isinf(a) && std::isinf(b)) ||
               a == doctest::Approx(b);
    };
    for (std::size_t k = 0; k < perm.size(); ++k) {
        CHECK(same(cd[k], base_cd[perm[k]]));
        CHECK(same(ce[k], base_ce[perm[k]]));
    }
}

TEST_CASE("mpnds keys") {
    auto keys = mpnds_order({{1, 1}, {1, 3}, {2, 2}});
    CHECK(keys[0] == MpndsKey{1, true});
    CHECK(keys[1] == MpndsKey{3, false});
    CHECK(keys[2] == MpndsKey{2, true});

    // order: (1,common) < (1,not-common) < (2,common)
    CHECK(MpndsKey{1, true} < MpndsKey{1, false});
    CHECK(MpndsKey{1, false} < MpndsKey{2, true});

    RankAssignment ranks = mpnds_ranks({{1, 1}, {1, 2}, {2, 2}});
    CHECK(ranks.levels == std::vector<int>{1, 3, 2});
}

TEST_CASE("mpnds keys are invariant to per-party objective scaling") {
    Rng rng(31);
    PartyLayout layout({2, 2});
    for (int trial = 0; trial < 200; ++trial) {
        auto objs = random_pop(rng, 12, 4);
        auto scaled = objs;
        double s = rng.uniform(0.1, 10.0);
        for (auto& row : scaled) {
            row[0] *= s;
            row[1] *= s;
        }
        auto base = mpnds_order(party_level_rows(objs, layout));
        auto after = mpnds_order(party_level_rows(scaled, layout));
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(base[i] == after[i]);
        }
    }
}

TEST_CASE("mpnds2 examples") {
    PartyLayout layout({2, 2});
    // dominated level row
    RankAssignment r = mpnds2({{1, 1, 1, 1}, {2, 2, 2, 2}}, layout);
    CHECK(r.levels == std::vector<int>{1, 2});
    // incomparable level rows
    r = mpnds2({{1, 1, 4, 4}, {4, 4, 1, 1}}, layout);
    CHECK(r.levels == std::vector<int>{1, 1});
}

TEST_CASE("mpnds2 matches the two-stage oracle") {
    Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t parties = 2 + rng.index(2);
        std::vector<std::size_t> sizes;
        std::size_t m = 0;
        for (std::size_t p = 0; p < parties; ++p) {
            sizes.push_back(1 + rng.index(2));
            m += sizes.back();
        }
        if (*std::max_element(sizes.begin(), sizes.end()) < 2) sizes[0] = 2, m += 1;
        PartyLayout layout(sizes);
        std::size_t n = 2 + rng.index(20);
        auto objs = random_pop(rng, n, layout.num_objectives());

        // oracle: brute-force per-party levels, then brute-force NDS on rows
        std::vector<ObjectiveVector> rows(n,
                                          ObjectiveVector(layout.num_parties()));
        for (std::size_t p = 0; p < layout.num_parties(); ++p) {
            auto lv = brute_force_nds(objs, layout.party(p));
            for (std::size_t i = 0; i < n; ++i) rows[i][p] = lv[i];
        }
        auto expected = brute_force_nds(rows, {0, layout.num_parties()});
        CHECK(mpnds2(objs, layout).levels == expected);
    }
}

TEST_CASE("all-ones level rows are always mpnds2 rank 1") {
    Rng rng(53);
    PartyLayout layout({2, 2});
    for (int trial = 0; trial < 200; ++trial) {
        auto objs = random_pop(rng, 16, 4);
        auto rows = party_level_rows(objs, layout);
        auto ranks = mpnds2(objs, layout);
        for (std::size_t i = 0; i < objs.size(); ++i) {
            if (rows[i][0] == 1 && rows[i][1] == 1) {
                CHECK(ranks.levels[i] == 1);
            }
        }
    }
}
