#include <doctest.h>

#include "mpdmp/operators.hpp"

#include <cmath>

using namespace mpdmp;

namespace {

Individual at(double x, double y) {
    return Individual{{x, y}, {}, {}, 0.0, {}, {}};
}

const Bounds kBounds{-10.0, 10.0};

}  // namespace

TEST_CASE("sbx degenerate cases") {
    Rng rng(1);
    auto [c1, c2] = sbx({1, 2}, {1, 2}, 15.0, 1.0, kBounds, rng);
    CHECK(c1.x1 == doctest::Approx(1.0));
    CHECK(c1.x2 == doctest::Approx(2.0));
    CHECK(c2.x1 == doctest::Approx(1.0));

    auto [d1, d2] = sbx({1, 2}, {3, 4}, 15.0, 0.0, kBounds, rng);
    CHECK(d1.x1 == 1.0);
    CHECK(d2.x2 == 4.0);
}

TEST_CASE("sbx children center on the parent midpoint") {
    Rng rng(2);
    double sum1 = 0.0, sum2 = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        auto [c1, c2] = sbx({-1, 0}, {3, 2}, 15.0, 1.0, kBounds, rng);
        sum1 += c1.x1 + c2.x1;
        sum2 += c1.x2 + c2.x2;
    }
    CHECK(std::abs(sum1 / (2 * n) - 1.0) < 0.05);
    CHECK(std::abs(sum2 / (2 * n) - 1.0) < 0.05);
}

TEST_CASE("polynomial mutation") {
    Rng rng(3);
    DecisionVector x = poly_mutate({1, 2}, 0.0, 20.0, kBounds, rng);
    CHECK(x.x1 == 1.0);
    CHECK(x.x2 == 2.0);

    for (int i = 0; i < 1000; ++i) {
        DecisionVector y = poly_mutate({-10, 10}, 1.0, 20.0, kBounds, rng);
        CHECK(y.x1 >= kBounds.lo);
        CHECK(y.x2 <= kBounds.hi);
    }

    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        sum += poly_mutate({0, 0}, 1.0, 20.0, kBounds, rng).x1;
    }
    CHECK(std::abs(sum / n) < 0.05);
}

TEST_CASE("jade parameter sampling stays in range") {
    JadeState state;
    Rng rng(4);
    double cr_sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        auto [cr, f] = sample_params(state, rng);
        CHECK(cr >= 0.0);
        CHECK(cr <= 1.0);
        CHECK(f > 0.0);
        CHECK(f <= 1.0);
        cr_sum += cr;
    }
    CHECK(std::abs(cr_sum / n - 0.5) < 0.01);
}

TEST_CASE("current-to-pbest donor arithmetic") {
    // f = 0 keeps the current point
    std::vector<Individual> pop{at(1, 1), at(2, 2), at(3, 3), at(4, 4)};
    Rng rng(5);
    DecisionVector u = current_to_pbest(1, pop, {}, 0.0, 0.5, kBounds, rng);
    CHECK(u.x1 == doctest::Approx(2.0));
    CHECK(u.x2 == doctest::Approx(2.0));
    CHECK_THROWS(current_to_pbest(0, {at(0, 0), at(1, 1)}, {}, 0.5, 0.5,
                                  kBounds, rng));
}

TEST_CASE("current-to-pbest picks distinct donors") {
    // pop of 3 distinct points, f = 1: u = pbest + x1 - x2 must land on one of
    // the six values reachable from distinct donors, never x_i itself
    std::vector<Individual> pop{at(0, 0), at(4, 0), at(0, 4)};
    Rng rng(6);
    auto matches = [](DecisionVector u, double x, double y) {
        return u.x1 == x && u.x2 == y;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        DecisionVector u = current_to_pbest(0, pop, {}, 1.0, 1.0, kBounds, rng);
        bool reachable = matches(u, 4, -4) || matches(u, -4, 4) ||
                         matches(u, 8, -4) || matches(u, 0, 4) ||
                         matches(u, 4, 0) || matches(u, -4, 8);
        CHECK(reachable);
        CHECK(!matches(u, 0, 0));
    }
}

TEST_CASE("binomial crossover") {
    Rng rng(7);
    DecisionVector trial = binomial_crossover({0, 0}, {1, 1}, 1.0, rng);
    CHECK(trial.x1 == 1.0);
    CHECK(trial.x2 == 1.0);

    // cr = 0: exactly one variable from the donor
    for (int i = 0; i < 200; ++i) {
        DecisionVector t = binomial_crossover({0, 0}, {1, 1}, 0.0, rng);
        CHECK(t.x1 + t.x2 == 1.0);
    }

    // cr = 0.5 over 2 variables: donor share = 0.5 + 0.5*0.5 = 0.75
    int from_donor = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        DecisionVector t = binomial_crossover({0, 0}, {1, 1}, 0.5, rng);
        from_donor += static_cast<int>(t.x1 + t.x2);
    }
    CHECK(std::abs(from_donor / (2.0 * n) - 0.75) < 0.02);
}

TEST_CASE("archive replacement") {
    JadeState state;
    state.archive_capacity = 2;
    archive_add(state, at(0, 0));
    CHECK(state.archive.size() == 1);
    archive_add(state, at(10, 10));
    REQUIRE(state.archive.size() == 2);

    archive_add(state, at(1, 1));  // closest member is (0,0)
    REQUIRE(state.archive.size() == 2);
    CHECK(state.archive[0].x.x1 == 1.0);
    CHECK(state.archive[1].x.x1 == 10.0);

    archive_add(state, at(10, 10));  // exact duplicate replaces itself
    CHECK(state.archive[1].x.x1 == 10.0);
    CHECK(state.archive.size() == 2);
}

TEST_CASE("lehmer mean and parameter updates") {
    CHECK(lehmer_mean({0.5}) == doctest::Approx(0.5));
    CHECK(lehmer_mean({0.2, 0.6}) == doctest::Approx(0.5));

    JadeState state;
    state.c = 0.5;
    state.s_cr = {1.0};
    state.s_f = {0.2, 0.6};
    update_means(state);
    CHECK(state.mu_cr == doctest::Approx(0.75));
    CHECK(state.mu_f == doctest::Approx(0.5));
    CHECK(state.s_cr.empty());
    CHECK(state.s_f.empty());

    double cr = state.mu_cr, f = state.mu_f;
    update_means(state);  // empty memories leave the means unchanged
    CHECK(state.mu_cr == cr);
    CHECK(state.mu_f == f);
}

TEST_CASE("lehmer mean dominates the arithmetic mean") {
    Rng rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> values(1 + rng.index(10));
        double sum = 0.0;
        for (auto& v : values) {
            v = rng.uniform(0.01, 1.0);
            sum += v;
        }
        double arith = sum / static_cast<double>(values.size());
        CHECK(lehmer_mean(values) >= arith - 1e-12);
    }
}

TEST_CASE("means stay in their ranges across random updates") {
    JadeState state;
    Rng rng(9);
    for (int gen = 0; gen < 1000; ++gen) {
        std::size_t k = rng.index(5);
        for (std::size_t i = 0; i < k; ++i) {
            auto [cr, f] = sample_params(state, rng);
            state.s_cr.push_back(cr);
            state.s_f.push_back(f);
        }
        update_means(state);
        CHECK(state.mu_cr >= 0.0);
        CHECK(state.mu_cr <= 1.0);
        CHECK(state.mu_f > 0.0);
        CHECK(state.mu_f <= 1.0);
    }
}

TEST_CASE("reflect-then-clamp repair") {
    CHECK(reflect_clamp(5.0, kBounds) == 5.0);
    CHECK(reflect_clamp(-11.0, kBounds) == -9.0);
    CHECK(reflect_clamp(12.0, kBounds) == 8.0);
    CHECK(reflect_clamp(-40.0, kBounds) == 10.0);  // reflected past, clamped
}
