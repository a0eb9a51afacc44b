#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "ramsey/product.hpp"

using namespace ramsey;
using Catch::Approx;

namespace {

// the two union-bound loss rates at an arbitrary split exponent
std::pair<double, double> summands(const SuperRamseyParams& p1, const SuperRamseyParams& p2,
                                   double eta) {
    double s1 = -eta * std::log1p(p2.epsilon);
    double s2 = eta * static_cast<double>(p2.m - 1) * std::log(p2.c) -
                (1.0 - eta) * std::log1p(p1.epsilon);
    return {s1, s2};
}

} // namespace

TEST_CASE("optimal split balances the two loss rates") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        SuperRamseyParams p1{0.01 + u(rng), 1.0 + 3 * u(rng), 1 + static_cast<long long>(u(rng) * 9)};
        SuperRamseyParams p2{0.01 + u(rng), 1.0 + 3 * u(rng), 1 + static_cast<long long>(u(rng) * 9)};
        double eta = optimal_eta(p1, p2);
        REQUIRE(eta > 0.0);
        REQUIRE(eta < 1.0);
        auto [s1, s2] = summands(p1, p2, eta);
        CAPTURE(p1.epsilon, p2.epsilon, p2.c, p2.m, eta);
        CHECK(s1 == Approx(s2).margin(1e-9));
        // moving the split in either direction worsens the slower loss
        for (double step : {1e-3, -1e-3}) {
            double e2 = std::clamp(eta + step, 1e-9, 1.0 - 1e-9);
            auto [t1, t2] = summands(p1, p2, e2);
            CHECK(std::max(t1, t2) >= std::max(s1, s2) - 1e-12);
        }
    }
}

TEST_CASE("composition carries the witness bookkeeping") {
    SuperRamseyParams p1{0.2, 3.0, 5};
    SuperRamseyParams p2{0.1, 2.0, 7};
    ComposedProduct c = composed_rate(p1, p2);
    CHECK(c.params.m == 35);
    CHECK(c.params.epsilon == Approx(std::expm1(c.eta * std::log1p(p2.epsilon))).epsilon(1e-14));
    CHECK(c.params.c ==
          Approx(std::pow(p1.c, 1 - c.eta) * std::pow(p2.c, c.eta)).epsilon(1e-12));
    CHECK(c.base.log_base == Approx(std::log1p(c.params.epsilon)).margin(1e-14));
    CHECK(c.base.base() > 1.0);
    CHECK(c.summand_log_rate_1 == Approx(c.summand_log_rate_2).margin(1e-12));
}

TEST_CASE("iterated composition multiplies point counts") {
    SuperRamseyParams p{0.3, 2.0, 4};
    ComposedProduct once = iterated_rate(p, 1);
    CHECK(once.params.m == 4);
    CHECK(once.base.log_base == Approx(std::log1p(0.3)).margin(1e-14));
    ComposedProduct twice = iterated_rate(p, 2);
    ComposedProduct manual = composed_rate(p, p);
    CHECK(twice.params.m == 16);
    CHECK(twice.base.log_base == Approx(manual.base.log_base).margin(1e-14));
    ComposedProduct thrice = iterated_rate(p, 3);
    CHECK(thrice.params.m == 64);
    // each extra factor dilutes the per-dimension margin
    CHECK(thrice.base.log_base < twice.base.log_base);
    CHECK(twice.base.log_base < once.base.log_base);
    CHECK(thrice.base.base() > 1.0);
}

TEST_CASE("product parameter validation") {
    CHECK_THROWS_AS(optimal_eta({-0.1, 2, 3}, {0.1, 2, 3}), DomainError);
    CHECK_THROWS_AS(optimal_eta({0.1, 0.5, 3}, {0.1, 2, 3}), DomainError);
    CHECK_THROWS_AS(optimal_eta({0.1, 2, 0}, {0.1, 2, 3}), DomainError);
    CHECK_THROWS_AS(optimal_eta({0.1, 2, 3}, {0.0, 1.0, 1}), DomainError); // degenerate
    CHECK_THROWS_AS(iterated_rate({0.1, 2, 3}, 0), DomainError);
}
