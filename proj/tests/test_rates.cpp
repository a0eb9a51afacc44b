#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ramsey/rates.hpp"

using namespace ramsey;
using Catch::Approx;

TEST_CASE("entropy matches closed-form values") {
    CHECK(entropy(0.5) == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entropy(0.25) == Approx(0.562335144618808350).epsilon(1e-14));
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == 0.0);
    CHECK(entropy(0.3) == Approx(entropy(0.7)).epsilon(1e-15)); // symmetry
    CHECK_THROWS_AS(entropy(-0.1), DomainError);
    CHECK_THROWS_AS(entropy(1.1), DomainError);
}

TEST_CASE("rate function reproduces pinned values") {
    CHECK(delta(0.5, 0.25) == Approx(0.8773826753016616).epsilon(1e-14));
    double s2over4 = std::sqrt(2.0) / 4.0;
    CHECK(delta(0.5, s2over4) == Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-14));
}

TEST_CASE("rate function agrees with an independent evaluation") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double rho = 0.02 + 0.48 * u(rng);
        double sigma = rho * (0.02 + 0.96 * u(rng));
        if (std::abs(sigma - rho / 2) < 1e-6) continue; // avoid the branch seam
        CAPTURE(rho, sigma);
        CHECK(delta(rho, sigma) == Approx(oracle::delta_rate(rho, sigma)).epsilon(1e-12));
    }
}

TEST_CASE("rate function rejects out-of-domain parameters") {
    CHECK_THROWS_AS(delta(0.6, 0.2), DomainError);   // rho > 1/2
    CHECK_THROWS_AS(delta(0.4, 0.4), DomainError);   // sigma == rho
    CHECK_THROWS_AS(delta(0.4, 0.5), DomainError);   // sigma > rho
    CHECK_THROWS_AS(delta(0.4, 0.0), DomainError);   // sigma == 0
    CHECK_THROWS_AS(delta(0.0, 0.0), DomainError);
    CHECK_NOTHROW(delta(0.5, 0.25));
    CHECK_NOTHROW(delta(0.5, 0.5 - 1e-7));
}

TEST_CASE("rate branches join continuously at sigma = rho/2") {
    for (double rho : {0.2, 0.35, 0.5}) {
        double below = delta(rho, rho / 2 - 1e-9);
        double above = delta(rho, rho / 2 + 1e-9);
        CHECK(below == Approx(above).epsilon(1e-6));
    }
}

TEST_CASE("rate decreases in sigma below the branch point") {
    for (double rho : {0.3, 0.5}) {
        double prev = 1.0;
        for (double f = 0.05; f < 0.49; f += 0.05) {
            double d = delta(rho, rho * f);
            CHECK(d < prev);
            CHECK(d > 0.0);
            prev = d;
        }
    }
}

TEST_CASE("complement parameters form an involution and preserve the rate") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double rho = 0.51 + 0.45 * u(rng);
        double sigma = 2 * rho - 1 + (1 - rho) * u(rng) * 0.98 + 1e-4;
        if (!(sigma > 2 * rho - 1 && sigma < rho)) continue;
        RateParams p{rho, sigma, 1};
        RateParams q = complement_params(p);
        CAPTURE(rho, sigma, q.rho, q.sigma);
        REQUIRE(q.rho == Approx(1 - rho));
        REQUIRE(q.sigma == Approx(1 - 2 * rho + sigma));
        RateParams back = complement_params(q);
        CHECK(back.rho == Approx(rho).margin(1e-12));
        CHECK(back.sigma == Approx(sigma).margin(1e-12));
        if (q.rho > 0 && q.sigma > 0 && q.sigma < q.rho && q.rho <= 0.5)
            CHECK(log_delta_reduced(rho, sigma) ==
                  Approx(log_delta(q.rho, q.sigma)).margin(1e-12));
    }
}

TEST_CASE("reduced rate accepts either side of one half") {
    // same difference, complementary set sizes
    CHECK(log_delta_reduced(0.56, 0.3474) ==
          Approx(log_delta(1 - 0.56, 1 - 2 * 0.56 + 0.3474)).margin(1e-14));
    CHECK(log_delta_reduced(0.5, 0.25) == Approx(std::log(0.8773826753016616)).margin(1e-13));
}
