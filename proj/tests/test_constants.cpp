#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/constants.hpp"
#include "ramsey/rates.hpp"

using namespace ramsey;
using Catch::Approx;

TEST_CASE("psi2 is computed by optimization, not hard-coded") {
    double x = psi2_argmax();
    auto f = [](double t) { return (1 + t + t * t * t) / (1 + t * t + t * t * t * t); };
    CHECK(x == Approx(0.464087083432496).margin(1e-6));
    CHECK(psi2() == Approx(f(x)).epsilon(1e-15));
    // local maximality of the reported argmax
    CHECK(f(x) >= f(x - 1e-5));
    CHECK(f(x) >= f(x + 1e-5));
    CHECK(psi2() == Approx(1.2395667407265985).epsilon(1e-12));
    CHECK(std::log(psi2()) == Approx(0.2147619159217809).margin(1e-12));
}

TEST_CASE("closed-form constants") {
    CHECK(psi1() == Approx((1 + std::sqrt(3.0)) / 2).epsilon(1e-15));
    CHECK(psi() == Approx((1 + std::sqrt(2.0)) / 2).epsilon(1e-15));
    CHECK(psi1() == Approx(1.3660254037844386).epsilon(1e-14));
    CHECK(psi() == Approx(1.2071067811865475).epsilon(1e-14));
}

TEST_CASE("psi is the reciprocal of the rate at its defining point") {
    CHECK(psi() == Approx(1.0 / delta(0.5, std::sqrt(2.0) / 4.0)).margin(1e-9));
}

TEST_CASE("named constant lookup") {
    CHECK(named_constant("psi2").base() == Approx(psi2()));
    CHECK(named_constant("psi1").base() == Approx(psi1()));
    CHECK(named_constant("psi").base() == Approx(psi()));
    CHECK_THROWS_AS(named_constant("zeta"), UsageError);
}

TEST_CASE("base dispatch for Euclidean configurations") {
    double p2 = psi2();
    CHECK(chromatic_base(ForbiddenConfig::two_point(Norm::euclidean)).base() ==
          Approx(p2).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::simplex(2, Norm::euclidean)).base() ==
          Approx(std::pow(p2, 1.0 / 3)).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::simplex(3, Norm::euclidean)).base() ==
          Approx(std::pow(p2, 1.0 / 4)).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::semicross(2, Norm::euclidean)).base() ==
          Approx(std::pow(p2, 1.0 / 2)).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::right_triangle(3, 4)).base() ==
          Approx(1.1133583164132734).epsilon(1e-12));
    CHECK(chromatic_base(ForbiddenConfig::acute_triangle(1, 1, 1)).base() ==
          Approx(1.0742119310101945).epsilon(1e-12));
}

TEST_CASE("simplex base coincides with the one-larger semicross base") {
    for (int k = 1; k <= 6; ++k)
        CHECK(chromatic_base(ForbiddenConfig::simplex(k, Norm::euclidean)).log_base ==
              Approx(chromatic_base(ForbiddenConfig::semicross(k + 1, Norm::euclidean)).log_base)
                  .margin(1e-15));
}

TEST_CASE("base dispatch for Manhattan configurations") {
    double p1 = psi1();
    CHECK(chromatic_base(ForbiddenConfig::two_point(Norm::manhattan)).base() ==
          Approx(p1).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::manhattan_triangle(3, 4, 5)).base() ==
          Approx(1.1095654505997897).epsilon(1e-12));
    CHECK(chromatic_base(ForbiddenConfig::simplex(3, Norm::manhattan)).base() ==
          Approx(1.0810970791193396).epsilon(1e-12));
    CHECK(chromatic_base(ForbiddenConfig::semicross(2, Norm::manhattan)).base() ==
          Approx(std::pow(p1, 0.5)).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::baton({1.0, 2.0})).base() ==
          Approx(std::pow(p1, 0.5)).epsilon(1e-14));
    CHECK(chromatic_base(ForbiddenConfig::baton({1.0, 2.0, 0.5})).base() ==
          Approx(std::pow(p1, 1.0 / 3)).epsilon(1e-14));
}

TEST_CASE("base dispatch validates configurations") {
    auto base = [](ForbiddenConfig c) { return chromatic_base(c); };
    CHECK_THROWS_AS(base(ForbiddenConfig::simplex(0, Norm::euclidean)), DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::semicross(0, Norm::euclidean)), DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::semicross(2, Norm::euclidean, {1.0, -2.0})), DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::semicross(2, Norm::euclidean, {1.0, 2.0, 3.0})),
                    DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::right_triangle(0, 4)), DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::acute_triangle(1, 1, 1.5)), DomainError); // obtuse
    CHECK_THROWS_AS(base(ForbiddenConfig::acute_triangle(3, 4, 5)), DomainError);   // right
    CHECK_THROWS_AS(base(ForbiddenConfig::manhattan_triangle(1, 2, 3.5)), DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::baton({})), DomainError);
    CHECK_THROWS_AS(base(ForbiddenConfig::baton({1.0, 0.0})), DomainError);
}

TEST_CASE("weak sunflower base values") {
    CHECK(sunflower_base(3).base() == Approx(1.8783712502218740).epsilon(1e-13));
    CHECK(sunflower_base(4).base() == Approx(1.9080667924624176).epsilon(1e-13));
    CHECK(sunflower_base(5).base() == Approx(1.9261089875117178).epsilon(1e-13));
    CHECK(sunflower_base(10).base() == Approx(1.9627067980275188).epsilon(1e-13));
    CHECK(sunflower_base(20).base() == Approx(1.9812656550939951).epsilon(1e-13));
    CHECK_THROWS_AS(sunflower_base(2), DomainError);
    // 2 psi^{-1/k}: log form
    for (int k = 3; k <= 20; ++k)
        CHECK(sunflower_base(k).log_base ==
              Approx(std::log(2.0) - std::log(psi()) / k).margin(1e-15));
}

TEST_CASE("finite-dimension helper values") {
    CHECK(semicross_chromatic_log(100, 2) == Approx(20.783044411618145).margin(1e-10));
    CHECK(simplex_dimension_threshold(1000000, 0.1) == 8306);
    CHECK_THROWS_AS(semicross_chromatic_log(0, 2), DomainError);
    CHECK_THROWS_AS(semicross_chromatic_log(100, 0), DomainError);
    CHECK_THROWS_AS(simplex_dimension_threshold(1, 0.1), DomainError);
    CHECK_THROWS_AS(simplex_dimension_threshold(1000, 1.0), DomainError); // eps >= ln(psi2)
}

TEST_CASE("growth rate algebra") {
    GrowthRate a = GrowthRate::from_base(2.0);
    GrowthRate b = GrowthRate::from_log(std::log(3.0));
    CHECK((a * b).base() == Approx(6.0).epsilon(1e-14));
    CHECK(a.root(3).base() == Approx(std::pow(2.0, 1.0 / 3)).epsilon(1e-14));
    CHECK_THROWS_AS(GrowthRate::from_base(0.0), DomainError);
    CHECK_THROWS_AS(a.root(0), DomainError);
}
