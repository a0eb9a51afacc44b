#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "oracles.hpp"
#include "ramsey/primes.hpp"

using namespace ramsey;
using Catch::Approx;

TEST_CASE("primality agrees with trial division up to 100000") {
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        if (is_prime(n) != oracle::trial_division_prime(n)) {
            CAPTURE(n);
            FAIL("primality mismatch");
        }
    }
    SUCCEED();
}

TEST_CASE("primality handles large and adversarial inputs") {
    CHECK(oracle::lucas_lehmer_m61());
    CHECK(is_prime((1ull << 61) - 1));      // Mersenne prime certified above
    CHECK_FALSE(is_prime(561));             // Carmichael
    CHECK_FALSE(is_prime(3215031751ull));   // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime((1ull << 61) + 1));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
}

TEST_CASE("next prime at most") {
    CHECK(next_prime_at_most(100) == 97);
    CHECK(next_prime_at_most(97) == 97);
    CHECK(next_prime_at_most(3) == 3);
    CHECK_THROWS_AS(next_prime_at_most(1), DomainError);
}

TEST_CASE("near-equal three-prime splits reproduce pinned optima") {
    auto s21 = near_equal_prime_split(21, 3);
    CHECK(s21.parts == std::vector<std::uint64_t>{7, 7, 7});
    CHECK(s21.deviation == Approx(0.0).margin(1e-12));
    CHECK_FALSE(s21.conjecture_conditional);

    auto s35 = near_equal_prime_split(35, 3);
    CHECK(s35.parts == std::vector<std::uint64_t>{11, 11, 13});
    CHECK(s35.deviation == Approx(4.0 / 3.0).margin(1e-12));

    auto s1001 = near_equal_prime_split(1001, 3);
    CHECK(s1001.parts == std::vector<std::uint64_t>{317, 337, 347});
    CHECK(s1001.deviation == Approx(50.0 / 3.0).margin(1e-12));
}

TEST_CASE("near-equal four-prime splits reproduce pinned optima") {
    auto s36 = near_equal_prime_split(36, 4);
    CHECK(s36.parts == std::vector<std::uint64_t>{7, 7, 11, 11});
    CHECK(s36.deviation == Approx(2.0).margin(1e-12));

    auto s100 = near_equal_prime_split(100, 4);
    CHECK(s100.parts == std::vector<std::uint64_t>{19, 19, 31, 31});
    CHECK(s100.deviation == Approx(6.0).margin(1e-12));

    auto s1000 = near_equal_prime_split(1000, 4);
    CHECK(s1000.parts == std::vector<std::uint64_t>{241, 251, 251, 257});
    CHECK(s1000.deviation == Approx(9.0).margin(1e-12));
}

TEST_CASE("three-prime deviation is brute-force optimal on sampled targets") {
    for (std::uint64_t t : {7ull, 23ull, 99ull, 345ull, 1001ull, 2471ull, 4999ull}) {
        auto split = near_equal_prime_split(t, 3);
        auto brute = oracle::brute_three_prime_dev(t);
        REQUIRE(brute.has_value());
        CAPTURE(t);
        CHECK(split.deviation == Approx(*brute).margin(1e-9));
        std::uint64_t sum = 0;
        for (auto p : split.parts) {
            CHECK(oracle::trial_division_prime(p));
            sum += p;
        }
        CHECK(sum == t);
    }
}

TEST_CASE("proportional splits reproduce pinned optima and follow slot order") {
    auto s101 = proportional_prime_split(101, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK(s101.parts == std::vector<std::uint64_t>{29, 31, 41});
    CHECK(s101.deviation == Approx(22.0 / 3.0).margin(1e-12));

    auto s1001 = proportional_prime_split(1001, {0.5, 0.3, 0.2});
    CHECK(s1001.parts == std::vector<std::uint64_t>{509, 293, 199});
    CHECK(s1001.deviation == Approx(8.5).margin(1e-12));
    // slot order: the big proportion owns the big prime
    CHECK(s1001.parts[0] > s1001.parts[1]);
    CHECK(s1001.parts[1] > s1001.parts[2]);
}

TEST_CASE("two-prime probe is conjecture-flagged") {
    auto s4 = two_prime_probe(4);
    CHECK(s4.parts == std::vector<std::uint64_t>{2, 2});
    CHECK(s4.conjecture_conditional);
    auto s100 = two_prime_probe(100);
    CHECK(s100.parts == std::vector<std::uint64_t>{47, 53});
    CHECK(s100.deviation == Approx(3.0).margin(1e-12));
    auto s6 = two_prime_probe(6);
    CHECK(s6.parts == std::vector<std::uint64_t>{3, 3});
    CHECK(s6.deviation == 0.0);
}

TEST_CASE("split preconditions") {
    CHECK_THROWS_AS(near_equal_prime_split(35, 5), UsageError);
    CHECK_THROWS_AS(near_equal_prime_split(36, 3), DomainError); // even target, 3 parts
    CHECK_THROWS_AS(near_equal_prime_split(5, 3), DomainError);  // too small
    CHECK_THROWS_AS(near_equal_prime_split(35, 4), DomainError); // odd target, 4 parts
    CHECK_THROWS_AS(near_equal_prime_split(6, 4), DomainError);  // too small
    CHECK_THROWS_AS(two_prime_probe(7), DomainError);
    CHECK_THROWS_AS(two_prime_probe(2), DomainError);
    CHECK_THROWS_AS(proportional_prime_split(1000, {0.5, 0.3, 0.2}), DomainError);
    CHECK_THROWS_AS(proportional_prime_split(1001, {0.5, 0.3, 0.3}), UsageError);
    CHECK_THROWS_AS(proportional_prime_split(1001, {0.9, 0.2, -0.1}), UsageError);
}
