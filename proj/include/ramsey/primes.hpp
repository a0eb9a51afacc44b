#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ramsey {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin for all 64-bit inputs (first twelve prime bases).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1u)) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t next_prime_at_most(std::uint64_t n) {
    while (n >= 2 && !is_prime(n)) --n;
    if (n < 2) throw DomainError("no prime at or below the requested bound");
    return n;
}

struct PrimeSplit {
    std::uint64_t target = 0;            // the required sum
    std::vector<std::uint64_t> parts;    // the primes
    double deviation = 0.0;              // max_i |parts[i] - anchor_i|, minimized
    bool conjecture_conditional = false; // existence in general rests on unproven conjectures
};

namespace detail {

// Exact engine: primes p_1..p_m summing to `target`, one per slot, minimizing
// the largest |p_i - anchor_i|. Grows an integer radius L = 0, 1, 2, ...; the
// level-L window holds exactly the tuples with max deviation <= L, so once a
// window is feasible the best tuple inside it is the global optimum (anything
// better would sit in the same window). Tie-break: lexicographically smallest
// sorted part list. Returns the slot-ordered tuple.
inline bool prime_split_windowed(std::uint64_t target, const std::vector<double>& anchors,
                                 std::vector<std::uint64_t>& best_slots, double& best_dev,
                                 std::uint64_t max_level) {
    size_t m = anchors.size();
    constexpr double kTieTol = 1e-9;
    for (std::uint64_t level = 0;; ++level) {
        if (level > max_level) return false;
        std::vector<std::vector<std::uint64_t>> cand(m);
        bool any_empty = false;
        for (size_t i = 0; i < m; ++i) {
            long long lo = static_cast<long long>(std::ceil(anchors[i] - static_cast<double>(level)));
            long long hi = static_cast<long long>(std::floor(anchors[i] + static_cast<double>(level)));
            for (long long v = std::max(2ll, lo); v <= hi; ++v)
                if (is_prime(static_cast<std::uint64_t>(v)))
                    cand[i].push_back(static_cast<std::uint64_t>(v));
            if (cand[i].empty()) any_empty = true;
        }
        if (any_empty) continue;

        bool found = false;
        double window_best = 0.0;
        std::vector<std::uint64_t> best, best_sorted;
        std::vector<std::uint64_t> cur(m);
        auto rec = [&](auto&& self, size_t slot, std::uint64_t partial_sum,
                       double partial_dev) -> void {
            if (partial_sum > target) return;
            if (found && partial_dev > window_best + kTieTol) return;
            if (slot == m) {
                if (partial_sum != target) return;
                std::vector<std::uint64_t> sorted = cur;
                std::sort(sorted.begin(), sorted.end());
                if (!found || partial_dev < window_best - kTieTol ||
                    (partial_dev <= window_best + kTieTol && sorted < best_sorted)) {
                    if (!found || partial_dev < window_best) window_best = partial_dev;
                    found = true;
                    best = cur;
                    best_sorted = sorted;
                }
                return;
            }
            for (std::uint64_t p : cand[slot]) {
                cur[slot] = p;
                double d = std::abs(static_cast<double>(p) - anchors[slot]);
                self(self, slot + 1, partial_sum + p, std::max(partial_dev, d));
            }
        };
        rec(rec, 0, 0, 0.0);
        if (found) {
            best_slots = best;
            best_dev = window_best;
            return true;
        }
    }
}

} // namespace detail

// Primes of near-equal size summing to target. parts = 3 needs target odd and
// > 5 (three odd primes); parts = 4 needs target even and >= 8. Minimizes the
// largest distance from target/parts exactly; parts come back sorted.
inline PrimeSplit near_equal_prime_split(std::uint64_t target, int parts) {
    if (parts != 3 && parts != 4)
        throw UsageError("near_equal_prime_split: parts must be 3 or 4");
    if (parts == 3) {
        if (target <= 5 || target % 2 == 0)
            throw DomainError(
                "near_equal_prime_split: three primes of comparable size need an odd target > 5");
    } else {
        if (target < 8 || target % 2 != 0)
            throw DomainError(
                "near_equal_prime_split: four primes of comparable size need an even target >= 8");
    }
    std::vector<double> anchors(static_cast<size_t>(parts),
                                static_cast<double>(target) / parts);
    std::vector<std::uint64_t> slots;
    double dev = 0.0;
    if (!detail::prime_split_windowed(target, anchors, slots, dev, target))
        throw DomainError("near_equal_prime_split: no feasible split found");
    std::sort(slots.begin(), slots.end());
    PrimeSplit s;
    s.target = target;
    s.parts = std::move(slots);
    s.deviation = dev;
    s.conjecture_conditional = false; // the search itself certifies this instance
    return s;
}

// Three primes summing to an odd target with prescribed proportions
// (positive, summing to 1 within tol). Output order follows the proportions.
inline PrimeSplit proportional_prime_split(std::uint64_t target,
                                           const std::array<double, 3>& proportions,
                                           double tol = 1e-9) {
    if (target <= 5 || target % 2 == 0)
        throw DomainError("proportional_prime_split: target must be odd and > 5");
    double sum = 0;
    for (double p : proportions) {
        if (!(p > 0)) throw UsageError("proportional_prime_split: proportions must be positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol)
        throw UsageError("proportional_prime_split: proportions must sum to 1");
    std::vector<double> anchors = {proportions[0] * static_cast<double>(target),
                                   proportions[1] * static_cast<double>(target),
                                   proportions[2] * static_cast<double>(target)};
    std::vector<std::uint64_t> slots;
    double dev = 0.0;
    if (!detail::prime_split_windowed(target, anchors, slots, dev, target))
        throw DomainError("proportional_prime_split: no feasible split found");
    PrimeSplit s;
    s.target = target;
    s.parts = std::move(slots);
    s.deviation = dev;
    s.conjecture_conditional = false;
    return s;
}

// Two primes summing to an even target (a Goldbach pair, probed from the
// midpoint outward). Existence for every even target >= 4 is conjectural,
// hence the flag; the returned pair itself is certified.
inline PrimeSplit two_prime_probe(std::uint64_t target) {
    if (target < 4 || target % 2 != 0)
        throw DomainError("two_prime_probe: target must be even and >= 4");
    std::uint64_t half = target / 2;
    for (std::uint64_t a = half; a >= 2; --a) {
        if (is_prime(a) && is_prime(target - a)) {
            PrimeSplit s;
            s.target = target;
            s.parts = {a, target - a};
            s.deviation = static_cast<double>(half - a);
            s.conjecture_conditional = true;
            return s;
        }
    }
    throw DomainError("two_prime_probe: no prime pair found");
}

} // namespace ramsey
