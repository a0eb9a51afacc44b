#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "growth_rate.hpp"
#include "nelder_mead.hpp"
#include "primes.hpp"
#include "rates.hpp"

namespace ramsey {

// One block of a coordinate partition: nu is its fraction of the coordinates,
// rho_share and sigma_share its fractions of the global set size and
// forbidden intersection size. Local parameters are the shares scaled by nu.
struct PlanBlock {
    double nu = 0.0;
    double rho_share = 0.0;
    double sigma_share = 0.0;

    double local_rho() const { return rho_share / nu; }
    double local_sigma() const { return sigma_share / nu; }
};

struct PartitionPlan {
    std::vector<PlanBlock> blocks;

    double total_rho() const {
        double s = 0;
        for (const auto& b : blocks) s += b.rho_share;
        return s;
    }
    double total_sigma() const {
        double s = 0;
        for (const auto& b : blocks) s += b.sigma_share;
        return s;
    }

    static PartitionPlan symmetric(double rho, double sigma, int k) {
        if (k < 1) throw UsageError("PartitionPlan: need at least one block");
        PartitionPlan p;
        for (int i = 0; i < k; ++i)
            p.blocks.push_back({1.0 / k, rho / k, sigma / k});
        return p;
    }

    void validate(double rho, double sigma, double tol = 1e-9) const {
        if (blocks.empty()) throw DomainError("PartitionPlan: no blocks");
        double snu = 0, srho = 0, ssigma = 0;
        for (size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            if (!(b.nu > 0) || !(b.rho_share > 0) || !(b.sigma_share > 0))
                throw DomainError("PartitionPlan: block " + std::to_string(i) +
                                  " has a non-positive component");
            snu += b.nu;
            srho += b.rho_share;
            ssigma += b.sigma_share;
        }
        if (std::abs(snu - 1.0) > tol)
            throw DomainError("PartitionPlan: block fractions must sum to 1");
        if (std::abs(srho - rho) > tol)
            throw DomainError("PartitionPlan: rho shares must sum to rho");
        if (std::abs(ssigma - sigma) > tol)
            throw DomainError("PartitionPlan: sigma shares must sum to sigma");
    }
};

// Bound base from a partition plan: exp(H(rho)) * max_i delta_i^{nu_i}, each
// block complement-reduced when its local rho exceeds 1/2. The slowest
// decaying block dominates the sum of per-block terms, so the max carries the
// same exponential rate.
inline GrowthRate plan_rate(const PartitionPlan& plan, double rho, double tol = 1e-9) {
    plan.validate(rho, plan.total_sigma(), tol);
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < plan.blocks.size(); ++i) {
        const auto& b = plan.blocks[i];
        double ld;
        try {
            ld = log_delta_reduced(b.local_rho(), b.local_sigma());
        } catch (const DomainError& e) {
            throw DomainError("plan_rate: block " + std::to_string(i) + ": " + e.what());
        }
        worst = std::max(worst, b.nu * ld);
    }
    return GrowthRate::from_log(entropy(rho) + worst);
}

// exp(H(rho)) * delta(rho, sigma)^{1/c}. c = 1 is the unpartitioned bound;
// c = 3 covers odd set-size-minus-intersection differences via three primes,
// c = 4 even ones via four. c = 2 rides on an unproven two-prime split and
// must be requested explicitly.
inline GrowthRate forbidden_intersection_base(double rho, double sigma, int c_class,
                                              bool allow_conjectural_c2 = false) {
    if (c_class == 2 && !allow_conjectural_c2)
        throw UsageError("forbidden_intersection_base: c = 2 is conjecture-conditional; "
                         "request it explicitly");
    if (c_class != 1 && c_class != 2 && c_class != 3 && c_class != 4)
        throw UsageError("forbidden_intersection_base: c must be 1, 3, or 4 (or conjectural 2)");
    return GrowthRate::from_log(entropy(rho) + log_delta(rho, sigma) / c_class);
}

// Per-coordinate base for families of k-wise structured sets in dimension kn:
// exp(H(rho)) * delta(rho, sigma)^{1/(k c)}.
inline GrowthRate clique_base(double rho, double sigma, int k, int c_class) {
    if (k < 3) throw UsageError("clique_base: k must be >= 3");
    if (c_class != 1 && c_class != 3 && c_class != 4)
        throw UsageError("clique_base: c must be 1, 3, or 4");
    return GrowthRate::from_log(entropy(rho) +
                                log_delta(rho, sigma) / (static_cast<double>(k) * c_class));
}

struct OptimizeConfig {
    int starts = 64;
    std::uint64_t seed = 20260822;
    double tol = 1e-8;
    int max_iterations = 4000;
};

struct OptimizeResult {
    PartitionPlan plan;
    GrowthRate rate;
    GrowthRate symmetric_rate;
    GrowthRate c1_barrier;           // unpartitioned c = 1 rate, a floor for this technique
    bool improved_over_symmetric = false;
    int starts = 0;
    std::uint64_t seed = 0;
    std::int64_t evaluations = 0;
};

namespace detail {

// Objective over the free coordinates (k-1 of each of nu, rho_share,
// sigma_share; the last block takes the remainders). Infeasible points get a
// graded penalty so the simplex is pulled back toward the domain.
struct PlanObjective {
    double rho, sigma;
    int k;

    PartitionPlan decode(const std::vector<double>& x) const {
        PartitionPlan p;
        double rn = 1.0, rr = rho, rs = sigma;
        for (int i = 0; i < k - 1; ++i) {
            PlanBlock b{x[static_cast<size_t>(i)], x[static_cast<size_t>(k - 1 + i)],
                        x[static_cast<size_t>(2 * (k - 1) + i)]};
            p.blocks.push_back(b);
            rn -= b.nu;
            rr -= b.rho_share;
            rs -= b.sigma_share;
        }
        p.blocks.push_back({rn, rr, rs});
        return p;
    }

    double operator()(const std::vector<double>& x) const {
        PartitionPlan p = decode(x);
        constexpr double kEdge = 1e-7;
        double violation = 0.0;
        for (const auto& b : p.blocks) {
            violation += std::max(0.0, kEdge - b.nu);
            violation += std::max(0.0, kEdge - b.rho_share);
            violation += std::max(0.0, kEdge - b.sigma_share);
        }
        if (violation > 0) return 10.0 + 100.0 * violation;
        for (const auto& b : p.blocks) {
            double lr = b.local_rho(), ls = b.local_sigma();
            if (lr > 0.5) { // complement reduction
                double nlr = 1.0 - lr, nls = 1.0 - 2.0 * lr + ls;
                violation += std::max(0.0, kEdge - nlr);
                violation += std::max(0.0, kEdge - nls);
                violation += std::max(0.0, ls - (lr - kEdge)); // sigma below rho pre-reduction
                lr = nlr;
                ls = nls;
            }
            violation += std::max(0.0, kEdge - ls);
            violation += std::max(0.0, ls - (lr - kEdge));
        }
        if (violation > 0) return 10.0 + 100.0 * violation;
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& b : p.blocks)
            worst = std::max(worst, b.nu * log_delta_reduced(b.local_rho(), b.local_sigma()));
        return entropy(rho) + worst;
    }
};

inline std::vector<double> encode_plan(const PartitionPlan& p) {
    int k = static_cast<int>(p.blocks.size());
    std::vector<double> x(static_cast<size_t>(3 * (k - 1)));
    for (int i = 0; i < k - 1; ++i) {
        x[static_cast<size_t>(i)] = p.blocks[static_cast<size_t>(i)].nu;
        x[static_cast<size_t>(k - 1 + i)] = p.blocks[static_cast<size_t>(i)].rho_share;
        x[static_cast<size_t>(2 * (k - 1) + i)] = p.blocks[static_cast<size_t>(i)].sigma_share;
    }
    return x;
}

} // namespace detail

// Multistart derivative-free minimization of plan_rate over k-block plans.
// Seeds: the symmetric plan, a single-heavy-block shape, and random share
// splits. Never returns a plan worse than the symmetric one.
inline OptimizeResult optimize_plan(double rho, double sigma, int k_blocks,
                                    const OptimizeConfig& cfg = {}) {
    if (k_blocks != 3 && k_blocks != 4)
        throw UsageError("optimize_plan: k_blocks must be 3 or 4");
    if (cfg.starts < 1) throw UsageError("optimize_plan: need at least one start");
    // validate the target parameters up front
    (void)log_delta(rho, sigma);

    detail::PlanObjective obj{rho, sigma, k_blocks};
    PartitionPlan symmetric = PartitionPlan::symmetric(rho, sigma, k_blocks);
    GrowthRate sym_rate = plan_rate(symmetric, rho);

    std::vector<std::vector<double>> seeds;
    seeds.push_back(detail::encode_plan(symmetric));
    {
        // heavy first block carrying most of the coordinates and set mass
        PartitionPlan heavy;
        std::vector<double> nus, rhos, sigmas;
        if (k_blocks == 3) {
            nus = {0.774, 0.113, 0.113};
            rhos = {0.770, 0.125, 0.105};
            sigmas = {0.560, 0.253, 0.187};
        } else {
            nus = {0.700, 0.100, 0.100, 0.100};
            rhos = {0.700, 0.110, 0.100, 0.090};
            sigmas = {0.520, 0.180, 0.160, 0.140};
        }
        for (int i = 0; i < k_blocks; ++i)
            heavy.blocks.push_back({nus[static_cast<size_t>(i)],
                                    rho * rhos[static_cast<size_t>(i)],
                                    sigma * sigmas[static_cast<size_t>(i)]});
        seeds.push_back(detail::encode_plan(heavy));
    }
    std::mt19937_64 rng(cfg.seed);
    auto random_simplex = [&](int k, double total) {
        std::vector<double> w(static_cast<size_t>(k));
        std::exponential_distribution<double> ed(1.0);
        double s = 0;
        for (auto& v : w) {
            v = ed(rng) + 1e-6;
            s += v;
        }
        for (auto& v : w) v *= total / s;
        return w;
    };
    while (static_cast<int>(seeds.size()) < cfg.starts) {
        PartitionPlan p;
        auto nus = random_simplex(k_blocks, 1.0);
        auto rhos = random_simplex(k_blocks, rho);
        auto sigmas = random_simplex(k_blocks, sigma);
        for (int i = 0; i < k_blocks; ++i)
            p.blocks.push_back({nus[static_cast<size_t>(i)], rhos[static_cast<size_t>(i)],
                                sigmas[static_cast<size_t>(i)]});
        seeds.push_back(detail::encode_plan(p));
    }

    NelderMeadOptions nm;
    nm.max_iterations = cfg.max_iterations;
    nm.x_tol = cfg.tol * 1e-2;
    nm.f_tol = cfg.tol * 1e-4;

    OptimizeResult res;
    res.starts = cfg.starts;
    res.seed = cfg.seed;
    res.symmetric_rate = sym_rate;
    res.c1_barrier = forbidden_intersection_base(rho, sigma, 1);

    double best = sym_rate.log_base;
    PartitionPlan best_plan = symmetric;
    for (const auto& s : seeds) {
        auto r = nelder_mead(obj, s, 0.02, nm);
        res.evaluations += r.evaluations;
        if (r.fx < best - 1e-13) {
            PartitionPlan cand = obj.decode(r.x);
            try {
                GrowthRate g = plan_rate(cand, rho, 1e-6);
                if (g.log_base < best) {
                    best = g.log_base;
                    best_plan = cand;
                }
            } catch (const DomainError&) {
                // penalty-region artifact; discard
            }
        }
    }
    res.plan = best_plan;
    res.rate = GrowthRate::from_log(best);
    res.improved_over_symmetric = best < sym_rate.log_base - 1e-12;
    return res;
}

struct PlanCertificate {
    std::uint64_t n = 0;
    std::uint64_t target = 0;          // r - s at this n
    PrimeSplit split;                  // one prime per block difference
    std::vector<double> proportions;   // intended block shares of r - s
};

// Finite-n realization of a three-block plan: the per-block set-minus-
// intersection differences must be primes, so split r - s proportionally.
inline PlanCertificate certify_plan(const PartitionPlan& plan, double rho, std::uint64_t n) {
    if (plan.blocks.size() != 3)
        throw UsageError("certify_plan: finite certificates need exactly three blocks");
    double sigma = plan.total_sigma();
    plan.validate(rho, sigma);
    double diff = rho - sigma;
    if (!(diff > 0)) throw DomainError("certify_plan: rho must exceed sigma");
    auto r = std::llround(rho * static_cast<double>(n));
    auto s = std::llround(sigma * static_cast<double>(n));
    auto target = static_cast<std::uint64_t>(r - s);
    if (target % 2 == 0)
        throw DomainError("certify_plan: the set-minus-intersection difference " +
                          std::to_string(target) + " is even at this dimension, so the "
                          "three-prime certificate does not apply; adjust n to make it odd");
    PlanCertificate cert;
    cert.n = n;
    cert.target = target;
    for (const auto& b : plan.blocks)
        cert.proportions.push_back((b.rho_share - b.sigma_share) / diff);
    std::array<double, 3> props{cert.proportions[0], cert.proportions[1], cert.proportions[2]};
    cert.split = proportional_prime_split(target, props);
    return cert;
}

struct ChainStep {
    std::string name;
    std::string detail;
    double log_rate_cost = 0.0;       // contribution to the final log base
    bool polynomial_absorbed = false; // step also costs a polynomial factor, dropped
};

struct SunflowerChain {
    int k = 0;
    double rho_local = 0.0;
    double sigma_local = 0.0;
    double prime_fraction = 0.0; // p / (n/k) in the limit
    std::vector<ChainStep> steps;
    GrowthRate final_rate;
};

// The reduction chain from weak-sunflower-free families to the k-wise clique
// bound, with each step's exponential cost. The final base is
// 2 * delta(1/2, sqrt2/4)^{1/k}.
inline SunflowerChain sunflower_chain(int k) {
    if (k < 3) throw UsageError("sunflower_chain: k must be >= 3");
    SunflowerChain ch;
    ch.k = k;
    ch.rho_local = 0.5;
    ch.sigma_local = std::numbers::sqrt2 / 4.0;
    ch.prime_fraction = (2.0 - std::numbers::sqrt2) / 4.0;

    ch.steps.push_back({"uniformize",
                        "keep the largest single-size bucket; at least 1/(n+1) of the family "
                        "survives",
                        0.0, true});
    ch.steps.push_back({"complement",
                        "replace members by complements when the bucket size exceeds n/2",
                        0.0, false});
    ch.steps.push_back({"shift",
                        "symmetric-difference shift onto half-size sets; costs "
                        "2^n / binom(n, n/2), a square-root factor",
                        0.0, true});
    ch.steps.push_back({"prime",
                        "largest prime p below (2 - sqrt2)/4 * n/k; local forbidden overlap "
                        "s = n/(2k) - p approaches (sqrt2/4) * (n/k), the minimizer of "
                        "delta(1/2, .)",
                        0.0, false});
    double clique_cost = std::numbers::ln2 +
                         log_delta(ch.rho_local, ch.sigma_local) / static_cast<double>(k);
    ch.steps.push_back({"clique",
                        "no k sets share pairwise overlap 2s + (k-2)r, so the k-wise bound at "
                        "local (1/2, sqrt2/4) with prime block difference applies; "
                        "binom(n, n/2) <= 2^n",
                        clique_cost, false});
    double total = 0.0;
    for (const auto& s : ch.steps) total += s.log_rate_cost;
    ch.final_rate = GrowthRate::from_log(total);
    return ch;
}

} // namespace ramsey
