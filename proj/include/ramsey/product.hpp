#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"
#include "growth_rate.hpp"

namespace ramsey {

// Witness parameters carried along the product construction: epsilon is the
// exponential color-count margin, c the polynomial slack base, m the number
// of points of the configuration.
struct SuperRamseyParams {
    double epsilon = 0.0;
    double c = 1.0;
    long long m = 1;

    void validate() const {
        if (!(epsilon >= 0.0)) throw DomainError("SuperRamseyParams: epsilon must be >= 0");
        if (!(c >= 1.0)) throw DomainError("SuperRamseyParams: c must be >= 1");
        if (m < 1) throw DomainError("SuperRamseyParams: m must be >= 1");
    }
};

// Optimal split exponent for composing two super-Ramsey witnesses:
// eta = ln(1+eps1) / ln((1+eps1)(1+eps2) c2^{m2-1}). The second factor's
// dimension share is eta; at this eta the two loss terms of the union bound
// decay at the same rate.
inline double optimal_eta(const SuperRamseyParams& p1, const SuperRamseyParams& p2) {
    p1.validate();
    p2.validate();
    double log_den = std::log1p(p1.epsilon) + std::log1p(p2.epsilon) +
                     static_cast<double>(p2.m - 1) * std::log(p2.c);
    if (!(log_den > 0.0))
        throw DomainError("optimal_eta: degenerate parameters, denominator log is not positive");
    return std::log1p(p1.epsilon) / log_den;
}

struct ComposedProduct {
    SuperRamseyParams params;     // witness for the product configuration
    double eta = 0.0;             // dimension share given to the second factor
    GrowthRate base;              // (1+eps')  as a growth rate
    double summand_log_rate_1 = 0.0;  // per-n log of the (1+eps2)^{-n2} term
    double summand_log_rate_2 = 0.0;  // per-n log of the c2^{(m2-1)n2}/(1+eps1)^{n1} term
};

// Compose two super-Ramsey witnesses into one for the product configuration:
// eps' from (1+eps') = (1+eps2)^eta, c' = c1^{1-eta} c2^eta, m' = m1 m2.
inline ComposedProduct composed_rate(const SuperRamseyParams& p1, const SuperRamseyParams& p2) {
    double eta = optimal_eta(p1, p2);
    ComposedProduct out;
    out.eta = eta;
    out.base = GrowthRate::from_log(eta * std::log1p(p2.epsilon));
    out.params.epsilon = std::expm1(eta * std::log1p(p2.epsilon));
    out.params.c = std::exp((1.0 - eta) * std::log(p1.c) + eta * std::log(p2.c));
    out.params.m = p1.m * p2.m;
    out.summand_log_rate_1 = -eta * std::log1p(p2.epsilon);
    out.summand_log_rate_2 = eta * static_cast<double>(p2.m - 1) * std::log(p2.c) -
                             (1.0 - eta) * std::log1p(p1.epsilon);
    return out;
}

// Naive k-fold iterated composition of a configuration with itself,
// left-folding composed_rate. Lets callers compare chained products against
// the direct concatenation rates.
inline ComposedProduct iterated_rate(const SuperRamseyParams& p, int k) {
    if (k < 1) throw DomainError("iterated_rate: k must be >= 1");
    p.validate();
    ComposedProduct acc;
    acc.params = p;
    acc.eta = 1.0;
    acc.base = GrowthRate::from_log(std::log1p(p.epsilon));
    for (int i = 1; i < k; ++i) acc = composed_rate(acc.params, p);
    return acc;
}

} // namespace ramsey
