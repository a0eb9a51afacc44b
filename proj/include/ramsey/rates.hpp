#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace ramsey {

// Domain checks use strict inequalities with this slack unless the caller
// overrides it.
inline constexpr double kDomainTol = 1e-9;

// Binary entropy in nats, H(x) = -x ln x - (1-x) ln(1-x), with H(0) = H(1) = 0.
inline double entropy(double x) {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw DomainError("entropy: argument " + std::to_string(x) + " outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

// Scaled parameters of an intersection-avoiding family: a family of r-sets on
// [n] avoiding pairwise intersection size s has rho = r/n, sigma = s/n.
// c_class is 1 when r-s behaves like a prime power, else 3 (r-s odd) or
// 4 (r-s even).
struct RateParams {
    double rho = 0.0;
    double sigma = 0.0;
    int c_class = 1;
};

// log of the per-coordinate decay factor delta(rho, sigma) of a
// sigma-avoiding rho-uniform family, relative to the full slice.
// Requires 0 < sigma < rho <= 1/2; parameters with rho > 1/2 must be
// complement-reduced first (see complement_params).
inline double log_delta(double rho, double sigma, double tol = kDomainTol) {
    if (!(sigma > tol))
        throw DomainError("delta: sigma must be strictly positive");
    if (!(rho - sigma > tol))
        throw DomainError("delta: sigma must be strictly below rho");
    if (rho > 0.5 + tol)
        throw DomainError("delta: rho above 1/2, complement-reduce the parameters first");
    rho = std::min(rho, 0.5);
    if (sigma < rho / 2.0)
        return entropy(rho - sigma) - entropy(rho);
    return entropy(rho - sigma) - entropy(2.0 * (rho - sigma));
}

inline double delta(double rho, double sigma, double tol = kDomainTol) {
    return std::exp(log_delta(rho, sigma, tol));
}

// Complement reduction (rho, sigma) -> (1-rho, 1-2rho+sigma): replacing every
// set by its complement turns r-sets avoiding s into (n-r)-sets avoiding
// n-2r+s. The map is an involution; it is the canonical way to bring
// rho > 1/2 into delta's domain.
inline RateParams complement_params(const RateParams& p, double tol = kDomainTol) {
    if (!(p.rho > tol) || !(p.rho < 1.0 - tol))
        throw DomainError("complement_params: rho must lie strictly inside (0,1)");
    if (!(p.sigma > tol) || !(p.sigma < p.rho - tol))
        throw DomainError("complement_params: sigma must lie strictly inside (0,rho)");
    double rho2 = 1.0 - p.rho;
    double sigma2 = 1.0 - 2.0 * p.rho + p.sigma;
    if (!(sigma2 > tol))
        throw DomainError("complement_params: mapped sigma " + std::to_string(sigma2) +
                          " is not positive; parameters have no complement reduction");
    return RateParams{rho2, sigma2, p.c_class};
}

inline RateParams complement_params(double rho, double sigma, double tol = kDomainTol) {
    return complement_params(RateParams{rho, sigma, 1}, tol);
}

// delta after complement-reducing any rho > 1/2. Used where block-local
// parameters may land on either side of 1/2.
inline double log_delta_reduced(double rho, double sigma, double tol = kDomainTol) {
    if (rho > 0.5 + tol) {
        RateParams q = complement_params(rho, sigma, tol);
        return log_delta(q.rho, q.sigma, tol);
    }
    return log_delta(rho, sigma, tol);
}

} // namespace ramsey
