#pragma once

#include <cmath>

#include "errors.hpp"

namespace ramsey {

// Per-dimension exponential growth rate of a sequence a_n = base^{(1+o(1))n}.
// Stored as the natural log of the base; the sign convention is that positive
// log_base means growth (base > 1) and negative means decay (base < 1).
struct GrowthRate {
    double log_base = 0.0;

    double base() const { return std::exp(log_base); }

    static GrowthRate from_base(double b) {
        if (!(b > 0.0)) throw DomainError("GrowthRate: base must be positive");
        return GrowthRate{std::log(b)};
    }
    static GrowthRate from_log(double lb) {
        if (!std::isfinite(lb)) throw DomainError("GrowthRate: log base must be finite");
        return GrowthRate{lb};
    }

    // rate of a_n * b_n
    GrowthRate operator*(const GrowthRate& o) const { return GrowthRate{log_base + o.log_base}; }
    // rate of a_n^{1/d} per dimension
    GrowthRate root(double d) const {
        if (!(d > 0.0)) throw DomainError("GrowthRate: root index must be positive");
        return GrowthRate{log_base / d};
    }
};

} // namespace ramsey
