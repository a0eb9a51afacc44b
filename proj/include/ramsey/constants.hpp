#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "embeddings.hpp"
#include "errors.hpp"
#include "growth_rate.hpp"

namespace ramsey {

namespace detail {

inline double rational_objective(double x) {
    double x2 = x * x;
    return (1.0 + x + x * x2) / (1.0 + x2 + x2 * x2);
}

struct Psi2Value {
    double value;
    double argmax;
};

// sup over [0,1] of (1+x+x^3)/(1+x^2+x^4): coarse scan to bracket the peak,
// golden-section to 1e-9 in x, then one parabolic fit through the final
// bracket. Never hard-coded; the scan makes no unimodality assumption.
inline Psi2Value compute_psi2() {
    const int grid = 4096;
    int best_i = 0;
    double best_f = -1.0;
    for (int i = 0; i <= grid; ++i) {
        double x = static_cast<double>(i) / grid;
        double f = rational_objective(x);
        if (f > best_f) {
            best_f = f;
            best_i = i;
        }
    }
    double lo = std::max(0.0, (best_i - 1.0) / grid);
    double hi = std::min(1.0, (best_i + 1.0) / grid);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = rational_objective(c);
    double fd = rational_objective(d);
    while (b - a > 1e-9) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = rational_objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = rational_objective(d);
        }
    }
    double xm = (a + b) / 2.0;
    // final quadratic fit: vertex of the parabola through (a, xm, b)
    double fa = rational_objective(a), fm = rational_objective(xm), fb = rational_objective(b);
    double num = (xm - a) * (xm - a) * (fm - fb) - (xm - b) * (xm - b) * (fm - fa);
    double den = (xm - a) * (fm - fb) - (xm - b) * (fm - fa);
    double xq = den != 0.0 ? xm - 0.5 * num / den : xm;
    if (!(xq >= a && xq <= b)) xq = xm;
    double fq = rational_objective(xq);
    if (fq < fm) {
        xq = xm;
        fq = fm;
    }
    return Psi2Value{fq, xq};
}

inline const Psi2Value& psi2_memo() {
    static const Psi2Value v = compute_psi2();  // thread-safe, computed once
    return v;
}

} // namespace detail

// Base for two-point configurations in the euclidean norm.
inline double psi2() { return detail::psi2_memo().value; }
inline double psi2_argmax() { return detail::psi2_memo().argmax; }

// Base for two-point configurations in the manhattan norm, (1+sqrt 3)/2.
inline double psi1() { return (1.0 + std::sqrt(3.0)) / 2.0; }

// Weak-sunflower constant (1+sqrt 2)/2; equals 1/delta(1/2, sqrt2/4).
inline double psi() { return (1.0 + std::sqrt(2.0)) / 2.0; }

inline GrowthRate named_constant(std::string_view name) {
    if (name == "psi2") return GrowthRate::from_base(psi2());
    if (name == "psi1") return GrowthRate::from_base(psi1());
    if (name == "psi") return GrowthRate::from_base(psi());
    throw UsageError("named_constant: unknown name '" + std::string(name) +
                     "' (expected psi, psi1, psi2)");
}

// Forbidden geometric configuration for chromatic lower bounds.
struct ForbiddenConfig {
    enum class Kind { two_point, simplex, semicross, right_triangle, acute_triangle,
                      general_triangle, baton };

    Kind kind = Kind::two_point;
    Norm norm = Norm::euclidean;
    int k = 1;                      // simplex/semicross order
    std::vector<double> scalings;   // semicross arms or baton gaps
    double a = 0.0, b = 0.0, c = 0.0;  // triangle sides / right-triangle legs

    static ForbiddenConfig two_point(Norm n) { return {Kind::two_point, n, 1, {}, 0, 0, 0}; }
    static ForbiddenConfig simplex(int k, Norm n) { return {Kind::simplex, n, k, {}, 0, 0, 0}; }
    static ForbiddenConfig semicross(int k, Norm n, std::vector<double> s = {}) {
        if (s.empty()) s.assign(static_cast<size_t>(k > 0 ? k : 0), 1.0);
        return {Kind::semicross, n, k, std::move(s), 0, 0, 0};
    }
    static ForbiddenConfig right_triangle(double a, double b) {
        return {Kind::right_triangle, Norm::euclidean, 2, {}, a, b, 0};
    }
    static ForbiddenConfig acute_triangle(double a, double b, double c) {
        return {Kind::acute_triangle, Norm::euclidean, 3, {}, a, b, c};
    }
    static ForbiddenConfig manhattan_triangle(double a, double b, double c) {
        return {Kind::general_triangle, Norm::manhattan, 3, {}, a, b, c};
    }
    static ForbiddenConfig baton(std::vector<double> gaps) {
        return {Kind::baton, Norm::manhattan, static_cast<int>(gaps.size()), std::move(gaps),
                0, 0, 0};
    }
};

// Lower-bound base for the chromatic number of n-space with the given
// configuration forbidden monochromatic: chi >= (base + o(1))^n.
inline GrowthRate chromatic_base(const ForbiddenConfig& cfg) {
    const double two_point_base = cfg.norm == Norm::euclidean ? psi2() : psi1();
    switch (cfg.kind) {
        case ForbiddenConfig::Kind::two_point:
            return GrowthRate::from_base(two_point_base);
        case ForbiddenConfig::Kind::simplex: {
            if (cfg.k < 1) throw DomainError("chromatic_base: simplex needs k >= 1");
            return GrowthRate::from_base(two_point_base).root(cfg.k + 1);
        }
        case ForbiddenConfig::Kind::semicross: {
            if (cfg.k < 1) throw DomainError("chromatic_base: semicross needs k >= 1");
            SemicrossSpec spec{cfg.k, cfg.scalings};
            spec.validate();
            return GrowthRate::from_base(two_point_base).root(cfg.k);
        }
        case ForbiddenConfig::Kind::right_triangle: {
            if (cfg.norm != Norm::euclidean)
                throw DomainError(
                    "chromatic_base: right-triangle kind is euclidean; use the manhattan "
                    "general-triangle kind instead");
            if (!(cfg.a > 0.0) || !(cfg.b > 0.0))
                throw DomainError("chromatic_base: right triangle needs positive legs");
            return GrowthRate::from_base(psi2()).root(2);
        }
        case ForbiddenConfig::Kind::acute_triangle: {
            if (cfg.norm != Norm::euclidean)
                throw DomainError(
                    "chromatic_base: acute-triangle kind is euclidean; use the manhattan "
                    "general-triangle kind instead");
            // validates acuteness, throws for obtuse/degenerate inputs
            SemicrossSpec spec = euclidean_triangle_to_semicross(cfg.a, cfg.b, cfg.c);
            return GrowthRate::from_base(psi2()).root(spec.k);
        }
        case ForbiddenConfig::Kind::general_triangle: {
            if (cfg.norm != Norm::manhattan)
                throw DomainError(
                    "chromatic_base: general triangles are supported in the manhattan norm only");
            manhattan_triangle_to_semicross(cfg.a, cfg.b, cfg.c);  // validates
            return GrowthRate::from_base(psi1()).root(3);
        }
        case ForbiddenConfig::Kind::baton: {
            if (cfg.norm != Norm::manhattan)
                throw DomainError("chromatic_base: batons are supported in the manhattan norm only");
            BatonSpec spec{cfg.scalings};
            spec.validate();
            if (spec.scalings.empty())
                throw DomainError("chromatic_base: baton needs at least one gap");
            return GrowthRate::from_base(psi1()).root(static_cast<int>(spec.scalings.size()));
        }
    }
    throw UsageError("chromatic_base: unhandled configuration kind");
}

// Upper-bound base for families of subsets of [n] with no weak k-sunflower:
// |F| <= (2 psi^{-1/k} + o(1))^n.
inline GrowthRate sunflower_base(int k) {
    if (k < 3) throw DomainError("sunflower_base: weak sunflowers need k >= 3");
    return GrowthRate::from_log(std::log(2.0) - std::log(psi()) / k);
}

// log of the chromatic lower bound for the unit k-semicross in euclidean
// n-space: n ln(psi2) - ln(k). Values <= 0 mean the bound is trivial at this
// (n, k).
inline double semicross_chromatic_log(long long n, long long k) {
    if (n < 1 || k < 1) throw DomainError("semicross_chromatic_log: need n >= 1, k >= 1");
    return static_cast<double>(n) * std::log(psi2()) - std::log(static_cast<double>(k));
}

// Largest simplex order k(n) for which the chromatic bound stays exponential
// with margin eps: floor((ln psi2 - eps) n / ln n). Requires 0 < eps < ln psi2.
inline long long simplex_dimension_threshold(long long n, double eps) {
    if (n < 3) throw DomainError("simplex_dimension_threshold: need n >= 3");
    double lp = std::log(psi2());
    if (!(eps > 0.0) || !(eps < lp))
        throw DomainError("simplex_dimension_threshold: eps must lie in (0, ln psi2)");
    return static_cast<long long>(
        std::floor((lp - eps) * static_cast<double>(n) / std::log(static_cast<double>(n))));
}

} // namespace ramsey
