#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ramsey {

enum class Norm { euclidean, manhattan };

inline const char* norm_name(Norm n) { return n == Norm::euclidean ? "euclidean" : "manhattan"; }

// Scaled k-semicross: the k+1 points {0, s_1 e_1, ..., s_k e_k} with all
// scalings strictly positive.
struct SemicrossSpec {
    int k = 0;
    std::vector<double> scalings;

    void validate() const {
        if (k < 1 || static_cast<int>(scalings.size()) != k)
            throw UsageError("SemicrossSpec: need k >= 1 scalings");
        for (double s : scalings)
            if (!(s > 0.0)) throw DomainError("SemicrossSpec: scalings must be positive");
    }
};

// Baton B(s_1, ..., s_m): collinear points 0, s_1, s_1+s_2, ... given by the
// consecutive gaps. An empty gap list is the degenerate single-point baton.
struct BatonSpec {
    std::vector<double> scalings;

    void validate() const {
        for (double s : scalings)
            if (!(s > 0.0)) throw DomainError("BatonSpec: gaps must be positive");
    }
};

enum class TriangleClass { right, acute, obtuse, degenerate };

// Classification on squared side lengths; `tol` is relative to the squared
// scale, so congruent triangles classify identically at any size.
inline TriangleClass classify_triangle(double a, double b, double c, double tol = 1e-9) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DomainError("classify_triangle: sides must be positive");
    double s[3] = {a, b, c};
    std::sort(s, s + 3);
    if (!(s[0] + s[1] > s[2] * (1.0 + 1e-15)))
        return TriangleClass::degenerate;
    double lhs = s[0] * s[0] + s[1] * s[1];
    double rhs = s[2] * s[2];
    double scale = s[2] * s[2];
    if (std::abs(lhs - rhs) <= tol * scale) return TriangleClass::right;
    return lhs > rhs ? TriangleClass::acute : TriangleClass::obtuse;
}

// Right triangle with legs (a, b): congruent to {0, a e_1, b e_2}, i.e. the
// 2-semicross scaled by (a, b). Input sides may come in any order; the
// largest is taken as the hypotenuse.
// Acute triangle: congruent to the three non-origin points of
// SC^3(l_1, l_2, l_3) with l_i^2 the half-excess of the squared sides.
// Obtuse triangles admit no such axis-aligned realization and are refused.
inline SemicrossSpec euclidean_triangle_to_semicross(double a, double b, double c,
                                                     double tol = 1e-9) {
    TriangleClass cls = classify_triangle(a, b, c, tol);
    if (cls == TriangleClass::degenerate)
        throw DomainError("euclidean_triangle_to_semicross: degenerate side lengths");
    if (cls == TriangleClass::obtuse)
        throw DomainError(
            "euclidean_triangle_to_semicross: obtuse triangles are not supported; the "
            "semicross realization needs further technical propositions beyond this library");
    if (cls == TriangleClass::right) {
        // legs = the two non-maximal sides, kept in input order
        double sides[3] = {a, b, c};
        int hyp = 0;
        for (int i = 1; i < 3; ++i)
            if (sides[i] > sides[hyp]) hyp = i;
        std::vector<double> legs;
        for (int i = 0; i < 3; ++i)
            if (i != hyp) legs.push_back(sides[i]);
        return SemicrossSpec{2, legs};
    }
    double l1 = std::sqrt((a * a + b * b - c * c) / 2.0);
    double l2 = std::sqrt((b * b + c * c - a * a) / 2.0);
    double l3 = std::sqrt((c * c + a * a - b * b) / 2.0);
    return SemicrossSpec{3, {l1, l2, l3}};
}

// Any triangle with strict triangle inequality embeds into l1 as the three
// non-origin points of SC^3((a+b-c)/2, (b+c-a)/2, (c+a-b)/2).
inline SemicrossSpec manhattan_triangle_to_semicross(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DomainError("manhattan_triangle_to_semicross: sides must be positive");
    double l1 = (a + b - c) / 2.0;
    double l2 = (b + c - a) / 2.0;
    double l3 = (c + a - b) / 2.0;
    if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
        throw DomainError("manhattan_triangle_to_semicross: triangle inequality must be strict");
    return SemicrossSpec{3, {l1, l2, l3}};
}

struct SimplexEmbedding {
    SemicrossSpec spec;
    double side = 0.0;          // realized common side length
    double unit_rescale = 1.0;  // multiply scalings by this for unit side
};

// Regular k-simplex: its k+1 vertices are the non-origin points of a
// (k+1)-semicross. Euclidean: unit scalings, pairwise distance sqrt(2).
// Manhattan: scalings 1/2, pairwise distance 1.
inline SimplexEmbedding simplex_to_semicross(int k, Norm norm) {
    if (k < 1) throw DomainError("simplex_to_semicross: k must be >= 1");
    if (norm == Norm::euclidean) {
        SimplexEmbedding e;
        e.spec = SemicrossSpec{k + 1, std::vector<double>(k + 1, 1.0)};
        e.side = std::sqrt(2.0);
        e.unit_rescale = 1.0 / std::sqrt(2.0);
        return e;
    }
    SimplexEmbedding e;
    e.spec = SemicrossSpec{k + 1, std::vector<double>(k + 1, 0.5)};
    e.side = 1.0;
    e.unit_rescale = 1.0;
    return e;
}

// A finite point set lies on the product grid of its per-coordinate value
// sets; coordinate d contributes the baton of consecutive gaps between its
// sorted distinct values. A coordinate taking a single value degenerates to
// the empty baton.
inline std::vector<BatonSpec> finite_set_to_grid(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw DomainError("finite_set_to_grid: empty point set");
    size_t dim = points.front().size();
    if (dim == 0) throw DomainError("finite_set_to_grid: points need at least one coordinate");
    for (const auto& p : points)
        if (p.size() != dim)
            throw DomainError("finite_set_to_grid: points have mixed dimensions");
    std::vector<BatonSpec> batons(dim);
    for (size_t d = 0; d < dim; ++d) {
        std::vector<double> vals;
        vals.reserve(points.size());
        for (const auto& p : points) vals.push_back(p[d]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (size_t i = 1; i < vals.size(); ++i)
            batons[d].scalings.push_back(vals[i] - vals[i - 1]);
    }
    return batons;
}

inline double point_distance(const std::vector<double>& p, const std::vector<double>& q,
                             Norm norm) {
    double acc = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double d = p[i] - q[i];
        acc += norm == Norm::euclidean ? d * d : std::abs(d);
    }
    return norm == Norm::euclidean ? std::sqrt(acc) : acc;
}

// Points realized by a semicross spec. With the origin: all k+1 points; the
// non-origin variant realizes configurations (triangles, simplices) whose
// vertices are the scaled axis points only.
inline std::vector<std::vector<double>> realize_semicross(const SemicrossSpec& spec,
                                                          bool include_origin) {
    spec.validate();
    std::vector<std::vector<double>> pts;
    if (include_origin) pts.emplace_back(spec.k, 0.0);
    for (int i = 0; i < spec.k; ++i) {
        std::vector<double> p(spec.k, 0.0);
        p[i] = spec.scalings[i];
        pts.push_back(std::move(p));
    }
    return pts;
}

// True iff the realized pairwise distances match `expected` entrywise within
// `tol`. The matrix dimension picks the realized point set: (k+1) x (k+1)
// compares against origin + axis points in that order, k x k against the
// axis points only. Any other dimension is a usage error.
inline bool validate_embedding(const SemicrossSpec& spec,
                               const std::vector<std::vector<double>>& expected, Norm norm,
                               double tol = 1e-12) {
    spec.validate();
    size_t m = expected.size();
    for (const auto& row : expected)
        if (row.size() != m) throw UsageError("validate_embedding: expected matrix not square");
    bool with_origin;
    if (m == static_cast<size_t>(spec.k) + 1)
        with_origin = true;
    else if (m == static_cast<size_t>(spec.k))
        with_origin = false;
    else
        throw UsageError("validate_embedding: matrix dimension must be k or k+1");
    auto pts = realize_semicross(spec, with_origin);
    for (size_t i = 0; i < m; ++i) {
        if (std::abs(expected[i][i]) > tol) return false;
        for (size_t j = i + 1; j < m; ++j) {
            if (std::abs(expected[i][j] - expected[j][i]) > tol) return false;
            double d = point_distance(pts[i], pts[j], norm);
            if (std::abs(d - expected[i][j]) > tol) return false;
        }
    }
    return true;
}

// Convenience for triangles: does the realized 3-point set have side multiset
// {a, b, c}? SC^2 realizes the triangle with the origin, SC^3 without it.
inline bool validate_triangle_embedding(const SemicrossSpec& spec, double a, double b, double c,
                                        Norm norm, double tol = 1e-12) {
    spec.validate();
    std::vector<std::vector<double>> pts;
    if (spec.k == 2)
        pts = realize_semicross(spec, true);
    else if (spec.k == 3)
        pts = realize_semicross(spec, false);
    else
        throw UsageError("validate_triangle_embedding: spec must be SC^2 or SC^3");
    double got[3] = {point_distance(pts[0], pts[1], norm), point_distance(pts[0], pts[2], norm),
                     point_distance(pts[1], pts[2], norm)};
    double want[3] = {a, b, c};
    std::sort(got, got + 3);
    std::sort(want, want + 3);
    for (int i = 0; i < 3; ++i)
        if (std::abs(got[i] - want[i]) > tol) return false;
    return true;
}

} // namespace ramsey
