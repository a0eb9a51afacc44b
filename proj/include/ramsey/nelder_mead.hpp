#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace ramsey {

struct NelderMeadOptions {
    int max_iterations = 2000;
    double x_tol = 1e-10;   // simplex diameter
    double f_tol = 1e-12;   // spread of values across the simplex
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

// Downhill simplex minimization (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). The objective may return +inf outside its domain.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& start, double step,
                                    const NelderMeadOptions& opt = {}) {
    size_t d = start.size();
    if (d == 0) throw UsageError("nelder_mead: need at least one dimension");
    NelderMeadResult res;
    std::vector<std::vector<double>> pts(d + 1, start);
    for (size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(d + 1);
    for (size_t i = 0; i <= d; ++i) {
        vals[i] = f(pts[i]);
        ++res.evaluations;
    }

    auto order = [&] {
        std::vector<size_t> idx(d + 1);
        for (size_t i = 0; i <= d; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> np(d + 1);
        std::vector<double> nv(d + 1);
        for (size_t i = 0; i <= d; ++i) {
            np[i] = pts[idx[i]];
            nv[i] = vals[idx[i]];
        }
        pts = std::move(np);
        vals = std::move(nv);
    };

    for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
        order();
        double diam = 0.0, spread = vals[d] - vals[0];
        for (size_t i = 0; i < d; ++i)
            diam = std::max(diam, std::abs(pts[d][i] - pts[0][i]));
        if (diam < opt.x_tol && spread < opt.f_tol && std::isfinite(vals[0])) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(d);

        auto along = [&](double t) {
            std::vector<double> p(d);
            for (size_t j = 0; j < d; ++j) p[j] = centroid[j] + t * (pts[d][j] - centroid[j]);
            return p;
        };

        auto reflected = along(-1.0);
        double fr = f(reflected);
        ++res.evaluations;
        if (fr < vals[0]) {
            auto expanded = along(-2.0);
            double fe = f(expanded);
            ++res.evaluations;
            if (fe < fr) {
                pts[d] = std::move(expanded);
                vals[d] = fe;
            } else {
                pts[d] = std::move(reflected);
                vals[d] = fr;
            }
            continue;
        }
        if (fr < vals[d - 1]) {
            pts[d] = std::move(reflected);
            vals[d] = fr;
            continue;
        }
        bool outside = fr < vals[d];
        auto contracted = along(outside ? -0.5 : 0.5);
        double fc = f(contracted);
        ++res.evaluations;
        if (fc < std::min(fr, vals[d])) {
            pts[d] = std::move(contracted);
            vals[d] = fc;
            continue;
        }
        for (size_t i = 1; i <= d; ++i) {
            for (size_t j = 0; j < d; ++j) pts[i][j] = 0.5 * (pts[i][j] + pts[0][j]);
            vals[i] = f(pts[i]);
            ++res.evaluations;
        }
    }
    order();
    res.x = pts[0];
    res.fx = vals[0];
    return res;
}

} // namespace ramsey
