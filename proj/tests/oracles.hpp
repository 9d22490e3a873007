#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: quadrature, bisection inversion, box-convolution densities and a
// brute-force KS scan. Deliberately slow and simple.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Composite Simpson on [a, b] with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n = 4096) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

inline double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / 1.4142135623730950488);
}

inline double std_normal_pdf(double x) {
    return 0.3989422804014326779 * std::exp(-0.5 * x * x);
}

// Inverts a monotone CDF by bisection to ~1e-13.
inline double bisect_quantile(const std::function<double(double)>& cdf, double p,
                              double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Density of t*Z1 + (1-t)*Z2 with Z ~ Uniform(-1,1), from the overlap length
// of the two convolved boxes rather than from any closed-form CDF.
inline double uniform_interp_density(double y, double t) {
    const double w1 = std::max(t, 1.0 - t);
    const double w2 = std::min(t, 1.0 - t);
    if (w2 <= 0.0) return (y >= -1.0 && y <= 1.0) ? 0.5 : 0.0;  // degenerate endpoint
    const double lo = std::max(-w1, y - w2);
    const double hi = std::min(w1, y + w2);
    const double overlap = std::max(0.0, hi - lo);
    return overlap / (2.0 * w1 * 2.0 * w2);
}

inline double uniform_interp_cdf(double y, double t, int n = 20000) {
    if (y <= -1.0) return 0.0;
    if (y >= 1.0) return 1.0;
    return simpson([t](double u) { return uniform_interp_density(u, t); }, -1.0, y, n);
}

// k-th raw moment of Uniform(-a, a) by quadrature.
inline double uniform_moment(int k, double a) {
    return simpson([k](double z) { return std::pow(z, k) * 0.5; }, -1.0, 1.0, 8192) *
           std::pow(a, k);
}

// k-th raw moment of N(0, sigma^2) by quadrature over +-12 sigma.
inline double gaussian_moment(int k, double sigma) {
    return simpson(
        [k, sigma](double z) {
            return std::pow(z, k) * std_normal_pdf(z / sigma) / sigma;
        },
        -12.0 * sigma, 12.0 * sigma, 16384);
}

// Brute-force one-sample KS: for every sample point, measure the empirical
// CDF gap just before and at the point by explicit counting. O(n^2).
inline double ks_brute(std::vector<double> samples,
                       const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double sup = 0.0;
    for (const double x : samples) {
        double le = 0.0, lt = 0.0;
        for (const double s : samples) {
            if (s <= x) le += 1.0;
            if (s < x) lt += 1.0;
        }
        const double f = cdf(x);
        sup = std::max(sup, std::fabs(le / n - f));
        sup = std::max(sup, std::fabs(lt / n - f));
    }
    return sup;
}

// Sup distance between the triangle CDF (uniform midpoint law) and the
// uniform CDF on [-1,1], located by a dense scan.
inline double triangle_uniform_ks() {
    double sup = 0.0;
    for (int i = 0; i <= 200000; ++i) {
        const double y = -1.0 + 2.0 * i / 200000.0;
        const double tri =
            y < 0.0 ? 0.5 * (y + 1.0) * (y + 1.0) : 1.0 - 0.5 * (1.0 - y) * (1.0 - y);
        const double uni = 0.5 * (y + 1.0);
        sup = std::max(sup, std::fabs(tri - uni));
    }
    return sup;
}

}  // namespace oracle
