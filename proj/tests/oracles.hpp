#pragma once

// Closed-form oracles used by the test suites. Everything here is derived
// independently of the library code paths it checks.

#include <cmath>

namespace oracles {

inline double normal_pdf(double x) {
    return 0.3989422804014326779 * std::exp(-0.5 * x * x);
}

inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

// E(X - k)^+ for X ~ N(mean, sd^2) (Bachelier form).
inline double gaussian_call(double mean, double sd, double k) {
    if (sd <= 0.0) return std::max(0.0, mean - k);
    const double d = (mean - k) / sd;
    return (mean - k) * normal_cdf(d) + sd * normal_pdf(d);
}

// E|X| for X ~ N(mean, sd^2).
inline double gaussian_abs(double mean, double sd) {
    if (sd <= 0.0) return std::abs(mean);
    const double r = mean / sd;
    return sd * std::sqrt(2.0 / M_PI) * std::exp(-0.5 * r * r) +
           mean * (1.0 - 2.0 * normal_cdf(-r));
}

// Black-Scholes call on a lognormal terminal value with spot x0, vol s,
// horizon T, strike k, zero rates.
inline double lognormal_call(double x0, double s, double T, double k) {
    if (s <= 0.0 || T <= 0.0) return std::max(0.0, x0 - k);
    const double sv = s * std::sqrt(T);
    const double d1 = (std::log(x0 / k) + 0.5 * sv * sv) / sv;
    return x0 * normal_cdf(d1) - k * normal_cdf(d1 - sv);
}

// W_2 between two Gaussians N(m1, s1^2), N(m2, s2^2) in dimension 1.
inline double gaussian_w2(double m1, double s1, double m2, double s2) {
    return std::sqrt((m1 - m2) * (m1 - m2) + (s1 - s2) * (s1 - s2));
}

// E(x + u Z)^+ for Z ~ N(0,1).
inline double shifted_call_at_zero(double x, double u) {
    return gaussian_call(x, std::abs(u), 0.0);
}

// Backward Riccati eta' = eta^2, eta(T) = c has solution 1/(1/c + T - t).
inline double riccati_square_solution(double t, double T, double c) {
    return 1.0 / (1.0 / c + T - t);
}

}  // namespace oracles
