#include "mkv/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace mkv::stats {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("stats::mean: empty input");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("stats::variance: need n >= 2");
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(n - 1);
}

double standard_error(std::span<const double> xs) {
    return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

double skewness(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("stats::skewness: need n >= 3");
    const double m = mean(xs);
    double s2 = 0.0, s3 = 0.0;
    for (double x : xs) {
        const double d = x - m;
        s2 += d * d;
        s3 += d * d * d;
    }
    s2 /= static_cast<double>(n);
    s3 /= static_cast<double>(n);
    return s3 / std::pow(s2, 1.5);
}

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p outside (0,1)");
    // Acklam's algorithm.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= phigh) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley refinement step.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

double z_one_sided(double confidence) { return normal_quantile(confidence); }

double z_two_sided(double confidence) { return normal_quantile(0.5 + confidence / 2.0); }

double z_one_sided_bonferroni(double confidence, int k) {
    if (k < 1) throw std::invalid_argument("bonferroni: k >= 1 required");
    const double alpha = (1.0 - confidence) / static_cast<double>(k);
    return normal_quantile(1.0 - alpha);
}

double z_two_sided_bonferroni(double confidence, int k) {
    if (k < 1) throw std::invalid_argument("bonferroni: k >= 1 required");
    const double alpha = (1.0 - confidence) / static_cast<double>(k);
    return normal_quantile(1.0 - alpha / 2.0);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("fit_line: size mismatch or n < 2");
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        rss += r * r;
    }
    f.residual = std::sqrt(rss / static_cast<double>(n));
    return f;
}

LineFit fit_loglog(std::span<const double> h, std::span<const double> err) {
    std::vector<double> lx(h.size()), ly(err.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!(h[i] > 0.0) || !(err[i] > 0.0))
            throw std::invalid_argument("fit_loglog: nonpositive entry");
        lx[i] = std::log(h[i]);
        ly[i] = std::log(err[i]);
    }
    return fit_line(lx, ly);
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("regression_slope: bad sizes");
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

PairedMargin paired_margin(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("paired_margin: bad sizes");
    std::vector<double> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = y[i] - x[i];
    PairedMargin m;
    m.estimate = mean(d);
    m.stderr_ = standard_error(d);
    return m;
}

PairedMargin unpaired_margin(std::span<const double> x, std::span<const double> y) {
    PairedMargin m;
    m.estimate = mean(y) - mean(x);
    m.stderr_ = std::sqrt(variance(x) / static_cast<double>(x.size()) +
                          variance(y) / static_cast<double>(y.size()));
    return m;
}

}  // namespace mkv::stats
