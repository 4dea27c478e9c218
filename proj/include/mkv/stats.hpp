#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mkv::stats {

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased, needs n >= 2
double standard_error(std::span<const double> xs);
double skewness(std::span<const double> xs);

// Standard normal density / CDF / quantile (Acklam's rational approximation,
// refined by one Halley step; |error| < 1e-12 over (0,1)).
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

// One-sided and two-sided z thresholds for a confidence level in (0,1).
double z_one_sided(double confidence);
double z_two_sided(double confidence);

// Bonferroni-adjusted one-sided z threshold for k simultaneous tests.
double z_one_sided_bonferroni(double confidence, int k);
double z_two_sided_bonferroni(double confidence, int k);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS of residuals
};

// Least squares y ~ slope*x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Log-log fit for rate studies: log(err) ~ slope*log(h) + c.
LineFit fit_loglog(std::span<const double> h, std::span<const double> err);

// OLS slope of y on x (no intercept removed: slope = cov(x,y)/var(x)).
double regression_slope(std::span<const double> x, std::span<const double> y);

// Mean and standard error of a paired difference y - x.
struct PairedMargin {
    double estimate = 0.0;
    double stderr_ = 0.0;
};
PairedMargin paired_margin(std::span<const double> x, std::span<const double> y);
PairedMargin unpaired_margin(std::span<const double> x, std::span<const double> y);

}  // namespace mkv::stats
