#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mkv/rng.hpp"
#include "mkv/time_grid.hpp"

namespace mkv {

// Finite-support probability measure on R^d: K atoms with nonnegative weights
// summing to one (within 1e-12). Immutable after construction.
class DiscreteMeasure {
  public:
    DiscreteMeasure(Eigen::MatrixXd support, Eigen::VectorXd weights);

    static DiscreteMeasure dirac(const Eigen::VectorXd& x);
    static DiscreteMeasure dirac1(double x);
    // Equal-weight empirical measure from sample rows.
    static DiscreteMeasure from_samples(const Eigen::MatrixXd& rows);
    static DiscreteMeasure two_point(double a, double b, double weight_a = 0.5);

    int size() const { return static_cast<int>(weights_.size()); }
    int dim() const { return static_cast<int>(support_.cols()); }
    const Eigen::MatrixXd& support() const { return support_; }
    const Eigen::VectorXd& weights() const { return weights_; }

    Eigen::VectorXd mean() const;
    double raw_abs_moment(double p) const;  // sum_k w_k |x_k|^p
    double second_moment() const { return raw_abs_moment(2.0); }

    // Merges atoms closer than tol (Euclidean); keeps LP bases nondegenerate.
    DiscreteMeasure deduplicated(double tol = 1e-12) const;

    // Projection onto a direction (d-vector) as a 1-d measure.
    DiscreteMeasure project(const Eigen::VectorXd& direction) const;

  private:
    Eigen::MatrixXd support_;
    Eigen::VectorXd weights_;
};

// Exact W_p in dimension 1 via the quantile coupling on the merged weight
// partition. Throws DimensionError if either measure has d != 1.
double wasserstein_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p);

// Exact W_p in any dimension via the transportation simplex on the dense
// |x-y|^p cost matrix. Guarded at K_mu * K_nu <= 1e6 (TooLargeError beyond;
// use sliced_wasserstein instead).
double wasserstein_exact(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p);

// Exact OT with the optimal plan attached (row i of plan transports mu atom i).
struct TransportSolution {
    double cost = 0.0;  // W_p (already the p-th root)
    Eigen::MatrixXd plan;
};
TransportSolution wasserstein_exact_plan(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                         double p);

// Monte Carlo sliced Wasserstein for d >= 2: root-p mean of projected 1-d
// distances over random unit directions, rescaled by the p-th absolute moment
// of a sphere coordinate so that translations are reproduced exactly.
struct SlicedResult {
    double value = 0.0;
    double stderr_ = 0.0;  // delta-method stderr over direction sampling
};
SlicedResult sliced_wasserstein_full(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                     double p, int n_directions, const StreamSpec& spec);
double sliced_wasserstein(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p,
                          int n_directions, const StreamSpec& spec);

// lambda*mu + (1-lambda)*nu as one measure; exact duplicate atoms merged.
DiscreteMeasure mixture(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double lambda);

// One measure per grid node.
struct MeasurePath {
    TimeGrid grid;
    std::vector<DiscreteMeasure> measures;
};

// sup over grid nodes of W_p; exact in d=1 or when the LP guard admits the
// pair, sliced otherwise.
double path_distance_dc(const MeasurePath& a, const MeasurePath& b, double p,
                        const StreamSpec& spec = {});

// (sum_k w_k |x_k|^p)^{1/p} == W_p(mu, delta_0).
double moment(const DiscreteMeasure& mu, double p);

// Splits every atom into x +/- scale*e (e a seeded unit direction; +/-1 in
// d=1) with half the weight each. Keeps the mean, dominates mu in convex
// order by construction.
DiscreteMeasure mean_preserving_spread(const DiscreteMeasure& mu, double scale,
                                       const StreamSpec& spec);

}  // namespace mkv
