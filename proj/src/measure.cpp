#include "mkv/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mkv/errors.hpp"
#include "mkv/lp.hpp"

namespace mkv {

namespace {

constexpr double kWeightTol = 1e-12;

void check_same_dim(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    if (mu.dim() != nu.dim()) throw DimensionError("measures have different dimensions");
}

double lgamma_half_ratio(double p, int d) {
    // E|<e, Theta>|^p for Theta uniform on S^{d-1}:
    // Gamma((p+1)/2) Gamma(d/2) / (Gamma(1/2) Gamma((d+p)/2)).
    return std::exp(std::lgamma((p + 1.0) / 2.0) + std::lgamma(d / 2.0) -
                    std::lgamma(0.5) - std::lgamma((d + p) / 2.0));
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(Eigen::MatrixXd support, Eigen::VectorXd weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
    if (support_.rows() != weights_.size())
        throw DimensionError("DiscreteMeasure: support/weight count mismatch");
    if (support_.rows() == 0) throw DomainError("DiscreteMeasure: empty support");
    if (!support_.allFinite()) throw DomainError("DiscreteMeasure: non-finite atom");
    if (weights_.minCoeff() < -kWeightTol) throw DomainError("DiscreteMeasure: negative weight");
    if (std::abs(weights_.sum() - 1.0) > kWeightTol)
        throw DomainError("DiscreteMeasure: weights must sum to 1");
}

DiscreteMeasure DiscreteMeasure::dirac(const Eigen::VectorXd& x) {
    Eigen::MatrixXd s(1, x.size());
    s.row(0) = x.transpose();
    return DiscreteMeasure(std::move(s), Eigen::VectorXd::Ones(1));
}

DiscreteMeasure DiscreteMeasure::dirac1(double x) {
    return dirac(Eigen::VectorXd::Constant(1, x));
}

DiscreteMeasure DiscreteMeasure::from_samples(const Eigen::MatrixXd& rows) {
    const int k = static_cast<int>(rows.rows());
    if (k == 0) throw DomainError("from_samples: empty sample");
    return DiscreteMeasure(rows, Eigen::VectorXd::Constant(k, 1.0 / k));
}

DiscreteMeasure DiscreteMeasure::two_point(double a, double b, double weight_a) {
    Eigen::MatrixXd s(2, 1);
    s << a, b;
    Eigen::VectorXd w(2);
    w << weight_a, 1.0 - weight_a;
    return DiscreteMeasure(std::move(s), std::move(w));
}

Eigen::VectorXd DiscreteMeasure::mean() const {
    return support_.transpose() * weights_;
}

double DiscreteMeasure::raw_abs_moment(double p) const {
    double s = 0.0;
    for (int k = 0; k < size(); ++k) s += weights_[k] * std::pow(support_.row(k).norm(), p);
    return s;
}

DiscreteMeasure DiscreteMeasure::deduplicated(double tol) const {
    std::vector<int> keep;
    std::vector<double> w;
    for (int k = 0; k < size(); ++k) {
        if (weights_[k] <= 0.0) continue;
        bool merged = false;
        for (std::size_t r = 0; r < keep.size(); ++r) {
            if ((support_.row(k) - support_.row(keep[r])).norm() <= tol) {
                w[r] += weights_[k];
                merged = true;
                break;
            }
        }
        if (!merged) {
            keep.push_back(k);
            w.push_back(weights_[k]);
        }
    }
    if (keep.empty()) throw DomainError("deduplicated: all weights zero");
    Eigen::MatrixXd s(keep.size(), dim());
    Eigen::VectorXd wv(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        s.row(r) = support_.row(keep[r]);
        wv[r] = w[r];
    }
    wv /= wv.sum();
    return DiscreteMeasure(std::move(s), std::move(wv));
}

DiscreteMeasure DiscreteMeasure::project(const Eigen::VectorXd& direction) const {
    if (direction.size() != dim()) throw DimensionError("project: direction dimension mismatch");
    Eigen::MatrixXd proj = support_ * direction;
    return DiscreteMeasure(std::move(proj), weights_);
}

double wasserstein_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
    if (mu.dim() != 1 || nu.dim() != 1) throw DimensionError("wasserstein_1d: d == 1 required");
    if (p < 1.0) throw DomainError("wasserstein_1d: p >= 1 required");

    const auto sorted_view = [](const DiscreteMeasure& m) {
        std::vector<int> idx(m.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return m.support()(a, 0) < m.support()(b, 0); });
        return idx;
    };
    const std::vector<int> ia = sorted_view(mu);
    const std::vector<int> ib = sorted_view(nu);

    // Quantile coupling on the merged weight partition.
    double cost = 0.0;
    std::size_t a = 0, b = 0;
    double ra = mu.weights()[ia[0]], rb = nu.weights()[ib[0]];
    while (a < ia.size() && b < ib.size()) {
        const double w = std::min(ra, rb);
        if (w > 0.0)
            cost += w * std::pow(std::abs(mu.support()(ia[a], 0) - nu.support()(ib[b], 0)), p);
        ra -= w;
        rb -= w;
        if (ra <= 1e-15) {
            if (++a < ia.size()) ra = mu.weights()[ia[a]];
        }
        if (rb <= 1e-15) {
            if (++b < ib.size()) rb = nu.weights()[ib[b]];
        }
    }
    return std::pow(cost, 1.0 / p);
}

TransportSolution wasserstein_exact_plan(const DiscreteMeasure& mu_in,
                                         const DiscreteMeasure& nu_in, double p) {
    check_same_dim(mu_in, nu_in);
    if (p < 1.0) throw DomainError("wasserstein_exact: p >= 1 required");
    const DiscreteMeasure mu = mu_in.deduplicated();
    const DiscreteMeasure nu = nu_in.deduplicated();
    const long size = static_cast<long>(mu.size()) * nu.size();
    if (size > 1000000L)
        throw TooLargeError("wasserstein_exact: K_mu*K_nu > 1e6; use sliced_wasserstein");

    Eigen::MatrixXd cost(mu.size(), nu.size());
    for (int i = 0; i < mu.size(); ++i)
        for (int j = 0; j < nu.size(); ++j)
            cost(i, j) = std::pow((mu.support().row(i) - nu.support().row(j)).norm(), p);

    lp::TransportResult r = lp::transport_simplex(mu.weights(), nu.weights(), cost);
    TransportSolution out;
    out.cost = std::pow(std::max(0.0, r.cost), 1.0 / p);
    out.plan = std::move(r.flow);
    return out;
}

double wasserstein_exact(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
    return wasserstein_exact_plan(mu, nu, p).cost;
}

SlicedResult sliced_wasserstein_full(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                     double p, int n_directions, const StreamSpec& spec) {
    check_same_dim(mu, nu);
    const int d = mu.dim();
    if (d < 2) throw DimensionError("sliced_wasserstein: d >= 2 required");
    if (n_directions < 2) throw DomainError("sliced_wasserstein: n_directions >= 2 required");

    const StreamSpec dir_spec = spec.with_tag(StreamTag::Directions);
    std::vector<double> powers(n_directions);
    for (int k = 0; k < n_directions; ++k) {
        const Eigen::VectorXd theta = unit_direction(dir_spec, d, k);
        powers[k] = std::pow(wasserstein_1d(mu.project(theta), nu.project(theta), p), p);
    }
    const double mean_power =
        std::accumulate(powers.begin(), powers.end(), 0.0) / n_directions;
    double var = 0.0;
    for (double v : powers) var += (v - mean_power) * (v - mean_power);
    var /= std::max(1, n_directions - 1);

    // Rescale by the p-th absolute moment of one sphere coordinate so a pure
    // translation by u comes out as exactly |u|.
    const double coord_moment = lgamma_half_ratio(p, d);
    SlicedResult out;
    out.value = std::pow(mean_power / coord_moment, 1.0 / p);
    if (mean_power > 0.0) {
        const double se_power = std::sqrt(var / n_directions);
        out.stderr_ = out.value * se_power / (p * mean_power);  // delta method
    }
    return out;
}

double sliced_wasserstein(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p,
                          int n_directions, const StreamSpec& spec) {
    return sliced_wasserstein_full(mu, nu, p, n_directions, spec).value;
}

DiscreteMeasure mixture(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double lambda) {
    check_same_dim(mu, nu);
    if (lambda < 0.0 || lambda > 1.0) throw DomainError("mixture: lambda in [0,1] required");
    if (lambda == 1.0) return mu;
    if (lambda == 0.0) return nu;
    Eigen::MatrixXd s(mu.size() + nu.size(), mu.dim());
    Eigen::VectorXd w(mu.size() + nu.size());
    s.topRows(mu.size()) = mu.support();
    s.bottomRows(nu.size()) = nu.support();
    w.head(mu.size()) = lambda * mu.weights();
    w.tail(nu.size()) = (1.0 - lambda) * nu.weights();
    return DiscreteMeasure(std::move(s), std::move(w)).deduplicated();
}

double path_distance_dc(const MeasurePath& a, const MeasurePath& b, double p,
                        const StreamSpec& spec) {
    if (a.measures.size() != b.measures.size() || a.grid.steps != b.grid.steps ||
        std::abs(a.grid.horizon - b.grid.horizon) > 1e-12 * std::max(1.0, a.grid.horizon))
        throw GridMismatchError("path_distance_dc: grids differ");
    double sup = 0.0;
    for (std::size_t m = 0; m < a.measures.size(); ++m) {
        const DiscreteMeasure& x = a.measures[m];
        const DiscreteMeasure& y = b.measures[m];
        double w;
        if (x.dim() == 1) {
            w = wasserstein_1d(x, y, p);
        } else if (static_cast<long>(x.size()) * y.size() <= 250000L) {
            w = wasserstein_exact(x, y, p);
        } else {
            w = sliced_wasserstein(x, y, p, 64, spec);
        }
        sup = std::max(sup, w);
    }
    return sup;
}

double moment(const DiscreteMeasure& mu, double p) {
    if (p < 1.0) throw DomainError("moment: p >= 1 required");
    return std::pow(mu.raw_abs_moment(p), 1.0 / p);
}

DiscreteMeasure mean_preserving_spread(const DiscreteMeasure& mu, double scale,
                                       const StreamSpec& spec) {
    if (scale < 0.0) throw DomainError("mean_preserving_spread: scale >= 0 required");
    if (scale == 0.0) return mu;
    const StreamSpec kick = spec.with_tag(StreamTag::Spread);
    Eigen::MatrixXd s(2 * mu.size(), mu.dim());
    Eigen::VectorXd w(2 * mu.size());
    for (int k = 0; k < mu.size(); ++k) {
        Eigen::VectorXd e = mu.dim() == 1 ? Eigen::VectorXd::Ones(1)
                                          : unit_direction(kick, mu.dim(), k);
        s.row(2 * k) = mu.support().row(k) + scale * e.transpose();
        s.row(2 * k + 1) = mu.support().row(k) - scale * e.transpose();
        w[2 * k] = 0.5 * mu.weights()[k];
        w[2 * k + 1] = 0.5 * mu.weights()[k];
    }
    return DiscreteMeasure(std::move(s), std::move(w)).deduplicated();
}

}  // namespace mkv
