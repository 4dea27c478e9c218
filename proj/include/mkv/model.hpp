#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

#include "mkv/measure.hpp"
#include "mkv/rng.hpp"

namespace mkv {

enum class MeasureSummaryKind { none, mean, pth_moment, full_empirical };

// What a coefficient is allowed to see of the current law. Concrete presets
// depend on the law through finitely many statistics; full_empirical keeps
// the particle scheme general.
struct MeasureSummary {
    Eigen::VectorXd mean;
    double m2 = 0.0;   // raw second moment E|X|^2
    double pth = 0.0;  // raw p-th absolute moment
    double p = 2.0;
    const DiscreteMeasure* full = nullptr;

    static MeasureSummary of(const DiscreteMeasure& mu, double p);
    static MeasureSummary of_states(const Eigen::MatrixXd& states, double p);
    static MeasureSummary point(const Eigen::VectorXd& x, double p);
};

// Drift b(t,x,mu) = alpha(t) x + beta(t, mean(mu)): affine in the state,
// touching the law only through its mean.
struct DriftSpec {
    std::function<Eigen::MatrixXd(double)> alpha;                              // t -> d x d
    std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> beta;       // (t, mean) -> d
    double holder_exponent = 1.0;

    Eigen::VectorXd value(double t, const Eigen::VectorXd& x, const MeasureSummary& s) const {
        return alpha(t) * x + beta(t, s.mean);
    }
    static DriftSpec zero(int d);
    // alpha(t) = a*I, beta(t, m) = b_mean*m + c (all scalars broadcast in d=1).
    static DriftSpec affine1(double a, double b_mean, double c);
};

// Diffusion coefficient with declared structure flags. Presets are evaluated
// through a switch on `kind`; `custom` carries arbitrary callables for tests.
struct DiffusionSpec {
    std::string kind;
    Eigen::VectorXd params;
    MeasureSummaryKind summary_kind = MeasureSummaryKind::none;
    bool convex_in_x = false;
    bool monotone_in_law = false;
    double growth_bound = 1.0;  // declared C with |sigma| <= C(1+|x|+W_p(mu,d0))
    double lipschitz_bound = 1.0;
    double holder_exponent = 1.0;

    // General evaluator (d x q). Presets implement both; custom may set either.
    std::function<Eigen::MatrixXd(double, const Eigen::VectorXd&, const MeasureSummary&)> eval;
    // Scalar fast path used by the particle kernels when d == q == 1.
    std::function<double(double, double, const MeasureSummary&)> eval1;

    Eigen::MatrixXd value(double t, const Eigen::VectorXd& x, const MeasureSummary& s) const;
    double value1(double t, double x, const MeasureSummary& s) const;
};

// Registry of coefficient families documented to satisfy the convexity /
// monotonicity requirements (flags say which). Names:
//   "constant"       params [s]        sigma = s
//   "scaled-linear"  params [s]        sigma = s*x               (d = q = 1)
//   "mean-field-vol" params [a, c]     sigma = sqrt(a + x^2 + c*m2(mu))
//   "rough-clock"    params [s, c, rho] sigma = s*(1 + c*Wrough_rho(t)),
//                    a clock that is exactly rho-Hoelder in t at every scale
DiffusionSpec preset_lookup(const std::string& name, const Eigen::VectorXd& params);

// Normalized Weierstrass-type clock used by the rough presets: rho-Hoelder in
// t with values in [-1, 1].
double rough_clock(double t, double rho);

enum class InitialLawKind { point, gaussian, uniform, two_point };

struct InitialLaw {
    InitialLawKind kind = InitialLawKind::point;
    int dim = 1;
    // point: params = location (d)
    // gaussian: params = [mean..., sd] (isotropic)
    // uniform: params = [lo..., hi...] per coordinate
    // two_point: params = [a..., b..., weight_a] (atoms a, b in R^d)
    Eigen::VectorXd params;

    Eigen::VectorXd sample(const StreamSpec& spec, std::uint32_t particle) const;
    Eigen::VectorXd mean() const;
    // Exact representation when the law is finitely supported.
    std::optional<DiscreteMeasure> exact() const;

    static InitialLaw point1(double x);
    static InitialLaw gaussian1(double mean, double sd);
    static InitialLaw two_point1(double a, double b, double weight_a = 0.5);
};

struct MKVModel {
    DriftSpec drift;
    DiffusionSpec sigma;
    DiffusionSpec theta;
    int dim_d = 1;
    int dim_q = 1;
    double p = 2.0;
    InitialLaw init_x;
    InitialLaw init_y;

    void check() const;  // dims consistent, p >= 2
};

}  // namespace mkv
