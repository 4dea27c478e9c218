#include "mkv/validate.hpp"

#include <cmath>
#include <sstream>

#include "mkv/matrix_order.hpp"

namespace mkv {

namespace {

std::string describe_point(double t, const Eigen::VectorXd& x) {
    std::ostringstream os;
    os << "t=" << t << " x=[";
    for (int c = 0; c < x.size(); ++c) os << (c ? "," : "") << x[c];
    os << "]";
    return os.str();
}

struct ProbeDraws {
    StreamSpec spec;
    std::uint64_t cursor = 0;
    double next_uniform() { return uniform01(spec, cursor++); }
    double next_normal() { return standard_normal(spec, cursor++); }

    Eigen::VectorXd box_point(int d, double radius) {
        Eigen::VectorXd x(d);
        for (int c = 0; c < d; ++c) x[c] = radius * (2.0 * next_uniform() - 1.0);
        return x;
    }

    DiscreteMeasure random_measure(int d, double radius) {
        const int k = 2 + static_cast<int>(next_uniform() * 4.0);
        Eigen::MatrixXd s(k, d);
        Eigen::VectorXd w(k);
        for (int a = 0; a < k; ++a) {
            s.row(a) = box_point(d, radius).transpose();
            w[a] = 0.05 + next_uniform();
        }
        w /= w.sum();
        return DiscreteMeasure(std::move(s), std::move(w));
    }
};

}  // namespace

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ValidationReport validate_assumptions(const MKVModel& model, const ProbeConfig& probe) {
    model.check();
    ValidationReport report;
    const int d = model.dim_d;
    ProbeDraws draws{probe.spec.with_tag(StreamTag::Probe)};
    const double T = probe.horizon;
    const double R = probe.box_radius;

    // (i) drift affine in x: three-point collinearity on random segments.
    {
        CheckResult c;
        c.name = "drift-affine-in-x";
        c.bound = probe.tol;
        for (int it = 0; it < probe.samples; ++it) {
            const double t = T * draws.next_uniform();
            const Eigen::VectorXd x = draws.box_point(d, R);
            const Eigen::VectorXd y = draws.box_point(d, R);
            const double lam = draws.next_uniform();
            const DiscreteMeasure mu = draws.random_measure(d, R);
            const MeasureSummary s = MeasureSummary::of(mu, model.p);
            const Eigen::VectorXd lhs = model.drift.value(t, lam * x + (1.0 - lam) * y, s);
            const Eigen::VectorXd rhs =
                lam * model.drift.value(t, x, s) + (1.0 - lam) * model.drift.value(t, y, s);
            const double scale = 1.0 + lhs.norm() + rhs.norm();
            const double gap = (lhs - rhs).norm() / scale;
            if (gap > c.estimate) {
                c.estimate = gap;
                c.witness = describe_point(t, x);
            }
        }
        c.pass = c.estimate <= c.bound;
        report.checks.push_back(c);
    }

    // (ii) midpoint matrix-convexity of sigma in x.
    {
        CheckResult c;
        c.name = "sigma-midpoint-convexity";
        for (int it = 0; it < probe.samples; ++it) {
            const double t = T * draws.next_uniform();
            const Eigen::VectorXd x = draws.box_point(d, R);
            const Eigen::VectorXd y = draws.box_point(d, R);
            const DiscreteMeasure mu = draws.random_measure(d, R);
            const MeasureSummary s = MeasureSummary::of(mu, model.p);
            const Eigen::MatrixXd mid = model.sigma.value(t, 0.5 * (x + y), s);
            const Eigen::MatrixXd avg =
                0.5 * model.sigma.value(t, x, s) + 0.5 * model.sigma.value(t, y, s);
            const double scale = std::max(1e-12, (avg * avg.transpose()).trace());
            const double margin = matrix_order_margin(mid, avg) / scale;
            if (it == 0 || margin < c.estimate) {
                c.estimate = margin;
                c.witness = describe_point(t, 0.5 * (x + y));
            }
        }
        c.bound = -1e-10;
        c.pass = c.estimate >= c.bound;
        report.checks.push_back(c);
    }

    // (iii) sigma preceq theta pointwise.
    {
        CheckResult c;
        c.name = "sigma-preceq-theta";
        for (int it = 0; it < probe.samples; ++it) {
            const double t = T * draws.next_uniform();
            const Eigen::VectorXd x = draws.box_point(d, R);
            const DiscreteMeasure mu = draws.random_measure(d, R);
            const MeasureSummary s = MeasureSummary::of(mu, model.p);
            const Eigen::MatrixXd a = model.sigma.value(t, x, s);
            const Eigen::MatrixXd b = model.theta.value(t, x, s);
            const double scale = std::max(1e-12, (b * b.transpose()).trace());
            const double margin = matrix_order_margin(a, b) / scale;
            if (it == 0 || margin < c.estimate) {
                c.estimate = margin;
                c.witness = describe_point(t, x);
            }
        }
        c.bound = -1e-10;
        c.pass = c.estimate >= c.bound;
        report.checks.push_back(c);
    }

    // (iv) Lipschitz in x and Hoelder in t against declared constants.
    {
        CheckResult cl;
        cl.name = "sigma-lipschitz-in-x";
        CheckResult ch;
        ch.name = "coefficients-hoelder-in-t";
        const double rho = std::min(model.drift.holder_exponent,
                                    std::min(model.sigma.holder_exponent,
                                             model.theta.holder_exponent));
        for (int it = 0; it < probe.samples; ++it) {
            const double t = T * draws.next_uniform();
            double u = T * draws.next_uniform();
            if (std::abs(u - t) < 1e-6) u = std::min(T, t + 1e-3);
            const Eigen::VectorXd x = draws.box_point(d, R);
            const Eigen::VectorXd y = draws.box_point(d, R);
            const DiscreteMeasure mu = draws.random_measure(d, R);
            const MeasureSummary s = MeasureSummary::of(mu, model.p);

            const double dx = (x - y).norm();
            if (dx > 1e-9) {
                const double num =
                    (model.sigma.value(t, x, s) - model.sigma.value(t, y, s)).norm();
                const double ratio = num / dx;
                if (ratio > cl.estimate) {
                    cl.estimate = ratio;
                    cl.witness = describe_point(t, x);
                }
            }
            const double envelope =
                (1.0 + x.norm() + std::pow(s.pth, 1.0 / model.p)) * std::pow(std::abs(t - u), rho);
            if (envelope > 1e-12) {
                double num = (model.sigma.value(t, x, s) - model.sigma.value(u, x, s)).norm();
                num = std::max(num,
                               (model.theta.value(t, x, s) - model.theta.value(u, x, s)).norm());
                num = std::max(num,
                               (model.drift.value(t, x, s) - model.drift.value(u, x, s)).norm());
                const double ratio = num / envelope;
                if (ratio > ch.estimate) {
                    ch.estimate = ratio;
                    ch.witness = describe_point(t, x);
                }
            }
        }
        // Frobenius norm can exceed the operator norm by sqrt(rank); allow it.
        cl.bound = std::max(model.sigma.lipschitz_bound, 1e-12) * (1.0 + std::sqrt(1.0 * d));
        cl.pass = cl.estimate <= cl.bound;
        report.checks.push_back(cl);
        // Hoelder constant bound: declared per-coefficient envelope, generous
        // factor for the finite-difference estimate.
        ch.bound = 16.0 * std::max({1.0, model.sigma.growth_bound, model.theta.growth_bound});
        ch.pass = ch.estimate <= ch.bound;
        report.checks.push_back(ch);
    }

    // (v) linear growth ratio.
    {
        CheckResult c;
        c.name = "linear-growth";
        for (int it = 0; it < probe.samples; ++it) {
            const double t = T * draws.next_uniform();
            const Eigen::VectorXd x = draws.box_point(d, 4.0 * R);
            const DiscreteMeasure mu = draws.random_measure(d, R);
            const MeasureSummary s = MeasureSummary::of(mu, model.p);
            const double envelope = 1.0 + x.norm() + std::pow(s.pth, 1.0 / model.p);
            const double num = std::max(model.sigma.value(t, x, s).norm(),
                                        model.drift.value(t, x, s).norm());
            const double ratio = num / envelope;
            if (ratio > c.estimate) {
                c.estimate = ratio;
                c.witness = describe_point(t, x);
            }
        }
        c.bound = 2.0 + 2.0 * std::max(model.sigma.growth_bound, 1.0);
        c.pass = c.estimate <= c.bound;
        report.checks.push_back(c);
    }

    // (vi) monotone in the law along mean-preserving spread pairs.
    {
        CheckResult c;
        c.name = "sigma-monotone-in-law";
        for (int it = 0; it < probe.samples; ++it) {
            const double t = T * draws.next_uniform();
            const Eigen::VectorXd x = draws.box_point(d, R);
            const DiscreteMeasure mu = draws.random_measure(d, R);
            const DiscreteMeasure nu =
                mean_preserving_spread(mu, 0.25 + draws.next_uniform(),
                                       probe.spec.with_particle(static_cast<std::uint32_t>(it)));
            const Eigen::MatrixXd a = model.sigma.value(t, x, MeasureSummary::of(mu, model.p));
            const Eigen::MatrixXd b = model.sigma.value(t, x, MeasureSummary::of(nu, model.p));
            const double scale = std::max(1e-12, (b * b.transpose()).trace());
            const double margin = matrix_order_margin(a, b) / scale;
            if (it == 0 || margin < c.estimate) {
                c.estimate = margin;
                c.witness = describe_point(t, x);
            }
        }
        c.bound = -1e-10;
        c.pass = c.estimate >= c.bound;
        report.checks.push_back(c);
    }

    return report;
}

}  // namespace mkv
