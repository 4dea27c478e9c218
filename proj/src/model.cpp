#include "mkv/model.hpp"

#include <cmath>

#include "mkv/errors.hpp"

namespace mkv {

MeasureSummary MeasureSummary::of(const DiscreteMeasure& mu, double p) {
    MeasureSummary s;
    s.mean = mu.mean();
    s.m2 = mu.raw_abs_moment(2.0);
    s.pth = mu.raw_abs_moment(p);
    s.p = p;
    s.full = &mu;
    return s;
}

MeasureSummary MeasureSummary::of_states(const Eigen::MatrixXd& states, double p) {
    MeasureSummary s;
    const double n = static_cast<double>(states.rows());
    s.mean = states.colwise().sum().transpose() / n;
    s.m2 = states.rowwise().squaredNorm().sum() / n;
    double acc = 0.0;
    for (int i = 0; i < states.rows(); ++i) acc += std::pow(states.row(i).norm(), p);
    s.pth = acc / n;
    s.p = p;
    return s;
}

MeasureSummary MeasureSummary::point(const Eigen::VectorXd& x, double p) {
    MeasureSummary s;
    s.mean = x;
    s.m2 = x.squaredNorm();
    s.pth = std::pow(x.norm(), p);
    s.p = p;
    return s;
}

DriftSpec DriftSpec::zero(int d) {
    DriftSpec b;
    b.alpha = [d](double) { return Eigen::MatrixXd::Zero(d, d); };
    b.beta = [d](double, const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(d); };
    return b;
}

DriftSpec DriftSpec::affine1(double a, double b_mean, double c) {
    DriftSpec b;
    b.alpha = [a](double) { return Eigen::MatrixXd::Constant(1, 1, a); };
    b.beta = [b_mean, c](double, const Eigen::VectorXd& m) {
        return Eigen::VectorXd::Constant(1, b_mean * m[0] + c);
    };
    return b;
}

Eigen::MatrixXd DiffusionSpec::value(double t, const Eigen::VectorXd& x,
                                     const MeasureSummary& s) const {
    if (eval) return eval(t, x, s);
    if (eval1 && x.size() == 1) return Eigen::MatrixXd::Constant(1, 1, eval1(t, x[0], s));
    throw ContractError("DiffusionSpec: no evaluator set");
}

double DiffusionSpec::value1(double t, double x, const MeasureSummary& s) const {
    if (eval1) return eval1(t, x, s);
    return value(t, Eigen::VectorXd::Constant(1, x), s)(0, 0);
}

double rough_clock(double t, double rho) {
    // sum_k b^{-rho k} cos(b^k t + phase_k), b = 2, normalized into [-1, 1].
    // The phases de-align the dyadic frequencies so increments do not line up
    // with dyadic step grids.
    constexpr int kTerms = 24;
    constexpr double kB = 2.0;
    double acc = 0.0, norm = 0.0, freq = 1.0, amp = 1.0;
    const double decay = std::pow(kB, -rho);
    for (int k = 0; k < kTerms; ++k) {
        acc += amp * std::cos(freq * t + 0.7130 * k * k);
        norm += amp;
        freq *= kB;
        amp *= decay;
    }
    return acc / norm;
}

DiffusionSpec preset_lookup(const std::string& name, const Eigen::VectorXd& params) {
    DiffusionSpec spec;
    spec.kind = name;
    spec.params = params;
    if (name == "constant") {
        if (params.size() != 1 || params[0] < 0.0)
            throw DomainError("preset constant: params [s], s >= 0");
        const double s = params[0];
        spec.summary_kind = MeasureSummaryKind::none;
        spec.convex_in_x = true;
        spec.monotone_in_law = true;
        spec.growth_bound = s;
        spec.lipschitz_bound = 0.0;
        spec.eval1 = [s](double, double, const MeasureSummary&) { return s; };
        spec.eval = [s](double, const Eigen::VectorXd& x, const MeasureSummary&) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(x.size(), x.size());
            m.diagonal().setConstant(s);
            return m;
        };
    } else if (name == "scaled-linear") {
        if (params.size() != 1 || params[0] < 0.0)
            throw DomainError("preset scaled-linear: params [s], s >= 0");
        const double s = params[0];
        spec.summary_kind = MeasureSummaryKind::none;
        spec.convex_in_x = true;  // linear maps meet the matrix-convexity bound with equality
        spec.monotone_in_law = true;
        spec.growth_bound = s;
        spec.lipschitz_bound = s;
        spec.eval1 = [s](double, double x, const MeasureSummary&) { return s * x; };
        spec.eval = [s](double, const Eigen::VectorXd& x, const MeasureSummary&) {
            if (x.size() != 1)
                throw DimensionError("preset scaled-linear: defined for d = q = 1");
            return Eigen::MatrixXd::Constant(1, 1, s * x[0]);
        };
    } else if (name == "mean-field-vol") {
        if (params.size() != 2 || params[0] < 0.0 || params[1] < 0.0)
            throw DomainError("preset mean-field-vol: params [a, c], both >= 0");
        const double a = params[0], c = params[1];
        spec.summary_kind = MeasureSummaryKind::pth_moment;
        spec.convex_in_x = true;
        spec.monotone_in_law = true;
        spec.growth_bound = std::sqrt(a) + 1.0 + std::sqrt(c);
        spec.lipschitz_bound = 1.0 + std::sqrt(c);
        spec.eval1 = [a, c](double, double x, const MeasureSummary& s) {
            return std::sqrt(a + x * x + c * s.m2);
        };
        spec.eval = [a, c](double, const Eigen::VectorXd& x, const MeasureSummary& s) {
            if (x.size() != 1)
                throw DimensionError("preset mean-field-vol: defined for d = q = 1");
            return Eigen::MatrixXd::Constant(1, 1, std::sqrt(a + x[0] * x[0] + c * s.m2));
        };
    } else if (name == "rough-clock") {
        if (params.size() != 3 || params[0] < 0.0 || params[1] < 0.0 || params[1] >= 1.0 ||
            params[2] <= 0.0 || params[2] > 1.0)
            throw DomainError("preset rough-clock: params [s, c, rho], s >= 0, c in [0,1), rho in (0,1]");
        const double s = params[0], c = params[1], rho = params[2];
        spec.summary_kind = MeasureSummaryKind::none;
        spec.convex_in_x = true;  // constant in x
        spec.monotone_in_law = true;
        spec.growth_bound = s * (1.0 + c);
        spec.lipschitz_bound = 0.0;
        spec.holder_exponent = rho;
        spec.eval1 = [s, c, rho](double t, double, const MeasureSummary&) {
            return s * (1.0 + c * rough_clock(t, rho));
        };
        spec.eval = [s, c, rho](double t, const Eigen::VectorXd& x, const MeasureSummary&) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(x.size(), x.size());
            m.diagonal().setConstant(s * (1.0 + c * rough_clock(t, rho)));
            return m;
        };
    } else {
        throw LookupError("preset_lookup: unknown preset '" + name + "'");
    }
    return spec;
}

Eigen::VectorXd InitialLaw::sample(const StreamSpec& spec, std::uint32_t particle) const {
    const StreamSpec s = spec.with_particle(particle).with_step(0);
    Eigen::VectorXd x(dim);
    switch (kind) {
        case InitialLawKind::point:
            return params.head(dim);
        case InitialLawKind::gaussian: {
            const double sd = params[dim];
            for (int c = 0; c < dim; ++c)
                x[c] = params[c] + sd * standard_normal(s, static_cast<std::uint64_t>(c));
            return x;
        }
        case InitialLawKind::uniform: {
            for (int c = 0; c < dim; ++c) {
                const double lo = params[c], hi = params[dim + c];
                x[c] = lo + (hi - lo) * uniform01(s, static_cast<std::uint64_t>(c));
            }
            return x;
        }
        case InitialLawKind::two_point: {
            const double wa = params[2 * dim];
            const bool pick_a = uniform01(s, 0) < wa;
            return pick_a ? params.head(dim) : params.segment(dim, dim);
        }
    }
    throw std::logic_error("InitialLaw: unreachable");
}

Eigen::VectorXd InitialLaw::mean() const {
    switch (kind) {
        case InitialLawKind::point:
            return params.head(dim);
        case InitialLawKind::gaussian:
            return params.head(dim);
        case InitialLawKind::uniform:
            return 0.5 * (params.head(dim) + params.segment(dim, dim));
        case InitialLawKind::two_point: {
            const double wa = params[2 * dim];
            return wa * params.head(dim) + (1.0 - wa) * params.segment(dim, dim);
        }
    }
    throw std::logic_error("InitialLaw: unreachable");
}

std::optional<DiscreteMeasure> InitialLaw::exact() const {
    if (kind == InitialLawKind::point) return DiscreteMeasure::dirac(params.head(dim));
    if (kind == InitialLawKind::two_point) {
        Eigen::MatrixXd s(2, dim);
        s.row(0) = params.head(dim).transpose();
        s.row(1) = params.segment(dim, dim).transpose();
        Eigen::VectorXd w(2);
        w << params[2 * dim], 1.0 - params[2 * dim];
        return DiscreteMeasure(std::move(s), std::move(w));
    }
    return std::nullopt;
}

InitialLaw InitialLaw::point1(double x) {
    InitialLaw l;
    l.kind = InitialLawKind::point;
    l.dim = 1;
    l.params = Eigen::VectorXd::Constant(1, x);
    return l;
}

InitialLaw InitialLaw::gaussian1(double mean, double sd) {
    InitialLaw l;
    l.kind = InitialLawKind::gaussian;
    l.dim = 1;
    l.params = Eigen::VectorXd(2);
    l.params << mean, sd;
    return l;
}

InitialLaw InitialLaw::two_point1(double a, double b, double weight_a) {
    InitialLaw l;
    l.kind = InitialLawKind::two_point;
    l.dim = 1;
    l.params = Eigen::VectorXd(3);
    l.params << a, b, weight_a;
    return l;
}

void MKVModel::check() const {
    if (p < 2.0) throw DomainError("MKVModel: p >= 2 required");
    if (dim_d < 1 || dim_q < 1) throw DomainError("MKVModel: dims >= 1 required");
    if (init_x.dim != dim_d || init_y.dim != dim_d)
        throw DimensionError("MKVModel: initial law dimension mismatch");
}

}  // namespace mkv
