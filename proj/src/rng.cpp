#include "mkv/rng.hpp"

#include <cmath>

#include "mkv/errors.hpp"
#include "mkv/matrix_order.hpp"

namespace mkv {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::uint32_t mulhi32(std::uint32_t a, std::uint32_t b, std::uint32_t* lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    *lo = static_cast<std::uint32_t>(p);
    return static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         std::array<std::uint32_t, 2>& key) {
    std::uint32_t lo0, lo1;
    const std::uint32_t hi0 = mulhi32(kPhiloxM0, ctr[0], &lo0);
    const std::uint32_t hi1 = mulhi32(kPhiloxM1, ctr[2], &lo1);
    const std::array<std::uint32_t, 4> out = {hi1 ^ ctr[1] ^ key[0], lo1,
                                              hi0 ^ ctr[3] ^ key[1], lo0};
    ctr = out;
    key[0] += kWeyl0;
    key[1] += kWeyl1;
}

inline std::array<std::uint32_t, 4> block_for(const StreamSpec& spec,
                                              std::uint32_t block_index) {
    std::array<std::uint32_t, 4> ctr = {
        block_index, spec.step, spec.particle,
        (spec.experiment << 8) | static_cast<std::uint32_t>(spec.tag)};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(spec.master_seed),
                                        static_cast<std::uint32_t>(spec.master_seed >> 32)};
    return philox4x32(ctr, key);
}

// 64 bits -> (0,1); cannot hit 0 or 1 exactly.
inline double to_unit(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t x = (static_cast<std::uint64_t>(a) << 32) | b;
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

struct NormalPair {
    double z0, z1;
};

inline NormalPair normals_from_block(const std::array<std::uint32_t, 4>& w) {
    const double u1 = to_unit(w[0], w[1]);
    const double u2 = to_unit(w[2], w[3]);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) philox_round(ctr, key);
    return ctr;
}

double uniform01(const StreamSpec& spec, std::uint64_t index) {
    const auto w = block_for(spec, static_cast<std::uint32_t>(index / 2));
    return (index % 2 == 0) ? to_unit(w[0], w[1]) : to_unit(w[2], w[3]);
}

double standard_normal(const StreamSpec& spec, std::uint64_t index) {
    const auto w = block_for(spec, static_cast<std::uint32_t>(index / 2));
    const NormalPair z = normals_from_block(w);
    return (index % 2 == 0) ? z.z0 : z.z1;
}

Eigen::MatrixXd gaussian_block(const StreamSpec& spec, int rows, int cols) {
    if (rows < 1 || cols < 1) throw DomainError("gaussian_block: rows, cols >= 1 required");
    Eigen::MatrixXd out(rows, cols);
    const std::uint64_t total = static_cast<std::uint64_t>(rows) * cols;
    for (std::uint64_t k = 0; k < total; k += 2) {
        const NormalPair z = normals_from_block(block_for(spec, static_cast<std::uint32_t>(k / 2)));
        out(static_cast<int>(k / cols), static_cast<int>(k % cols)) = z.z0;
        if (k + 1 < total)
            out(static_cast<int>((k + 1) / cols), static_cast<int>((k + 1) % cols)) = z.z1;
    }
    return out;
}

Eigen::VectorXd unit_direction(const StreamSpec& spec, int d, std::uint64_t index) {
    if (d < 1) throw DomainError("unit_direction: d >= 1 required");
    if (d == 1) {
        // +/-1 with equal probability
        return Eigen::VectorXd::Constant(1, uniform01(spec, index) < 0.5 ? -1.0 : 1.0);
    }
    Eigen::VectorXd v(d);
    const std::uint64_t base = index * static_cast<std::uint64_t>(d);
    double norm2 = 0.0;
    for (int c = 0; c < d; ++c) {
        v[c] = standard_normal(spec, base + c);
        norm2 += v[c] * v[c];
    }
    if (norm2 == 0.0) v[0] = 1.0, norm2 = 1.0;  // unreachable in practice
    return v / std::sqrt(norm2);
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& S, double tol) {
    if (S.rows() != S.cols()) throw DimensionError("psd_sqrt: matrix must be square");
    if ((S - S.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1.0, S.cwiseAbs().maxCoeff()))
        throw DomainError("psd_sqrt: matrix not symmetric within tol");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()));
    Eigen::VectorXd lam = es.eigenvalues();
    if (lam.minCoeff() < -tol)
        throw NotPsdError("psd_sqrt: minimum eigenvalue " + std::to_string(lam.minCoeff()) +
                          " below -tol");
    for (int i = 0; i < lam.size(); ++i) lam[i] = std::sqrt(std::max(0.0, lam[i]));
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

CoupledGaussians dominating_gaussian_coupling(const Eigen::MatrixXd& u1,
                                              const Eigen::MatrixXd& u2,
                                              const StreamSpec& spec, int n) {
    constexpr double kOrderTol = 1e-10;
    if (!matrix_partial_order(u1, u2, kOrderTol))
        throw OrderViolationError("dominating_gaussian_coupling: u1 preceq u2 fails");
    const int d = static_cast<int>(u1.rows());
    const int q = static_cast<int>(u1.cols());
    const Eigen::MatrixXd diff = u2 * u2.transpose() - u1 * u1.transpose();
    const double scale = std::max(1.0, diff.cwiseAbs().maxCoeff());
    const Eigen::MatrixXd booster = psd_sqrt(diff, kOrderTol * scale * 10.0);

    CoupledGaussians out;
    out.m1.resize(n, d);
    out.m2.resize(n, d);
    const StreamSpec base = spec.with_tag(StreamTag::CouplingZ);
    const StreamSpec extra = spec.with_tag(StreamTag::CouplingZt);
    Eigen::VectorXd z(q), zt(d);
    for (int k = 0; k < n; ++k) {
        const std::uint64_t zoff = static_cast<std::uint64_t>(k) * q;
        const std::uint64_t toff = static_cast<std::uint64_t>(k) * d;
        for (int c = 0; c < q; ++c) z[c] = standard_normal(base, zoff + c);
        for (int c = 0; c < d; ++c) zt[c] = standard_normal(extra, toff + c);
        out.m1.row(k) = (u1 * z).transpose();
        out.m2.row(k) = out.m1.row(k) + (booster * zt).transpose();
    }
    return out;
}

}  // namespace mkv
