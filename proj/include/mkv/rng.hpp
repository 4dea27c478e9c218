#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

namespace mkv {

// Stream tags keep the draw spaces of unrelated consumers disjoint. The
// numeric values are frozen: they enter the counter layout below and with it
// every golden file.
enum class StreamTag : std::uint8_t {
    ProcessX = 0,
    ProcessY = 1,
    SharedNoise = 2,   // common random numbers driving coupled systems
    InitX = 3,
    InitY = 4,
    Refine = 5,        // sub-step increments of the continuous-time scheme
    CouplingZ = 6,     // base Gaussian of the dominating coupling
    CouplingZt = 7,    // independent booster of the dominating coupling
    Directions = 8,    // sliced-Wasserstein directions
    Spread = 9,        // mean-preserving spread kick directions
    Family = 10,       // convex test family construction
    Probe = 11,        // assumption validator probes
    Scratch = 12,
};

// Identifies one independent random stream. Distinct tuples give
// statistically independent draws; the same tuple reproduces the same draws
// on every run and at every thread count.
struct StreamSpec {
    std::uint64_t master_seed = 0;
    std::uint32_t experiment = 0;  // 24 bits used
    StreamTag tag = StreamTag::Scratch;
    std::uint32_t particle = 0;
    std::uint32_t step = 0;

    StreamSpec with_particle(std::uint32_t n) const {
        StreamSpec s = *this;
        s.particle = n;
        return s;
    }
    StreamSpec with_step(std::uint32_t m) const {
        StreamSpec s = *this;
        s.step = m;
        return s;
    }
    StreamSpec with_tag(StreamTag t) const {
        StreamSpec s = *this;
        s.tag = t;
        return s;
    }
};

// Philox4x32-10 block function (Salmon et al. constants). Counter layout,
// frozen for reproducibility:
//   key     = master_seed (two 32-bit words)
//   ctr[3]  = (experiment << 8) | tag
//   ctr[2]  = particle
//   ctr[1]  = step
//   ctr[0]  = block index within the stream
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

// index-th standard uniform in (0,1) of the stream. Two uniforms per block.
double uniform01(const StreamSpec& spec, std::uint64_t index);

// index-th standard normal of the stream (Box-Muller on uniform pairs; a
// block yields exactly two normals, so indexing is stateless).
double standard_normal(const StreamSpec& spec, std::uint64_t index);

// rows x cols matrix of i.i.d. N(0,1), entry (r,c) = normal at index r*cols+c.
Eigen::MatrixXd gaussian_block(const StreamSpec& spec, int rows, int cols);

// Uniform direction on the unit sphere S^{d-1}, index-th draw of the stream.
Eigen::VectorXd unit_direction(const StreamSpec& spec, int d, std::uint64_t index);

// Symmetric PSD square root R of S (d x d, symmetric within tol): R*R^T = S.
// Negative eigenvalues in [-tol, 0) are clamped to zero; below -tol throws
// NotPsdError.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& S, double tol);

// Sample pairs (M1, M2) realizing the martingale coupling between N(0,u1*u1^T)
// and N(0,u2*u2^T): M2 = M1 + sqrt(u2 u2^T - u1 u1^T) Ztilde. Requires
// u1 preceq u2 in the matrix partial order (checked; OrderViolationError).
struct CoupledGaussians {
    Eigen::MatrixXd m1;  // n x d
    Eigen::MatrixXd m2;  // n x d
};
CoupledGaussians dominating_gaussian_coupling(const Eigen::MatrixXd& u1,
                                              const Eigen::MatrixXd& u2,
                                              const StreamSpec& spec, int n);

}  // namespace mkv
