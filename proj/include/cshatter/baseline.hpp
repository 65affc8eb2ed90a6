#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cshatter/signal.hpp"

namespace cshatter {

// Conventional compressed-sensing reference: a random Gaussian sensing
// matrix sized by the measurements-per-sparsity rule, with greedy sparse
// recovery over the real Fourier dictionary.
struct CsConfig {
    std::size_t n;
    std::size_t m_max;        // worst-case design sparsity
    double multiplier = 7.0;  // measurements per unit sparsity
    std::uint64_t seed = 0;

    // M = ceil(multiplier * m_max); throws BadDimensions if M > n or M == 0.
    std::size_t measurement_count() const;
};

// Per-iteration residual norms of the accepted pursuit pass.
struct PursuitTrace {
    std::vector<double> residuals;
};

// y = A * x with A an M x N matrix of iid standard normal entries scaled
// by 1/sqrt(M), generated deterministically from the seed.
Eigen::VectorXd cs_encode(const Signal& x, const CsConfig& config);

// Greedy matching pursuit over the sensed real Fourier dictionary.
// Frequencies are selected as mirrored pairs (cosine + sine atoms) so the
// recovered signal is real; each selection is followed by a least-squares
// refit of every active atom, which keeps the residual non-increasing.
// Wrong early picks are repaired by a prune-and-swap refinement pass and,
// failing that, deterministic restarts from lower-ranked initial atoms.
// Iterates until the residual l2 norm drops below 1e-8 * ||y|| or the
// budget is exhausted; throws NoConvergence in the latter case.
// sparsity_budget is the largest number of frequencies the final model may
// use and must be <= M/2.
Signal cs_decode(const Eigen::VectorXd& y, const CsConfig& config, std::size_t sparsity_budget,
                 PursuitTrace* trace = nullptr);

}  // namespace cshatter
