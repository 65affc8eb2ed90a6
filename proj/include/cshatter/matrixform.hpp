#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cshatter/filterbank.hpp"
#include "cshatter/shatter.hpp"
#include "cshatter/signal.hpp"

namespace cshatter {

// Dense single-matrix view of the encoder, one 2xN complex matrix per
// filter path: gamma_g = A * Pinv * Hmat_g * P, where P permutes the
// input, Hmat_g is the circular-convolution matrix of filter g, and
// A = Phi * Psi is the sensing matrix times the DFT matrix. Exists as a
// correctness oracle and for exposition; the operational pipeline applies
// the same map without materializing anything. Dense construction is
// guarded to N <= 4096.
struct PipelineMatrix {
    std::vector<Eigen::MatrixXcd> gammas;  // T matrices, each 2 x N
    Eigen::MatrixXcd stacked;              // 2T x N, rows 2g-2..2g-1 = gammas[g-1]

    static PipelineMatrix build(const ShatterConfig& config);
};

// Permutation matrix: (P * x)[i] = x[(sigma * i) mod N].
Eigen::MatrixXd permutation_matrix(std::size_t n, std::uint64_t sigma);

// Circulant matrix of h: out[i][j] = h[(i - j) mod N], i.e. multiplication
// equals circular convolution with h.
Eigen::MatrixXd circulant_matrix(const Signal& h);

// The 2xN sensing matrix A = Phi * Psi with Psi(k, j) = exp(-i2*pi*j*k/N).
Eigen::MatrixXcd sensing_matrix_dense(std::size_t n);

// One filter path as an explicit 2xN matrix; g is 1-based.
Eigen::MatrixXcd build_gamma(const ShatterConfig& config, const FilterBank& bank, std::size_t g);

// All T paths stacked into a 2T x N matrix; applying it to a signal yields
// every pre-threshold measurement pair in filter order.
Eigen::MatrixXcd build_stacked(const ShatterConfig& config);

}  // namespace cshatter
