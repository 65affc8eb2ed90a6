#include "cshatter/matrixform.hpp"

#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cshatter/errors.hpp"
#include "cshatter/permute.hpp"

namespace cshatter {
namespace {

constexpr std::size_t kDenseLimit = 4096;

void check_dense_limit(std::size_t n) {
    if (n > kDenseLimit) {
        throw BadDimensions("matrixform: dense construction guarded to n <= " +
                            std::to_string(kDenseLimit) + ", got " + std::to_string(n));
    }
}

}  // namespace

Eigen::MatrixXd permutation_matrix(std::size_t n, std::uint64_t sigma) {
    check_dense_limit(n);
    if (std::gcd(sigma, static_cast<std::uint64_t>(n)) != 1) {
        throw NotCoprime("permutation_matrix: sigma not coprime to n");
    }
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, (sigma * i) % n) = 1.0;
    return p;
}

Eigen::MatrixXd circulant_matrix(const Signal& h) {
    const std::size_t n = h.size();
    check_dense_limit(n);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = h[(i + n - j) % n];
        }
    }
    return m;
}

Eigen::MatrixXcd sensing_matrix_dense(std::size_t n) {
    check_dense_limit(n);
    const SensingMatrix phi(n);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, n);
    // A(r, j) = sum_{s=0}^{n/2} Phi(r, s) * exp(-i2*pi*j*s/n); the integer
    // product j*s is reduced mod n before the angle to keep full precision.
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> a0{0.0, 0.0};
        std::complex<double> a1{0.0, 0.0};
        for (std::size_t s = 0; s <= n / 2; ++s) {
            const double angle =
                -2.0 * std::numbers::pi * static_cast<double>((j * s) % n) / static_cast<double>(n);
            const std::complex<double> w = std::polar(1.0, angle);
            a0 += phi.cos_table()[s] * w;
            a1 += phi.sin_table()[s] * w;
        }
        a(0, j) = a0;
        a(1, j) = a1;
    }
    return a;
}

Eigen::MatrixXcd build_gamma(const ShatterConfig& config, const FilterBank& bank, std::size_t g) {
    check_dense_limit(config.n);
    if (g < 1 || g > config.t) {
        throw std::out_of_range("build_gamma: filter index");
    }
    const std::size_t n = config.n;

    // h_g = inverse transform of the 0/1 mask; real because the mask is
    // conjugate-symmetric.
    const auto& mask = bank.mask(g);
    Spectrum mask_bins(n);
    for (std::size_t k = 0; k < n; ++k) mask_bins[k] = static_cast<double>(mask[k]);
    const Signal h = idft(mask_bins);

    const Eigen::MatrixXd p = permutation_matrix(n, config.sigma);
    const Eigen::MatrixXd p_inv = permutation_matrix(n, mod_inverse(config.sigma, n));
    const Eigen::MatrixXd hmat = circulant_matrix(h);
    const Eigen::MatrixXcd a = sensing_matrix_dense(n);

    // Associate left-to-right so no N x N product ever forms.
    return ((a * p_inv) * hmat) * p;
}

PipelineMatrix PipelineMatrix::build(const ShatterConfig& config) {
    check_dense_limit(config.n);
    const FilterBank bank = FilterBank::build(config.n, config.t);

    PipelineMatrix pm;
    pm.gammas.reserve(config.t);
    pm.stacked.resize(2 * config.t, config.n);
    for (std::size_t g = 1; g <= config.t; ++g) {
        pm.gammas.push_back(build_gamma(config, bank, g));
        pm.stacked.middleRows(2 * (g - 1), 2) = pm.gammas.back();
    }
    return pm;
}

Eigen::MatrixXcd build_stacked(const ShatterConfig& config) {
    return PipelineMatrix::build(config).stacked;
}

}  // namespace cshatter
