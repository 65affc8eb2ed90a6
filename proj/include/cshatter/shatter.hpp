#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cshatter/filterbank.hpp"
#include "cshatter/signal.hpp"

namespace cshatter {

// Default l2 cutoff below which a filter's measurement pair is discarded.
inline constexpr double kDefaultThreshold = 0.01;

// Complete encoder parameterization: signal length, filter count,
// permutation parameter, and measurement threshold.
struct ShatterConfig {
    std::size_t n;
    std::size_t t;
    std::uint64_t sigma;
    double threshold = kDefaultThreshold;

    // Validates n even, t | n/2, gcd(sigma, n) == 1, threshold >= 0.
    // Throws BadBankShape / NotCoprime / std::invalid_argument.
    static ShatterConfig make(std::size_t n, std::size_t t, std::uint64_t sigma,
                              double threshold = kDefaultThreshold);
};

// Deterministic 2xN sensing matrix A = Phi * Psi for 0- or 1-sparse
// spectra. Phi's first N/2+1 columns are (cos theta_s, sin theta_s) with
// theta_s = pi*s/N; the remaining columns are zero, discarding the
// conjugate mirror half. Any two effective columns are linearly
// independent, so two complex measurements pin down one frequency's
// position and coefficient.
class SensingMatrix {
public:
    explicit SensingMatrix(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    // theta_s = pi * s / n, valid for s = 0..n/2.
    double theta(std::size_t s) const noexcept { return angle_step_ * static_cast<double>(s); }
    const std::vector<double>& cos_table() const noexcept { return cos_; }
    const std::vector<double>& sin_table() const noexcept { return sin_; }

private:
    std::size_t n_;
    double angle_step_;  // pi / n
    std::vector<double> cos_;  // cos(theta_s), s = 0..n/2
    std::vector<double> sin_;
};

// One retained measurement pair and the 1-based filter it came from.
struct Measurement {
    std::size_t filter;
    std::complex<double> y0;
    std::complex<double> y1;

    double l2() const { return std::sqrt(std::norm(y0) + std::norm(y1)); }
};

// Thresholded encoder output: the config echo plus the retained per-filter
// measurements, sorted by filter index.
struct MeasurementSet {
    std::size_t n;
    std::size_t t;
    std::uint64_t sigma;
    double threshold;
    std::vector<Measurement> entries;
};

// Splits the signal into T shattered signals: permute, band-pass each
// filter, inverse-permute. The outputs sum back to the input, and each
// carries the subset of the spectrum whose permuted position falls in one
// filter's band.
std::vector<Signal> shatter(const Signal& x, const ShatterConfig& config);

// Occupied-bin count (bins 0..N/2, magnitude above kOccupiedRelTol times
// the global max across all shattered spectra) for each shattered signal.
// Throws ShatterCollision if any filter captured more than one frequency —
// the closed-form decoder is only correct for at most one.
std::vector<std::size_t> check_shatter_validity(const std::vector<Signal>& shattered);

// Two-component measurement y = Phi * dft(x_g) of one shattered signal.
// For a lone bin alpha <= N/2 holding beta: y = (beta*cos theta_alpha,
// beta*sin theta_alpha), so the pair's l2 norm equals |beta|.
std::pair<std::complex<double>, std::complex<double>> sense_one(const Signal& shattered,
                                                                const SensingMatrix& matrix);

// Full encoder: shatter, validate, sense every filter, keep measurements
// with l2 norm >= threshold. Throws ShatterCollision for an invalid sigma.
MeasurementSet encode(const Signal& x, const ShatterConfig& config);

// A bank of t filters can only isolate up to t frequencies; throws
// BadBankShape when config.t < spec.m2.
void require_filter_capacity(const ShatterConfig& config, const SparsitySpec& spec);

// Smallest sigma >= start, coprime to n (odd candidates first), whose
// permutation lands every support frequency in a distinct filter. The
// support holds folded bin indices in 0..n/2; bin k moves to position
// (sigma*k) mod n in the permuted spectrum. Throws NoValidSigma when no
// sigma < n works (e.g. |support| > t).
std::uint64_t find_sigma(std::size_t n, std::size_t t,
                         const std::vector<std::size_t>& support, std::uint64_t start);

}  // namespace cshatter
