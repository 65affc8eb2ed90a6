#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cshatter {

// Real time-domain signal of length N. The shattering pipeline requires N
// even and N >= 2; the transforms below work for any N >= 1.
using Signal = std::vector<double>;

// Complex DFT of a Signal, indexed by k = 0..N-1. Spectra of real signals
// are conjugate-symmetric: bins[k] == conj(bins[(N-k) mod N]).
using Spectrum = std::vector<std::complex<double>>;

// Sparsity range [m1, m2]: counts of occupied bins in 0..floor(N/2),
// conjugate mirrors not counted.
struct SparsitySpec {
    std::size_t m1 = 0;
    std::size_t m2 = 0;

    // Validates 0 <= m1 <= m2 <= floor(n/2).
    static SparsitySpec make(std::size_t m1, std::size_t m2, std::size_t n);
};

// Relative magnitude cutoff used everywhere a bin counts as "occupied".
inline constexpr double kOccupiedRelTol = 1e-9;

// Forward DFT, bins[k] = sum_n x[n] * exp(-i*2*pi*n*k/N). Unnormalized.
Spectrum dft(const Signal& x);

// Inverse DFT with 1/N normalization. The input must be conjugate-symmetric;
// the imaginary residue is checked against 1e-8 * max(max|Re|, zero_scale)
// and discarded. Throws NonRealResult if the residue is larger. zero_scale
// lets a caller mark the amplitude below which a spectrum counts as zero:
// a band-pass output holding nothing but roundoff from a much larger
// signal is a zero signal, not a symmetry violation.
Signal idft(const Spectrum& spectrum, double zero_scale = 0.0);

// True when bins[k] == conj(bins[(N-k) mod N]) for all k, within
// rel_tol * max|bin|.
bool is_conjugate_symmetric(const Spectrum& spectrum, double rel_tol = 1e-10);

// Indices k in 0..N/2 with |bins[k]| > kOccupiedRelTol * max|bin|, ascending.
std::vector<std::size_t> occupied_bins(const Spectrum& spectrum);

// Random real signal whose spectrum has exactly m occupied bins at distinct
// positions in 0..n/2, coefficient magnitudes in [0.5, 1.5]*n, uniform phase
// (real-valued at bins 0 and n/2), mirrored conjugate halves. Deterministic
// per seed. Requires n even, n >= 2; throws InvalidSparsity if m > n/2.
Signal generate_sparse(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace cshatter
