#pragma once

#include <cstdint>
#include <vector>

#include "cshatter/signal.hpp"

namespace cshatter {

// Modular inverse: the unique t in 1..n-1 with (sigma * t) mod n == 1.
// Throws NotCoprime if gcd(sigma, n) != 1.
std::uint64_t mod_inverse(std::uint64_t sigma, std::uint64_t n);

// Validated permutation parameter pair for modulus n.
struct PermParam {
    std::uint64_t sigma = 1;
    std::uint64_t sigma_inv = 1;
    std::size_t n = 0;

    static PermParam make(std::uint64_t sigma, std::size_t n);
};

// Index permutation out[i] = in[(sigma * i) mod N]. Bijective whenever
// gcd(sigma, N) == 1; throws NotCoprime otherwise. The same index map
// serves the time domain and, with sigma_inv, the spectral domain: the
// spectrum of permute(x, sigma) equals permute_spectrum(dft(x), sigma_inv).
Signal permute(const Signal& x, std::uint64_t sigma);
Signal inverse_permute(const Signal& x, std::uint64_t sigma);
Spectrum permute_spectrum(const Spectrum& spectrum, std::uint64_t sigma);

}  // namespace cshatter
