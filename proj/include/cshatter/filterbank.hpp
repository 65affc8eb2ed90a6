#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cshatter/signal.hpp"

namespace cshatter {

// Bank of T ideal non-overlapping band-pass filters over N DFT bins.
//
// Filter b (1-based) passes the low band [(b-1)*N/(2T), b*N/(2T)) together
// with its mirrored high band (N - b*N/(2T), N - (b-1)*N/(2T)], where the
// first filter's high band ends at N-1 and the last filter additionally
// passes the self-mirrored bin N/2. The masks partition the bins: every bin
// is passed by exactly one filter, so the filter outputs sum back to the
// input. Applying a mask bin-wise equals circular convolution with the
// mask's inverse transform.
class FilterBank {
public:
    // Requires n even and t a divisor of n/2; throws BadBankShape otherwise.
    static FilterBank build(std::size_t n, std::size_t t);

    std::size_t n() const noexcept { return n_; }
    std::size_t filter_count() const noexcept { return t_; }

    // 0/1 mask of filter b, 1 <= b <= filter_count().
    const std::vector<std::uint8_t>& mask(std::size_t b) const;

    // Which filter (1-based) passes bin k.
    std::size_t filter_of_bin(std::size_t k) const;

    // Bin-wise product spectrum[k] * mask(b)[k].
    // Throws LengthMismatch if the spectrum length differs from n().
    Spectrum apply(const Spectrum& spectrum, std::size_t b) const;

private:
    FilterBank(std::size_t n, std::size_t t) : n_(n), t_(t) {}

    std::size_t n_;
    std::size_t t_;
    std::vector<std::vector<std::uint8_t>> masks_;
    std::vector<std::size_t> bin_to_filter_;
};

}  // namespace cshatter
