#include "cshatter/filterbank.hpp"

#include <stdexcept>
#include <string>

#include "cshatter/errors.hpp"

namespace cshatter {

FilterBank FilterBank::build(std::size_t n, std::size_t t) {
    if (n < 2 || n % 2 != 0) {
        throw BadBankShape("build_bank: n = " + std::to_string(n) + " must be even and >= 2");
    }
    if (t < 1 || (n / 2) % t != 0) {
        throw BadBankShape("build_bank: t = " + std::to_string(t) +
                           " must divide n/2 = " + std::to_string(n / 2));
    }

    const std::size_t width = n / (2 * t);
    FilterBank bank(n, t);
    bank.masks_.assign(t, std::vector<std::uint8_t>(n, 0));
    for (std::size_t b = 1; b <= t; ++b) {
        auto& mask = bank.masks_[b - 1];
        const std::size_t low_begin = (b - 1) * width;
        const std::size_t low_end = b * width;  // exclusive
        for (std::size_t k = low_begin; k < low_end; ++k) mask[k] = 1;

        // Mirrored band (a1, a2]; the first filter's a2 is clamped to n-1
        // because bin 0 mirrors onto itself.
        const std::size_t a1 = n - b * width;
        const std::size_t a2 = (b == 1) ? n - 1 : n - (b - 1) * width;
        for (std::size_t k = a1 + 1; k <= a2; ++k) mask[k] = 1;

        if (b == t) mask[n / 2] = 1;  // self-mirrored Nyquist bin
    }

    bank.bin_to_filter_.assign(n, 0);
    for (std::size_t b = 1; b <= t; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
            if (bank.masks_[b - 1][k]) bank.bin_to_filter_[k] = b;
        }
    }
    return bank;
}

const std::vector<std::uint8_t>& FilterBank::mask(std::size_t b) const {
    if (b < 1 || b > t_) throw std::out_of_range("FilterBank::mask: filter index");
    return masks_[b - 1];
}

std::size_t FilterBank::filter_of_bin(std::size_t k) const {
    if (k >= n_) throw std::out_of_range("FilterBank::filter_of_bin: bin index");
    return bin_to_filter_[k];
}

Spectrum FilterBank::apply(const Spectrum& spectrum, std::size_t b) const {
    if (spectrum.size() != n_) {
        throw LengthMismatch("apply_filter: spectrum length " + std::to_string(spectrum.size()) +
                             " != bank length " + std::to_string(n_));
    }
    const auto& m = mask(b);
    Spectrum out(n_, {0.0, 0.0});
    for (std::size_t k = 0; k < n_; ++k) {
        if (m[k]) out[k] = spectrum[k];
    }
    return out;
}

}  // namespace cshatter
