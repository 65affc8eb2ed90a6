#include "cshatter/permute.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cshatter/errors.hpp"

namespace cshatter {
namespace {

template <typename T>
std::vector<T> apply_index_map(const std::vector<T>& v, std::uint64_t sigma) {
    const std::uint64_t n = v.size();
    if (n == 0) throw std::invalid_argument("permute: empty vector");
    if (std::gcd(sigma, n) != 1) {
        throw NotCoprime("permute: sigma = " + std::to_string(sigma) +
                         " shares a factor with n = " + std::to_string(n));
    }
    std::vector<T> out(v.size());
    for (std::uint64_t i = 0; i < n; ++i) out[i] = v[(sigma * i) % n];
    return out;
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t sigma, std::uint64_t n) {
    if (n < 2 || sigma == 0 || sigma >= n) {
        throw std::invalid_argument("mod_inverse: need 1 <= sigma < n, n >= 2");
    }
    // Extended Euclid on (sigma, n); signed intermediates since the
    // Bezout coefficient may go negative.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n);
    std::int64_t new_r = static_cast<std::int64_t>(sigma);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) {
        throw NotCoprime("mod_inverse: gcd(" + std::to_string(sigma) + ", " +
                         std::to_string(n) + ") = " + std::to_string(r));
    }
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

PermParam PermParam::make(std::uint64_t sigma, std::size_t n) {
    return PermParam{sigma, mod_inverse(sigma, n), n};
}

Signal permute(const Signal& x, std::uint64_t sigma) {
    return apply_index_map(x, sigma);
}

Signal inverse_permute(const Signal& x, std::uint64_t sigma) {
    return apply_index_map(x, mod_inverse(sigma, x.size()));
}

Spectrum permute_spectrum(const Spectrum& spectrum, std::uint64_t sigma) {
    return apply_index_map(spectrum, sigma);
}

}  // namespace cshatter
