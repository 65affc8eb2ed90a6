#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cshatter/errors.hpp"
#include "cshatter/permute.hpp"
#include "cshatter/signal.hpp"
#include "oracles.hpp"

using namespace cshatter;

TEST_CASE("mod_inverse on known pairs") {
    CHECK(mod_inverse(3, 16) == 11);
    CHECK(mod_inverse(1, 100) == 1);
    CHECK(mod_inverse(11, 1000) == 91);
    CHECK(mod_inverse(11, 1000) == oracle::mod_inverse_scan(11, 1000));
}

TEST_CASE("mod_inverse rejects non-coprime and out-of-range inputs") {
    CHECK_THROWS_AS(mod_inverse(4, 16), NotCoprime);
    CHECK_THROWS_AS(mod_inverse(0, 16), std::invalid_argument);
    CHECK_THROWS_AS(mod_inverse(16, 16), std::invalid_argument);
}

TEST_CASE("mod_inverse round trip over all coprime sigma") {
    for (std::uint64_t n : {16ull, 100ull, 1000ull}) {
        for (std::uint64_t s = 1; s < n; ++s) {
            if (std::gcd(s, n) != 1) continue;
            const std::uint64_t inv = mod_inverse(s, n);
            CHECK((s * inv) % n == 1);
            CHECK(mod_inverse(inv, n) == s);
        }
    }
}

TEST_CASE("permute with sigma = 1 is the identity") {
    const Signal x = oracle::random_signal(16, 1);
    CHECK(permute(x, 1) == x);
    CHECK(inverse_permute(x, 1) == x);
}

TEST_CASE("permute index map at N=16, sigma=3") {
    Signal x(16);
    for (std::size_t i = 0; i < 16; ++i) x[i] = static_cast<double>(i);
    const Signal p = permute(x, 3);
    CHECK(p[1] == x[3]);
    CHECK(p[5] == x[15]);

    const Signal back = inverse_permute(p, 3);
    CHECK(back == x);
    CHECK(back[5] == x[5]);
}

TEST_CASE("permute rejects sigma sharing a factor with N") {
    CHECK_THROWS_AS(permute(Signal(16, 0.0), 4), NotCoprime);
    CHECK_THROWS_AS(inverse_permute(Signal(16, 0.0), 6), NotCoprime);
}

TEST_CASE("permute round trip is exact at N=1000") {
    const Signal x = oracle::random_signal(1000, 5);
    CHECK(inverse_permute(permute(x, 11), 11) == x);
    CHECK(permute(inverse_permute(x, 11), 11) == x);
}

TEST_CASE("permutation preserves the sample multiset") {
    const Signal x = oracle::random_signal(100, 9);
    Signal a = x, b = permute(x, 7);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("PermParam validates and pairs the inverse") {
    const PermParam p = PermParam::make(3, 16);
    CHECK(p.sigma_inv == 11);
    CHECK((p.sigma * p.sigma_inv) % p.n == 1);
    CHECK_THROWS_AS(PermParam::make(8, 16), NotCoprime);
}

TEST_CASE("spectral duality: permuting time permutes frequency with the inverse") {
    for (std::size_t n : {16ul, 100ul, 256ul}) {
        for (std::uint64_t sigma : {3ull, 7ull, 11ull}) {
            if (std::gcd(sigma, static_cast<std::uint64_t>(n)) != 1) continue;
            const Signal x = oracle::random_signal(n, n + sigma);
            const Spectrum lhs = dft(permute(x, sigma));
            const Spectrum rhs = permute_spectrum(dft(x), mod_inverse(sigma, n));
            double scale = 0.0, err = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                scale = std::max(scale, std::abs(rhs[k]));
                err = std::max(err, std::abs(lhs[k] - rhs[k]));
            }
            CHECK(err < 1e-9 * scale);
        }
    }
}
