#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cshatter/errors.hpp"
#include "cshatter/permute.hpp"
#include "cshatter/recon.hpp"
#include "cshatter/shatter.hpp"
#include "cshatter/signal.hpp"
#include "oracles.hpp"

using namespace cshatter;

namespace {

// Real signal whose spectrum occupies exactly the given folded bins, with
// coefficient magnitudes of order n.
Signal signal_with_support(std::size_t n, const std::vector<std::size_t>& support) {
    Spectrum bins(n, {0.0, 0.0});
    double phase = 0.3;
    for (std::size_t k : support) {
        if (k == 0 || k == n / 2) {
            bins[k] = static_cast<double>(n);
        } else {
            bins[k] = std::polar(static_cast<double>(n), phase);
            bins[n - k] = std::conj(bins[k]);
        }
        phase += 0.7;
    }
    return idft(bins);
}

double max_abs(const Signal& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(ShatterConfig::make(15, 3, 1, 0.01), BadBankShape);
    CHECK_THROWS_AS(ShatterConfig::make(16, 3, 1, 0.01), BadBankShape);
    CHECK_THROWS_AS(ShatterConfig::make(16, 4, 4, 0.01), NotCoprime);
    CHECK_THROWS_AS(ShatterConfig::make(16, 4, 0, 0.01), NotCoprime);
    CHECK_THROWS_AS(ShatterConfig::make(16, 4, 3, -1.0), std::invalid_argument);
    CHECK(ShatterConfig::make(16, 4, 3).threshold == kDefaultThreshold);
}

TEST_CASE("sensing angles are increasing and the columns pairwise independent") {
    const std::size_t n = 64;
    const SensingMatrix matrix(n);
    CHECK(matrix.theta(0) == 0.0);
    CHECK(matrix.theta(n / 2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    for (std::size_t s = 0; s + 1 <= n / 2; ++s) {
        CHECK(matrix.theta(s) < matrix.theta(s + 1));
    }
    // (cos, sin) pairs are non-parallel: the 2x2 determinant never vanishes
    const auto& c = matrix.cos_table();
    const auto& s = matrix.sin_table();
    for (std::size_t i = 0; i <= n / 2; ++i) {
        for (std::size_t j = i + 1; j <= n / 2; ++j) {
            CHECK(std::abs(c[i] * s[j] - c[j] * s[i]) > 1e-3);
        }
    }
}

TEST_CASE("sparsity ranges validate and gate the filter count") {
    CHECK_THROWS_AS(SparsitySpec::make(10, 5, 64), InvalidSparsity);
    CHECK_THROWS_AS(SparsitySpec::make(0, 40, 64), InvalidSparsity);
    const SparsitySpec spec = SparsitySpec::make(5, 25, 1000);
    require_filter_capacity(ShatterConfig::make(1000, 100, 11), spec);  // t >= m2 passes
    CHECK_THROWS_AS(require_filter_capacity(ShatterConfig::make(1000, 20, 11), spec),
                    BadBankShape);
}

TEST_CASE("shattering the zero signal yields T zero signals") {
    const auto parts = shatter(Signal(16, 0.0), ShatterConfig::make(16, 4, 3));
    CHECK(parts.size() == 4);
    for (const auto& p : parts) CHECK(max_abs(p) == 0.0);
}

TEST_CASE("T=1 with sigma=1 reproduces the input") {
    const Signal x = oracle::random_signal(16, 2);
    const auto parts = shatter(x, ShatterConfig::make(16, 1, 1));
    REQUIRE(parts.size() == 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(parts[0][i] == doctest::Approx(x[i]).epsilon(1e-12));
    }
}

TEST_CASE("sigma=3 de-clusters the support {5,6,7} at N=16, T=4") {
    // positions (3*k) mod 16 of 5, 6, 7 are 15, 2, 5 -> filters 1, 2, 3
    const Signal x = signal_with_support(16, {5, 6, 7});
    const auto parts = shatter(x, ShatterConfig::make(16, 4, 3));

    const auto counts = check_shatter_validity(parts);
    CHECK(counts == std::vector<std::size_t>{1, 1, 1, 0});

    CHECK(occupied_bins(dft(parts[0])) == std::vector<std::size_t>{5});
    CHECK(occupied_bins(dft(parts[1])) == std::vector<std::size_t>{6});
    CHECK(occupied_bins(dft(parts[2])) == std::vector<std::size_t>{7});
}

TEST_CASE("shattered signals sum back to the input") {
    struct Fixture {
        std::size_t n, t;
        std::uint64_t sigma;
    };
    for (const auto& [n, t, sigma] : {Fixture{16, 4, 3}, Fixture{64, 8, 5},
                                      Fixture{100, 10, 7}, Fixture{256, 32, 11}}) {
        const Signal x = oracle::random_signal(n, n + t);
        const auto parts = shatter(x, ShatterConfig::make(n, t, sigma));
        Signal sum(n, 0.0);
        for (const auto& p : parts) {
            for (std::size_t i = 0; i < n; ++i) sum[i] += p[i];
        }
        const double scale = max_abs(x);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(sum[i] - x[i]) < 1e-9 * scale);
        }
    }
}

TEST_CASE("check_shatter_validity counts zero for the all-zero list") {
    const std::vector<Signal> parts(4, Signal(16, 0.0));
    CHECK(check_shatter_validity(parts) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("sigma=1 leaves the cluster {2,3} in one filter") {
    const Signal x = signal_with_support(16, {2, 3});
    const auto parts = shatter(x, ShatterConfig::make(16, 4, 1));
    CHECK_THROWS_AS(check_shatter_validity(parts), ShatterCollision);
    CHECK_THROWS_AS(encode(x, ShatterConfig::make(16, 4, 1)), ShatterCollision);
}

TEST_CASE("sense_one trivial spectra") {
    const SensingMatrix matrix(16);

    auto [z0, z1] = sense_one(Signal(16, 0.0), matrix);
    CHECK(std::abs(z0) == 0.0);
    CHECK(std::abs(z1) == 0.0);

    // DC-only: X(0) = beta, theta_0 = 0
    const double beta = 48.0;
    auto [d0, d1] = sense_one(Signal(16, beta / 16.0), matrix);
    CHECK(std::abs(d0 - beta) < 1e-12 * beta);
    CHECK(std::abs(d1) < 1e-12 * beta);

    // Nyquist-only: X(N/2) = beta, theta_{N/2} = pi/2
    Signal nyquist(16);
    for (std::size_t i = 0; i < 16; ++i) nyquist[i] = (i % 2 == 0 ? beta : -beta) / 16.0;
    auto [n0, n1] = sense_one(nyquist, matrix);
    CHECK(std::abs(n0) < 1e-12 * beta);
    CHECK(std::abs(n1 - beta) < 1e-12 * beta);
}

TEST_CASE("measurement l2 norm equals the lone coefficient magnitude") {
    const std::size_t n = 64;
    const SensingMatrix matrix(n);
    for (std::size_t alpha : {0ul, 1ul, 13ul, 31ul, 32ul}) {
        const Signal x = signal_with_support(n, {alpha});
        const double beta = static_cast<double>(n);
        auto [y0, y1] = sense_one(x, matrix);
        const double l2 = std::sqrt(std::norm(y0) + std::norm(y1));
        CHECK(l2 == doctest::Approx(beta).epsilon(1e-12));
    }
}

TEST_CASE("encode keeps one entry per occupied frequency") {
    for (std::size_t m : {5ul, 25ul}) {
        const Signal x = generate_sparse(1000, m, 2024 + m);
        const auto support = occupied_bins(dft(x));
        const std::uint64_t sigma = find_sigma(1000, 100, support, 1);
        const MeasurementSet set = encode(x, ShatterConfig::make(1000, 100, sigma));
        CHECK(set.entries.size() == m);  // 4m stored real values

        // entries strictly increasing in filter index, all above threshold
        for (std::size_t i = 0; i < set.entries.size(); ++i) {
            if (i > 0) CHECK(set.entries[i].filter > set.entries[i - 1].filter);
            CHECK(set.entries[i].l2() >= set.threshold);
        }
    }
}

TEST_CASE("encode of the zero signal keeps nothing") {
    CHECK(encode(Signal(16, 0.0), ShatterConfig::make(16, 4, 3)).entries.empty());
}

TEST_CASE("threshold drops weak coefficients") {
    const std::size_t n = 16;
    Spectrum bins(n, {0.0, 0.0});
    bins[5] = {32.0, 0.0};
    bins[11] = {32.0, 0.0};
    bins[6] = {0.001, 0.0};  // below the 0.01 cutoff
    bins[10] = {0.001, 0.0};
    const Signal x = idft(bins);

    const MeasurementSet set = encode(x, ShatterConfig::make(n, 4, 3));
    REQUIRE(set.entries.size() == 1);
    CHECK(set.entries[0].l2() == doctest::Approx(32.0).epsilon(1e-9));
}

TEST_CASE("encode is deterministic") {
    const Signal x = generate_sparse(1000, 5, 31);
    const auto cfg = ShatterConfig::make(1000, 100, find_sigma(1000, 100,
                                         occupied_bins(dft(x)), 1));
    const MeasurementSet a = encode(x, cfg);
    const MeasurementSet b = encode(x, cfg);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].filter == b.entries[i].filter);
        CHECK(a.entries[i].y0 == b.entries[i].y0);
        CHECK(a.entries[i].y1 == b.entries[i].y1);
    }
}

TEST_CASE("find_sigma on a DC-only support returns 1") {
    CHECK(find_sigma(16, 4, {0}, 1) == 1);
}

TEST_CASE("find_sigma admits sigma=11 for a support built for it") {
    // Pick one permuted position inside each of 25 distinct bands, then map
    // back through sigma^-1 = 91 and fold; sigma = 11 is valid by
    // construction and is the first candidate tried.
    const std::size_t n = 1000, t = 100;
    const std::uint64_t sigma_inv = mod_inverse(11, n);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < 25; ++j) {
        const std::size_t pos = 5 * j + 2;
        const std::size_t k = (sigma_inv * pos) % n;
        support.push_back(std::min(k, n - k));
    }
    std::sort(support.begin(), support.end());
    CHECK(find_sigma(n, t, support, 11) == 11);

    // the harness agreement: an actual signal on this support encodes
    // cleanly under sigma = 11
    const Signal x = signal_with_support(n, support);
    const auto parts = shatter(x, ShatterConfig::make(n, t, 11));
    const auto counts = check_shatter_validity(parts);
    std::size_t occupied = 0;
    for (auto c : counts) occupied += c;
    CHECK(occupied == 25);
    CHECK(encode(x, ShatterConfig::make(n, t, 11)).entries.size() == 25);
}

TEST_CASE("find_sigma fails by pigeonhole when the support exceeds T") {
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k <= 5; ++k) support.push_back(k);
    CHECK_THROWS_AS(find_sigma(16, 4, support, 1), NoValidSigma);
}

TEST_CASE("find_sigma rejects out-of-range support bins") {
    CHECK_THROWS_AS(find_sigma(16, 4, {9}, 1), std::invalid_argument);
}
