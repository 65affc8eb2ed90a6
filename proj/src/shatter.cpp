#include "cshatter/shatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cshatter/errors.hpp"
#include "cshatter/permute.hpp"

namespace cshatter {

ShatterConfig ShatterConfig::make(std::size_t n, std::size_t t, std::uint64_t sigma,
                                  double threshold) {
    if (n < 2 || n % 2 != 0) {
        throw BadBankShape("ShatterConfig: n = " + std::to_string(n) + " must be even and >= 2");
    }
    if (t < 1 || (n / 2) % t != 0) {
        throw BadBankShape("ShatterConfig: t = " + std::to_string(t) +
                           " must divide n/2 = " + std::to_string(n / 2));
    }
    if (sigma == 0 || sigma >= n || std::gcd(sigma, static_cast<std::uint64_t>(n)) != 1) {
        throw NotCoprime("ShatterConfig: sigma = " + std::to_string(sigma) +
                         " is not coprime to n = " + std::to_string(n));
    }
    if (!(threshold >= 0.0)) {
        throw std::invalid_argument("ShatterConfig: threshold must be >= 0");
    }
    return ShatterConfig{n, t, sigma, threshold};
}

SensingMatrix::SensingMatrix(std::size_t n) : n_(n), angle_step_(std::numbers::pi / n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("SensingMatrix: n must be even and >= 2");
    }
    cos_.resize(n / 2 + 1);
    sin_.resize(n / 2 + 1);
    for (std::size_t s = 0; s <= n / 2; ++s) {
        cos_[s] = std::cos(angle_step_ * s);
        sin_[s] = std::sin(angle_step_ * s);
    }
    cos_[n / 2] = 0.0;  // theta = pi/2 exactly
    sin_[0] = 0.0;
}

std::vector<Signal> shatter(const Signal& x, const ShatterConfig& config) {
    if (x.size() != config.n) {
        throw LengthMismatch("shatter: signal length " + std::to_string(x.size()) +
                             " != config.n = " + std::to_string(config.n));
    }
    const FilterBank bank = FilterBank::build(config.n, config.t);
    const Spectrum permuted = dft(permute(x, config.sigma));

    // Filters that capture nothing emit roundoff-level junk; amplitudes at
    // the input's noise floor are zero signals, not symmetry violations.
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));

    std::vector<Signal> shattered;
    shattered.reserve(config.t);
    for (std::size_t b = 1; b <= config.t; ++b) {
        shattered.push_back(
            inverse_permute(idft(bank.apply(permuted, b), scale), config.sigma));
    }
    return shattered;
}

std::vector<std::size_t> check_shatter_validity(const std::vector<Signal>& shattered) {
    std::vector<Spectrum> spectra;
    spectra.reserve(shattered.size());
    double global_max = 0.0;
    for (const auto& s : shattered) {
        spectra.push_back(dft(s));
        for (const auto& z : spectra.back()) global_max = std::max(global_max, std::abs(z));
    }

    const double cutoff = kOccupiedRelTol * global_max;
    std::vector<std::size_t> counts(shattered.size(), 0);
    for (std::size_t g = 0; g < spectra.size(); ++g) {
        for (std::size_t k = 0; k <= spectra[g].size() / 2; ++k) {
            if (std::abs(spectra[g][k]) > cutoff) ++counts[g];
        }
        if (counts[g] > 1) {
            throw ShatterCollision("filter " + std::to_string(g + 1) + " captured " +
                                   std::to_string(counts[g]) +
                                   " frequencies; pick a different sigma");
        }
    }
    return counts;
}

std::pair<std::complex<double>, std::complex<double>> sense_one(const Signal& shattered,
                                                                const SensingMatrix& matrix) {
    if (shattered.size() != matrix.n()) {
        throw LengthMismatch("sense_one: signal length does not match sensing matrix");
    }
    const Spectrum bins = dft(shattered);
    std::complex<double> y0{0.0, 0.0};
    std::complex<double> y1{0.0, 0.0};
    const auto& c = matrix.cos_table();
    const auto& s = matrix.sin_table();
    for (std::size_t k = 0; k < c.size(); ++k) {
        y0 += c[k] * bins[k];
        y1 += s[k] * bins[k];
    }
    return {y0, y1};
}

MeasurementSet encode(const Signal& x, const ShatterConfig& config) {
    const std::vector<Signal> shattered = shatter(x, config);
    check_shatter_validity(shattered);

    const SensingMatrix matrix(config.n);
    MeasurementSet set{config.n, config.t, config.sigma, config.threshold, {}};
    for (std::size_t g = 0; g < shattered.size(); ++g) {
        auto [y0, y1] = sense_one(shattered[g], matrix);
        Measurement m{g + 1, y0, y1};
        if (m.l2() >= config.threshold) set.entries.push_back(m);
    }
    return set;
}

void require_filter_capacity(const ShatterConfig& config, const SparsitySpec& spec) {
    if (config.t < spec.m2) {
        throw BadBankShape("filter count t = " + std::to_string(config.t) +
                           " cannot isolate up to m2 = " + std::to_string(spec.m2) +
                           " frequencies");
    }
}

std::uint64_t find_sigma(std::size_t n, std::size_t t,
                         const std::vector<std::size_t>& support, std::uint64_t start) {
    const FilterBank bank = FilterBank::build(n, t);
    for (std::size_t k : support) {
        if (k > n / 2) {
            throw std::invalid_argument("find_sigma: support bin " + std::to_string(k) +
                                        " outside 0..n/2");
        }
    }
    if (support.size() > t) {
        throw NoValidSigma("find_sigma: " + std::to_string(support.size()) +
                           " frequencies cannot land in " + std::to_string(t) +
                           " distinct filters");
    }

    auto valid = [&](std::uint64_t sigma) {
        std::vector<std::uint8_t> hit(t + 1, 0);
        for (std::size_t k : support) {
            const std::size_t pos = (sigma * k) % n;
            const std::size_t b = bank.filter_of_bin(pos);
            if (hit[b]) return false;
            hit[b] = 1;
        }
        return true;
    };

    // Odd candidates first, then even (only reachable when n is odd).
    for (int parity : {1, 0}) {
        std::uint64_t sigma = std::max<std::uint64_t>(start, 1);
        if (sigma % 2 != static_cast<std::uint64_t>(parity)) ++sigma;
        for (; sigma < n; sigma += 2) {
            if (std::gcd(sigma, static_cast<std::uint64_t>(n)) != 1) continue;
            if (valid(sigma)) return sigma;
        }
    }
    throw NoValidSigma("find_sigma: no sigma in [" + std::to_string(start) + ", " +
                       std::to_string(n) + ") de-clusters the support for t = " +
                       std::to_string(t));
}

}  // namespace cshatter
