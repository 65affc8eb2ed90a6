#include "cshatter/signal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "cshatter/errors.hpp"

namespace cshatter {
namespace {

// FFTW plans are cached per (length, direction); plan creation is not
// thread-safe, execution via the new-array interface is.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(std::vector<std::complex<double>>& inout, int direction) {
        const std::size_t n = inout.size();
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(n, direction);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<std::complex<double>> probe(n);
                plan = fftw_plan_dft_1d(
                    static_cast<int>(n),
                    reinterpret_cast<fftw_complex*>(probe.data()),
                    reinterpret_cast<fftw_complex*>(probe.data()),
                    direction, FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        fftw_execute_dft(plan,
                         reinterpret_cast<fftw_complex*>(inout.data()),
                         reinterpret_cast<fftw_complex*>(inout.data()));
    }

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

double max_abs(const Spectrum& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

SparsitySpec SparsitySpec::make(std::size_t m1, std::size_t m2, std::size_t n) {
    if (m1 > m2 || m2 > n / 2) {
        throw InvalidSparsity("SparsitySpec: need 0 <= m1 <= m2 <= n/2, got [" +
                              std::to_string(m1) + ", " + std::to_string(m2) + "] at n = " +
                              std::to_string(n));
    }
    return SparsitySpec{m1, m2};
}

Spectrum dft(const Signal& x) {
    if (x.empty()) throw std::invalid_argument("dft: empty signal");
    Spectrum bins(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) bins[n] = x[n];
    PlanCache::instance().execute(bins, FFTW_FORWARD);
    return bins;
}

Signal idft(const Spectrum& spectrum, double zero_scale) {
    if (spectrum.empty()) throw std::invalid_argument("idft: empty spectrum");
    const std::size_t n = spectrum.size();
    Spectrum work = spectrum;
    PlanCache::instance().execute(work, FFTW_BACKWARD);

    double re_max = 0.0;
    double im_max = 0.0;
    for (const auto& z : work) {
        re_max = std::max(re_max, std::abs(z.real()));
        im_max = std::max(im_max, std::abs(z.imag()));
    }
    if (im_max > 1e-8 * std::max(re_max, zero_scale * static_cast<double>(n))) {
        throw NonRealResult("idft: imaginary residue " + std::to_string(im_max / n) +
                            " exceeds tolerance; spectrum is not conjugate-symmetric");
    }

    Signal x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = work[i].real() / static_cast<double>(n);
    return x;
}

bool is_conjugate_symmetric(const Spectrum& spectrum, double rel_tol) {
    const std::size_t n = spectrum.size();
    const double tol = rel_tol * max_abs(spectrum);
    for (std::size_t k = 0; k < n; ++k) {
        const auto mirror = std::conj(spectrum[(n - k) % n]);
        if (std::abs(spectrum[k] - mirror) > tol) return false;
    }
    return true;
}

std::vector<std::size_t> occupied_bins(const Spectrum& spectrum) {
    const double cutoff = kOccupiedRelTol * max_abs(spectrum);
    std::vector<std::size_t> occupied;
    for (std::size_t k = 0; k <= spectrum.size() / 2; ++k) {
        if (std::abs(spectrum[k]) > cutoff) occupied.push_back(k);
    }
    return occupied;
}

Signal generate_sparse(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("generate_sparse: signal length must be even and >= 2");
    }
    if (m > n / 2) {
        throw InvalidSparsity("generate_sparse: sparsity " + std::to_string(m) +
                              " exceeds floor(n/2) = " + std::to_string(n / 2));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> position(0, n / 2);
    std::uniform_real_distribution<double> magnitude(0.5, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    std::unordered_set<std::size_t> chosen;
    while (chosen.size() < m) chosen.insert(position(rng));

    // Iterate positions in a deterministic order independent of set layout.
    std::vector<std::size_t> positions(chosen.begin(), chosen.end());
    std::sort(positions.begin(), positions.end());

    Spectrum bins(n, {0.0, 0.0});
    for (std::size_t k : positions) {
        const double mag = magnitude(rng) * static_cast<double>(n);
        const double ph = phase(rng);
        if (k == 0 || k == n / 2) {
            // Self-mirrored bins must stay real for a real signal.
            bins[k] = mag * (ph < std::numbers::pi ? 1.0 : -1.0);
        } else {
            bins[k] = std::polar(mag, ph);
            bins[n - k] = std::conj(bins[k]);
        }
    }
    return idft(bins);
}

}  // namespace cshatter
