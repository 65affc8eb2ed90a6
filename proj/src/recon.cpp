#include "cshatter/recon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cshatter/errors.hpp"

namespace cshatter {

RecoveredAtom recover_atom(std::complex<double> y0, std::complex<double> y1, std::size_t n) {
    const double norm = std::sqrt(std::norm(y0) + std::norm(y1));
    if (norm == 0.0) {
        throw std::invalid_argument("recover_atom: zero measurement (threshold upstream)");
    }
    // |y0|/norm can exceed 1 by rounding; clamp before arccos.
    const double ratio = std::min(1.0, std::abs(y0) / norm);
    const double theta = std::acos(ratio);
    const double step = std::numbers::pi / static_cast<double>(n);

    const double exact_index = theta / step;
    const auto alpha = static_cast<std::size_t>(std::llround(exact_index));
    if (std::abs(theta - static_cast<double>(alpha) * step) >= 1e-6) {
        throw OffGridAngle("recover_atom: angle " + std::to_string(theta) +
                           " is not a multiple of pi/" + std::to_string(n));
    }

    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::complex<double> beta = (c >= s) ? y0 / c : y1 / s;
    return RecoveredAtom{alpha, beta};
}

Spectrum atom_to_spectrum(const RecoveredAtom& atom, std::size_t n) {
    if (atom.alpha > n / 2) {
        throw std::invalid_argument("atom_to_spectrum: alpha " + std::to_string(atom.alpha) +
                                    " outside 0..n/2");
    }
    Spectrum bins(n, {0.0, 0.0});
    bins[atom.alpha] = atom.beta;
    if (atom.alpha != 0 && atom.alpha != n / 2) {
        bins[n - atom.alpha] = std::conj(atom.beta);
    }
    return bins;
}

Signal decode(const MeasurementSet& measurements) {
    const std::size_t n = measurements.n;
    if (n < 2) throw std::invalid_argument("decode: measurement set has invalid length");

    Spectrum total(n, {0.0, 0.0});
    for (const auto& entry : measurements.entries) {
        const RecoveredAtom atom = recover_atom(entry.y0, entry.y1, n);
        total[atom.alpha] += atom.beta;
        if (atom.alpha != 0 && atom.alpha != n / 2) {
            total[n - atom.alpha] += std::conj(atom.beta);
        }
    }
    return idft(total);
}

}  // namespace cshatter
