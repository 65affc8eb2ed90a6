#pragma once

#include <complex>
#include <cstddef>

#include "cshatter/shatter.hpp"
#include "cshatter/signal.hpp"

namespace cshatter {

// One recovered frequency: bin index alpha in 0..N/2 and its complex
// coefficient beta. beta is real (within rounding) when alpha is a
// self-mirrored bin (0 or N/2).
struct RecoveredAtom {
    std::size_t alpha;
    std::complex<double> beta;
};

// Closed-form inversion of one measurement pair. The angle
// Theta = arccos(|y0| / sqrt(|y0|^2 + |y1|^2)) is a multiple of pi/N by
// construction; alpha is its rounded grid index, verified to lie within
// 1e-6 of the grid. beta = y0/cos(Theta) on the lower half of the angle
// range and y1/sin(Theta) on the upper half, which keeps the division
// well-conditioned and covers the Nyquist bin where cos vanishes.
// Throws OffGridAngle when the angle check fails (corrupted measurements
// or a collision that escaped encoding).
RecoveredAtom recover_atom(std::complex<double> y0, std::complex<double> y1, std::size_t n);

// Spectrum holding beta at bin alpha and conj(beta) at bin N-alpha; the
// self-mirrored bins 0 and N/2 are written once.
Spectrum atom_to_spectrum(const RecoveredAtom& atom, std::size_t n);

// Recovers every retained entry, sums the per-filter spectra, and inverse
// transforms. An empty entry list yields the zero signal.
Signal decode(const MeasurementSet& measurements);

}  // namespace cshatter
