#pragma once

#include <filesystem>
#include <string>

#include "cshatter/shatter.hpp"
#include "cshatter/signal.hpp"

namespace cshatter {

enum class SignalFormat { f64, csv };

// Picks f64 for ".f64", csv for ".csv"; anything else defaults to f64.
SignalFormat format_from_extension(const std::filesystem::path& path);

// Raw little-endian 64-bit floats, no header.
void write_signal_f64(const std::filesystem::path& path, const Signal& x);
Signal read_signal_f64(const std::filesystem::path& path);

// Single column with header "sample".
void write_signal_csv(const std::filesystem::path& path, const Signal& x);
Signal read_signal_csv(const std::filesystem::path& path);

void write_signal(const std::filesystem::path& path, const Signal& x, SignalFormat format);
Signal read_signal(const std::filesystem::path& path, SignalFormat format);

// MeasurementSet wire format:
// {"n":N,"t":T,"sigma":S,"threshold":TH,
//  "entries":[{"filter":C,"y0_re":..,"y0_im":..,"y1_re":..,"y1_im":..},..]}
// entries sorted by filter index.
std::string measurement_set_to_json(const MeasurementSet& set);
MeasurementSet measurement_set_from_json(const std::string& text);

void write_measurement_set(const std::filesystem::path& path, const MeasurementSet& set);
MeasurementSet read_measurement_set(const std::filesystem::path& path);

}  // namespace cshatter
