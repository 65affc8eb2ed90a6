#include "cshatter/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cshatter/baseline.hpp"
#include "cshatter/errors.hpp"
#include "cshatter/recon.hpp"

namespace cshatter {
namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SweepRow run_row(const SweepConfig& config, std::size_t m, std::uint64_t seed,
                 std::size_t stored_cs) {
    SweepRow row{m, std::nullopt, std::nullopt, stored_cs, std::nullopt, "ok"};
    try {
        const Signal x = generate_sparse(config.n, m, seed);
        const std::vector<std::size_t> support = occupied_bins(dft(x));

        MeasurementSet measurements;
        bool encoded = false;
        if (config.preferred_sigma) {
            try {
                measurements = encode(
                    x, ShatterConfig::make(config.n, config.t, *config.preferred_sigma,
                                           config.threshold));
                row.sigma = *config.preferred_sigma;
                encoded = true;
            } catch (const ShatterCollision&) {
                // fall through to the search
            }
        }
        if (!encoded) {
            const std::uint64_t sigma = find_sigma(config.n, config.t, support, 1);
            measurements =
                encode(x, ShatterConfig::make(config.n, config.t, sigma, config.threshold));
            row.sigma = sigma;
        }

        const Signal decoded = decode(measurements);
        double err = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            err = std::max(err, std::abs(decoded[i] - x[i]));
        }
        row.stored_shatter = 4 * measurements.entries.size();
        row.max_abs_err = err;
    } catch (const DomainError& e) {
        row.status = e.name();
    }
    return row;
}

}  // namespace

SweepResult sweep_measurements(const SweepConfig& config) {
    if (config.m_values.empty()) {
        throw std::invalid_argument("sweep: need at least one sparsity value");
    }
    std::vector<std::size_t> m_values = config.m_values;
    std::sort(m_values.begin(), m_values.end());  // rows are emitted sorted by m
    const std::size_t m_max = m_values.back();
    const std::size_t stored_cs =
        CsConfig{config.n, m_max, config.multiplier, 0}.measurement_count();

    SweepResult result{config, {}};
    result.rows.reserve(m_values.size());
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        result.rows.push_back(run_row(config, m_values[i], config.base_seed + i, stored_cs));
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string csv = "m,sigma,stored_shatter,stored_cs,max_abs_err_shatter,status\n";
    for (const auto& row : result.rows) {
        csv += std::to_string(row.m) + ',';
        csv += row.sigma ? std::to_string(*row.sigma) : std::string{};
        csv += ',';
        csv += row.stored_shatter ? std::to_string(*row.stored_shatter) : std::string{};
        csv += ',' + std::to_string(row.stored_cs) + ',';
        csv += row.max_abs_err ? format_double(*row.max_abs_err) : std::string{};
        csv += ',' + row.status + '\n';
    }
    return csv;
}

}  // namespace cshatter
