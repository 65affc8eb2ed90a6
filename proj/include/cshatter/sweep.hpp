#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cshatter/shatter.hpp"

namespace cshatter {

// Parameters of one measurement-count sweep: for each sparsity m a fresh
// signal is generated, encoded with an auto-searched (or preferred) sigma,
// decoded, and tallied against the constant conventional measurement count
// ceil(multiplier * max(m_values)).
struct SweepConfig {
    std::size_t n;
    std::size_t t;
    std::vector<std::size_t> m_values;
    double multiplier = 7.0;
    double threshold = kDefaultThreshold;
    std::uint64_t base_seed = 0;
    std::optional<std::uint64_t> preferred_sigma;  // tried first when set
};

// One sweep row. On a domain failure the numeric fields other than m and
// stored_cs are absent and `status` names the error instead of "ok".
struct SweepRow {
    std::size_t m;
    std::optional<std::uint64_t> sigma;
    std::optional<std::size_t> stored_shatter;
    std::size_t stored_cs;
    std::optional<double> max_abs_err;
    std::string status;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

// Runs the sweep in ascending-m order; per-row seeds derive from base_seed
// plus the sorted row index, so reruns are bytewise identical. Failed rows
// are recorded, not fatal.
SweepResult sweep_measurements(const SweepConfig& config);

// CSV with header m,sigma,stored_shatter,stored_cs,max_abs_err_shatter,status.
std::string sweep_to_csv(const SweepResult& result);

}  // namespace cshatter
