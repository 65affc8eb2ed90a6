#pragma once

#include <cstddef>
#include <cstdint>

namespace cshatter {

enum class Method { shattering, conventional };

// Analytic sense-side cost of one encoding pass: stored real measurement
// values plus the additions/multiplications of applying the sensing map to
// a length-N real vector. Counts are analytic, not instrumented: the
// stacked shattering operator is 2T complex rows = 4T real rows, applied
// in full before thresholding, and a conventional M x N matrix is M rows.
struct CostReport {
    Method method;
    std::uint64_t stored_real_measurements;
    std::uint64_t additions;
    std::uint64_t multiplications;
};

// Shattering path: 4T rows of length N; r retained complex pairs store
// 4r real values.
CostReport shattering_cost(std::size_t n, std::size_t t, std::size_t retained);

// Conventional path: M rows of length N; all M real measurements stored.
CostReport conventional_cost(std::size_t n, std::size_t measurements);

}  // namespace cshatter
