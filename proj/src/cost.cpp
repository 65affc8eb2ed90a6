#include "cshatter/cost.hpp"

namespace cshatter {

CostReport shattering_cost(std::size_t n, std::size_t t, std::size_t retained) {
    const auto rows = static_cast<std::uint64_t>(4) * t;
    return CostReport{Method::shattering,
                      static_cast<std::uint64_t>(4) * retained,
                      rows * (n - 1),
                      rows * n};
}

CostReport conventional_cost(std::size_t n, std::size_t measurements) {
    const auto m = static_cast<std::uint64_t>(measurements);
    return CostReport{Method::conventional, m, m * (n - 1), m * n};
}

}  // namespace cshatter
