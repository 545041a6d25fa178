#pragma once

#include <cstddef>
#include <cstdint>

namespace quadrics {

/// Knobs shared by every analysis; all of them are echoed into reports.
struct AnalysisConfig {
    std::size_t truncation = 0;           // 0 = 2 * generators + 2
    long search_height = 3;               // coefficient bound for split/idempotent searches
    std::size_t search_attempts = 400;    // random draws per search
    std::size_t frobenius_attempts = 20;  // random functionals after the basis duals
    std::size_t regularity_degree = 6;
    std::uint64_t seed = 1;
};

}  // namespace quadrics
