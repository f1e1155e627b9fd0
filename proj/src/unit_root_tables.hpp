#pragma once

#include <array>

namespace tsecon::detail {

inline constexpr std::size_t kDfSizes = 7;
inline constexpr std::size_t kDfProbs = 107;

/// Quantiles of the Dickey–Fuller tau statistic; one row per sample size,
/// one column per probability in kDfProbabilities.
using DfQuantileTable = std::array<std::array<double, kDfProbs>, kDfSizes>;

extern const std::array<int, kDfSizes> kDfSampleSizes;
extern const std::array<double, kDfProbs> kDfProbabilities;
/// Indexed by deterministic case: none, constant, constant + trend.
extern const std::array<DfQuantileTable, 3> kDfQuantiles;

}  // namespace tsecon::detail
