#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/simulate.hpp"

namespace testing {

inline std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

template <std::size_t N>
std::vector<double> to_vector(const double (&a)[N]) {
    return {a, a + N};
}

inline tsecon::Dataset dataset(std::vector<std::pair<std::string, std::vector<double>>> cols,
                               tsecon::Frequency f = tsecon::Frequency::Monthly) {
    return tsecon::sim::make_dataset(cols, f);
}

inline bool close(double a, double b, double abs_tol, double rel_tol = 0.0) {
    return std::abs(a - b) <= abs_tol + rel_tol * std::abs(b);
}

}  // namespace testing
