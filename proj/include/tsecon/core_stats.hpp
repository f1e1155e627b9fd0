#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

/// Table-style summary of one series. Skewness and kurtosis use biased
/// (divisor n) central moments; kurtosis is not excess (normal => 3).
struct DescriptiveSummary {
    std::string name;
    double mean = 0.0;
    double median = 0.0;
    double maximum = 0.0;
    double minimum = 0.0;
    double std_dev = 0.0;  ///< divisor n − 1
    double skewness = 0.0;
    double kurtosis = 0.0;
    double jarque_bera = 0.0;
    double jb_pvalue = 1.0;
    std::size_t n = 0;
};

/// JB = (n/6)(S² + (K − 3)²/4).
double jarque_bera(double skewness, double kurtosis, std::size_t n);

DescriptiveSummary describe(std::span<const double> values, std::string name = {});
DescriptiveSummary describe(const TimeSeries& s);

/// Median with the midpoint convention for even lengths.
double median(std::span<const double> values);

struct CorrelationMatrix {
    std::vector<std::string> names;
    Matrix entries;
};

/// Pearson correlation of two equal-length samples.
double pearson(std::span<const double> x, std::span<const double> y);
CorrelationMatrix correlation_matrix(const Dataset& d);

}  // namespace tsecon
