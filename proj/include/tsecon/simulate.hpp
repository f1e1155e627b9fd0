#pragma once

// Seeded data-generating processes for tests, fixtures and Monte Carlo checks.
// Every generator draws from tsecon::Rng, so a (seed, arguments) pair always
// reproduces the same dataset.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsecon/dataio.hpp"
#include "tsecon/random.hpp"

namespace tsecon::sim {

/// Consecutive periods starting at 2000-01 (monthly) or 2000-01-03 (daily).
std::vector<Period> make_index(std::size_t n, Frequency frequency = Frequency::Monthly);

/// Dataset from equally long named columns.
Dataset make_dataset(const std::vector<std::pair<std::string, std::vector<double>>>& columns,
                     Frequency frequency = Frequency::Monthly);

std::vector<double> white_noise(Rng& rng, std::size_t n, double sd = 1.0);
/// x_t = c + φ x_{t−1} + ε_t after `burn` discarded draws.
std::vector<double> ar1(Rng& rng, std::size_t n, double phi, double c = 0.0, std::size_t burn = 100);
std::vector<double> random_walk(Rng& rng, std::size_t n, double start = 0.0, double sd = 1.0);

/// Bivariate VAR(1) where X Granger-causes Y but not the reverse:
/// x_t = a x_{t−1} + u_t,  y_t = b y_{t−1} + c x_{t−1} + v_t. Columns X, Y.
Dataset unidirectional_var1(Rng& rng, std::size_t n, double a = 0.5, double b = 0.3, double c = 0.4);

/// Cointegrated pair with error correction:
/// x random walk, Δy_t = λ (y_{t−1} − β x_{t−1}) + γ Δx_t + ε_t. Columns Y, X.
Dataset cointegrated_pair(Rng& rng, std::size_t n, double lambda = -0.3, double beta = 2.0,
                          double gamma = 0.5);

/// ARDL(2,1) in levels-lag convention: Δy_t = 0.4 Δy_{t−1} + 0.6 Δx_t
/// − 0.3 (y_{t−1} − x_{t−1}) + ε_t with x a random walk. Columns Y, X.
Dataset ardl21(Rng& rng, std::size_t n);

/// y_t = 1 + x_t + x_t ε_t with x ~ U(0,3) i.i.d. (variance ∝ x²). Columns Y, X.
Dataset heteroskedastic(Rng& rng, std::size_t n);

/// y_t = 1 + β_t x_t + ε_t, x ~ N(2,1), with β_t = β before n/2 and `factor`·β after.
/// Columns Y, X.
Dataset coefficient_break(Rng& rng, std::size_t n, double beta = 1.0, double factor = 2.0);

/// y_t = 1 + x_t + u_t with AR(1) errors u_t = ρ u_{t−1} + ε_t. Columns Y, X.
Dataset ar_errors(Rng& rng, std::size_t n, double rho);

/// Cointegrated system shaped like the monthly pipeline: dependent Y, random
/// walk regressors X1..Xk, and an event dummy DPOL (about one month in ten).
/// Δy_t = −0.25 (y_{t−1} − Σ β_j x_{j,t−1} − 0.5 d_{t−1}) + 0.3 Δx_{1,t} + ε_t, β_j = 1/j.
Dataset cointegrated_system(Rng& rng, std::size_t n, std::size_t k = 4,
                            Frequency frequency = Frequency::Monthly);

}  // namespace tsecon::sim
