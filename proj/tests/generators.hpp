#pragma once

// Seeded generators for the property tests.

#include "gtn/correlation_measures.hpp"
#include "gtn/schwarzschild_modes.hpp"

#include <cmath>
#include <random>

namespace gtn::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline double log_uniform(Rng& rng, double lo, double hi)
{
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

inline Complex<double> gaussian_complex(Rng& rng)
{
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline ModeList labels(int n)
{
  ModeList m;
  for (int k = 0; k < n; ++k) m.push_back("q" + std::to_string(k));
  return m;
}

inline StateVector<double> random_state(Rng& rng, int n)
{
  CVector<double> v(Index{1} << n);
  for (Index k = 0; k < v.size(); ++k) v(k) = gaussian_complex(rng);
  v.normalize();
  return StateVector<double>(labels(n), v);
}

// G G^dagger / Tr, G of shape 2^n x rank
inline DensityOperator<double> random_density(Rng& rng, int n, int rank)
{
  const Index d = Index{1} << n;
  CMatrix<double> g(d, rank);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < rank; ++j) g(i, j) = gaussian_complex(rng);
  CMatrix<double> rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityOperator<double>(labels(n), rho);
}

inline std::array<double, 4> simplex4(Rng& rng)
{
  std::exponential_distribution<double> e(1.0);
  std::array<double, 4> w{};
  double s = 0.0;
  for (auto& x : w) s += (x = e(rng));
  for (auto& x : w) x /= s;
  return w;
}

inline Complex<double> phase(Rng& rng, double modulus)
{
  const double t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return std::polar(modulus, t);
}

inline XStateParams3<double> random_x3(Rng& rng)
{
  std::array<double, 8> w{};
  std::exponential_distribution<double> e(1.0);
  double s = 0.0;
  for (auto& x : w) s += (x = e(rng));
  XStateParams3<double> x;
  for (std::size_t i = 0; i < 4; ++i) {
    x.n[i] = w[i] / s;
    x.m[i] = w[i + 4] / s;
    x.c[i] = phase(rng, uniform(rng, 0.0, 1.0) * std::sqrt(x.n[i] * x.m[i]));
  }
  return x;
}

inline XStateParams2<double> random_x2(Rng& rng)
{
  const auto w = simplex4(rng);
  XStateParams2<double> x{w[0], w[1], w[2], w[3], 0.0, 0.0};
  x.rho14 = uniform(rng, -1.0, 1.0) * std::sqrt(w[0] * w[3]);
  x.rho23 = uniform(rng, -1.0, 1.0) * std::sqrt(w[1] * w[2]);
  return x;
}

inline ScenarioParams<double> random_params(Rng& rng)
{
  return ScenarioParams<double>::from_alpha_sq(uniform(rng, 0.0, 1.0), uniform(rng, 0.5, 2.0),
                                                log_uniform(rng, 1e-2, 1e2));
}

}  // namespace gtn::testing
