#pragma once

// Svetlichny value, genuine tripartite concurrence, maximal CHSH signal and
// two-qubit concurrence. Closed forms for X states are templates on the
// scalar; the measurement-setting optimizer works in double.

#include "gtn/quantum_core.hpp"

#include <array>
#include <cstdint>
#include <numbers>

namespace gtn {

/// Three-qubit X state: populations n_i on basis indices 0..3, m_i on
/// indices 7..4, coherence c_i between n_i and m_i (index i-1 and 8-i).
template <typename Real>
struct XStateParams3 {
  std::array<Real, 4> n{};
  std::array<Real, 4> m{};
  std::array<Complex<Real>, 4> c{};
};

/// Two-qubit X state, real entries in the standard basis.
template <typename Real>
struct XStateParams2 {
  Real rho11{}, rho22{}, rho33{}, rho44{};
  Real rho14{}, rho23{};
};

inline constexpr double kXStateTolerance = 1e-12;

template <typename Real>
void check_invariants(const XStateParams3<Real>& x)
{
  Real total(0);
  for (int i = 0; i < 4; ++i) {
    total += x.n[i] + x.m[i];
    if (std::abs(x.c[i]) > std::sqrt(std::max(Real(0), x.n[i] * x.m[i])) + Real(kXStateTolerance))
      throw std::domain_error("X-state coherence exceeds sqrt(n_i m_i)");
  }
  if (std::abs(total - Real(1)) > Real(kXStateTolerance))
    throw std::domain_error("X-state populations do not sum to one");
}

template <typename Real>
void check_invariants(const XStateParams2<Real>& x)
{
  const Real total = x.rho11 + x.rho22 + x.rho33 + x.rho44;
  if (std::abs(total - Real(1)) > Real(kXStateTolerance))
    throw std::domain_error("two-qubit X state has trace != 1");
  if (std::abs(x.rho14) > std::sqrt(std::max(Real(0), x.rho11 * x.rho44)) + Real(kXStateTolerance) ||
      std::abs(x.rho23) > std::sqrt(std::max(Real(0), x.rho22 * x.rho33)) + Real(kXStateTolerance))
    throw std::domain_error("two-qubit X-state coherence violates positivity");
}

template <typename Real>
CMatrix<Real> to_matrix(const XStateParams3<Real>& x)
{
  CMatrix<Real> m = CMatrix<Real>::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = x.n[i];
    m(7 - i, 7 - i) = x.m[i];
    m(i, 7 - i) = x.c[i];
    m(7 - i, i) = std::conj(x.c[i]);
  }
  return m;
}

template <typename Real>
CMatrix<Real> to_matrix(const XStateParams2<Real>& x)
{
  CMatrix<Real> m = CMatrix<Real>::Zero(4, 4);
  m(0, 0) = x.rho11;
  m(1, 1) = x.rho22;
  m(2, 2) = x.rho33;
  m(3, 3) = x.rho44;
  m(0, 3) = m(3, 0) = x.rho14;
  m(1, 2) = m(2, 1) = x.rho23;
  return m;
}

/// Reads X-state parameters from an 8x8 matrix; every entry off the diagonal
/// and anti-diagonal must be below 1e-12 in magnitude.
template <typename Real>
XStateParams3<Real> x_params3_from_matrix(const CMatrix<Real>& m)
{
  detail::require(m.rows() == 8 && m.cols() == 8, "three-qubit X state needs an 8x8 matrix");
  for (Index r = 0; r < 8; ++r)
    for (Index c = 0; c < 8; ++c)
      if (r != c && r + c != 7 && std::abs(m(r, c)) > Real(kXStateTolerance))
        throw std::domain_error("matrix is not of X form");
  XStateParams3<Real> x;
  for (int i = 0; i < 4; ++i) {
    x.n[i] = m(i, i).real();
    x.m[i] = m(7 - i, 7 - i).real();
    x.c[i] = m(i, 7 - i);
  }
  return x;
}

template <typename Real>
XStateParams2<Real> x_params2_from_matrix(const CMatrix<Real>& m)
{
  detail::require(m.rows() == 4 && m.cols() == 4, "two-qubit X state needs a 4x4 matrix");
  for (Index r = 0; r < 4; ++r)
    for (Index c = 0; c < 4; ++c)
      if (r != c && r + c != 3 && std::abs(m(r, c)) > Real(kXStateTolerance))
        throw std::domain_error("matrix is not of X form");
  if (std::abs(m(0, 3).imag()) > Real(kXStateTolerance) || std::abs(m(1, 2).imag()) > Real(kXStateTolerance))
    throw std::domain_error("two-qubit X-state coherences must be real");
  return {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), m(0, 3).real(), m(1, 2).real()};
}

/// Index (0-based) of the largest |c_i|; ties resolve to the smallest index.
template <typename Real>
int dominant_coherence(const XStateParams3<Real>& x)
{
  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(x.c[i]) > std::abs(x.c[best])) best = i;
  return best;
}

/// The population combination N, equal to <zzz>.
template <typename Real>
Real zzz_population_balance(const XStateParams3<Real>& x)
{
  return x.n[0] - x.n[1] - x.n[2] + x.n[3] - x.m[3] + x.m[2] + x.m[1] - x.m[0];
}

/// Svetlichny value of a three-qubit X state: max{8 sqrt2 max|c_i|, 4|N|}.
template <typename Real>
Real svetlichny_xstate(const XStateParams3<Real>& x)
{
  check_invariants(x);
  const Real coherence = std::abs(x.c[dominant_coherence(x)]);
  const Real sqrt2 = std::sqrt(Real(2));
  return std::max(Real(8) * sqrt2 * coherence, Real(4) * std::abs(zzz_population_balance(x)));
}

/// Genuine tripartite concurrence of a three-qubit X state:
/// 2 max_i max{0, |c_i| - nu_i}, nu_i = sum_{j != i} sqrt(n_j m_j).
template <typename Real>
Real gte_xstate(const XStateParams3<Real>& x)
{
  check_invariants(x);
  std::array<Real, 4> root{};
  for (int i = 0; i < 4; ++i) root[i] = std::sqrt(std::max(Real(0), x.n[i] * x.m[i]));
  Real best(0);
  for (int i = 0; i < 4; ++i) {
    Real nu(0);
    for (int j = 0; j < 4; ++j)
      if (j != i) nu += root[j];
    best = std::max(best, std::max(Real(0), std::abs(x.c[i]) - nu));
  }
  return Real(2) * best;
}

/// Eigenvalues Z1 >= Z2 and Z3 of T^T T for a real two-qubit X state.
template <typename Real>
std::array<Real, 3> xstate_correlation_eigenvalues(const XStateParams2<Real>& x)
{
  const Real a = std::abs(x.rho14), b = std::abs(x.rho23);
  const Real diag = std::abs(x.rho11) - std::abs(x.rho22) - std::abs(x.rho33) + std::abs(x.rho44);
  return {Real(4) * (a + b) * (a + b), Real(4) * (a - b) * (a - b), diag * diag};
}

/// Maximal CHSH signal of a two-qubit X state from its closed-form eigenvalues.
template <typename Real>
Real chsh_xstate(const XStateParams2<Real>& x)
{
  check_invariants(x);
  const auto z = xstate_correlation_eigenvalues(x);
  return std::max(Real(2) * std::sqrt(z[0] + z[1]), Real(2) * std::sqrt(z[0] + z[2]));
}

template <typename Real>
Real concurrence_xstate(const XStateParams2<Real>& x)
{
  check_invariants(x);
  const Real first = std::abs(x.rho14) - std::sqrt(std::max(Real(0), x.rho22 * x.rho33));
  const Real second = std::abs(x.rho23) - std::sqrt(std::max(Real(0), x.rho11 * x.rho44));
  return Real(2) * std::max({Real(0), first, second});
}

/// Maximal CHSH signal of any two-qubit state: 2 sqrt(sum of the two largest
/// eigenvalues of T^T T), T the Pauli correlation matrix.
template <typename Real>
Real chsh_max(const DensityOperator<Real>& rho)
{
  detail::require(rho.qubits() == 2, "maximal Bell signal needs a two-qubit state");
  const Matrix3<Real> t = correlation_tensor(rho).matrix();
  const Matrix3<Real> u = t.transpose() * t;
  Eigen::SelfAdjointEigenSolver<Matrix3<Real>> solver(u, Eigen::EigenvaluesOnly);
  const auto& z = solver.eigenvalues();  // ascending
  return Real(2) * std::sqrt(std::max(Real(0), z(1) + z(2)));
}

// ---------------------------------------------------------------------------
// Measurement-setting optimization

struct SphericalAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  Eigen::Vector3d unit_vector() const;
  static SphericalAngles from_vector(const Eigen::Vector3d& v);
};

/// Six observable directions a, a', b, b', c, c'.
struct MeasurementSettings {
  SphericalAngles a, a_prime, b, b_prime, c, c_prime;

  std::array<Eigen::Vector3d, 6> vectors() const;
  static MeasurementSettings from_vectors(const std::array<Eigen::Vector3d, 6>& v);
};

struct SvetlichnyResult {
  double value = 0.0;
  MeasurementSettings settings;
  int restarts_used = 0;
  bool converged = false;
};

struct SvetlichnyOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_sweeps = 5000;
  double tolerance = 1e-14;  // stop when one sweep gains less than this
};

/// tr(S rho) for the Svetlichny operator
/// (A + A')(B C' + B' C) + (A - A')(B C - B' C'), built from the three-qubit
/// correlation tensor and the six setting vectors (a, a', b, b', c, c').
double svetlichny_expectation(const PauliCorrelationTensor<double>& t,
                              const std::array<Eigen::Vector3d, 6>& v);

/// Multi-start seesaw maximization of tr(S rho) over all projective settings.
/// The result is a lower bound on the Svetlichny value; deterministic for a
/// given (restarts, seed), and a longer restart list never lowers it.
SvetlichnyResult svetlichny_bruteforce(const DensityOperator<double>& rho, const SvetlichnyOptions& options);

inline SvetlichnyResult svetlichny_bruteforce(const DensityOperator<double>& rho, int restarts, std::uint64_t seed)
{
  SvetlichnyOptions options;
  options.restarts = restarts;
  options.seed = seed;
  return svetlichny_bruteforce(rho, options);
}

}  // namespace gtn
