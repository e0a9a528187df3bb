#pragma once

// Small dense qubit linear algebra: pure states, density operators,
// partial traces and Pauli correlation tensors. Everything is templated on
// the real scalar so the same code runs in double and long double.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gtn {

using Index = Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using Matrix3 = Eigen::Matrix<Real, 3, 3>;

using ModeList = std::vector<std::string>;

/// A basis ordering: position k of the reordered basis holds standard index order[k].
using BasisOrder = std::vector<Index>;

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

namespace detail {

inline void require(bool condition, const char* message)
{
  if (!condition) throw std::invalid_argument(message);
}

/// Number of qubits n with 2^n == dim, or -1.
inline int qubits_for_dimension(Index dim)
{
  if (dim <= 0) return -1;
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  return (Index{1} << n) == dim ? n : -1;
}

inline void require_unique_labels(const ModeList& modes)
{
  for (std::size_t i = 0; i < modes.size(); ++i)
    for (std::size_t j = i + 1; j < modes.size(); ++j)
      require(modes[i] != modes[j], "duplicate mode label");
}

inline std::size_t position_of(const ModeList& modes, const std::string& label)
{
  const auto it = std::find(modes.begin(), modes.end(), label);
  require(it != modes.end(), "unknown mode label");
  return static_cast<std::size_t>(it - modes.begin());
}

}  // namespace detail

/// Normalized pure state over an ordered list of qubit modes. Amplitudes are
/// indexed by bitstrings with the first mode as the most significant bit.
template <typename Real>
class StateVector {
 public:
  StateVector(ModeList modes, CVector<Real> amplitudes)
      : modes_(std::move(modes)), amplitudes_(std::move(amplitudes))
  {
    detail::require(!modes_.empty(), "state needs at least one mode");
    detail::require_unique_labels(modes_);
    detail::require(modes_.size() < 31 &&
                        amplitudes_.size() == (Index{1} << modes_.size()),
                    "amplitude count must equal 2^(mode count)");
    const Real norm = amplitudes_.norm();
    detail::require(norm > Real(0), "zero state vector");
    detail::require(std::abs(norm - Real(1)) <= Real(1e-9), "state vector is not normalized");
    amplitudes_ /= norm;
  }

  const ModeList& modes() const { return modes_; }
  const CVector<Real>& amplitudes() const { return amplitudes_; }
  int qubits() const { return static_cast<int>(modes_.size()); }
  Index dimension() const { return amplitudes_.size(); }

 private:
  ModeList modes_;
  CVector<Real> amplitudes_;
};

template <typename Real>
StateVector<Real> make_state(ModeList modes, CVector<Real> amplitudes)
{
  return StateVector<Real>(std::move(modes), std::move(amplitudes));
}

/// Convenience overload for real amplitude lists.
template <typename Real>
StateVector<Real> make_state(ModeList modes, std::initializer_list<Real> amplitudes)
{
  CVector<Real> v(static_cast<Index>(amplitudes.size()));
  Index i = 0;
  for (Real a : amplitudes) v(i++) = Complex<Real>(a, Real(0));
  return StateVector<Real>(std::move(modes), std::move(v));
}

/// Complex matrix over labelled qubit modes. Construction only checks shape;
/// physical validity is reported by validate().
template <typename Real>
class DensityOperator {
 public:
  DensityOperator(ModeList modes, CMatrix<Real> matrix)
      : modes_(std::move(modes)), matrix_(std::move(matrix))
  {
    detail::require(!modes_.empty(), "density operator needs at least one mode");
    detail::require_unique_labels(modes_);
    detail::require(matrix_.rows() == matrix_.cols(), "density matrix must be square");
    detail::require(modes_.size() < 31 && matrix_.rows() == (Index{1} << modes_.size()),
                    "matrix dimension must equal 2^(mode count)");
  }

  const ModeList& modes() const { return modes_; }
  const CMatrix<Real>& matrix() const { return matrix_; }
  int qubits() const { return static_cast<int>(modes_.size()); }
  Index dimension() const { return matrix_.rows(); }
  Complex<Real> operator()(Index r, Index c) const { return matrix_(r, c); }

 private:
  ModeList modes_;
  CMatrix<Real> matrix_;
};

template <typename Real>
DensityOperator<Real> density_from_pure(const StateVector<Real>& psi)
{
  const auto& a = psi.amplitudes();
  return DensityOperator<Real>(psi.modes(), a * a.adjoint());
}

template <typename Real>
StateVector<Real> tensor_product(const StateVector<Real>& lhs, const StateVector<Real>& rhs)
{
  ModeList modes = lhs.modes();
  modes.insert(modes.end(), rhs.modes().begin(), rhs.modes().end());
  CVector<Real> amps = Eigen::kroneckerProduct(lhs.amplitudes(), rhs.amplitudes()).eval();
  return StateVector<Real>(std::move(modes), std::move(amps));
}

template <typename Real>
DensityOperator<Real> tensor_product(const DensityOperator<Real>& lhs,
                                     const DensityOperator<Real>& rhs)
{
  ModeList modes = lhs.modes();
  modes.insert(modes.end(), rhs.modes().begin(), rhs.modes().end());
  CMatrix<Real> m = Eigen::kroneckerProduct(lhs.matrix(), rhs.matrix()).eval();
  return DensityOperator<Real>(std::move(modes), std::move(m));
}

/// Traces out every mode not listed in `keep`. The kept modes retain their
/// relative order from rho.modes(), whatever order `keep` lists them in.
template <typename Real>
DensityOperator<Real> partial_trace(const DensityOperator<Real>& rho,
                                    std::span<const std::string> keep)
{
  detail::require(!keep.empty(), "keep set must not be empty");
  const int n = rho.qubits();
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (const auto& label : keep) {
    const auto pos = detail::position_of(rho.modes(), label);
    detail::require(!kept[pos], "duplicate label in keep set");
    kept[pos] = true;
  }

  ModeList kept_modes;
  std::vector<int> kept_bits, traced_bits;
  for (int k = 0; k < n; ++k) {
    const int bit = n - 1 - k;
    if (kept[static_cast<std::size_t>(k)]) {
      kept_modes.push_back(rho.modes()[static_cast<std::size_t>(k)]);
      kept_bits.push_back(bit);
    } else {
      traced_bits.push_back(bit);
    }
  }

  // scatter(i, bits): place the bits of i (msb first) at the given positions
  auto offsets = [](const std::vector<int>& bits) {
    const int m = static_cast<int>(bits.size());
    std::vector<Index> out(std::size_t{1} << m, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int b = 0; b < m; ++b)
        if ((i >> (m - 1 - b)) & 1U) out[i] |= Index{1} << bits[static_cast<std::size_t>(b)];
    return out;
  };
  const auto kept_off = offsets(kept_bits);
  const auto traced_off = offsets(traced_bits);

  const auto dim = static_cast<Index>(kept_off.size());
  CMatrix<Real> out = CMatrix<Real>::Zero(dim, dim);
  const auto& m = rho.matrix();
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      Complex<Real> acc(0);
      for (Index r : traced_off)
        acc += m(kept_off[static_cast<std::size_t>(i)] + r, kept_off[static_cast<std::size_t>(j)] + r);
      out(i, j) = acc;
    }
  return DensityOperator<Real>(std::move(kept_modes), std::move(out));
}

template <typename Real>
DensityOperator<Real> partial_trace(const DensityOperator<Real>& rho,
                                    std::initializer_list<std::string> keep)
{
  const std::vector<std::string> labels(keep);
  return partial_trace(rho, std::span<const std::string>(labels));
}

/// Tr[rho P] for the Pauli string P = paulis[0] ⊗ paulis[1] ⊗ ... .
/// Uses the action of each Pauli on a computational basis state rather than
/// building P.
template <typename Real>
Complex<Real> pauli_expectation(const CMatrix<Real>& rho, std::span<const Pauli> paulis)
{
  const int n = static_cast<int>(paulis.size());
  detail::require(rho.rows() == (Index{1} << n), "Pauli string length does not match qubit count");
  const Complex<Real> i_unit(Real(0), Real(1));
  Complex<Real> acc(0);
  for (Index col = 0; col < rho.rows(); ++col) {
    Index row = col;
    Complex<Real> phase(1);
    for (int k = 0; k < n; ++k) {
      const int bit_pos = n - 1 - k;
      const bool one = (col >> bit_pos) & 1;
      switch (paulis[static_cast<std::size_t>(k)]) {
        case Pauli::I: break;
        case Pauli::X: row ^= Index{1} << bit_pos; break;
        case Pauli::Y:
          row ^= Index{1} << bit_pos;
          phase *= one ? -i_unit : i_unit;
          break;
        case Pauli::Z:
          if (one) phase = -phase;
          break;
      }
    }
    // P|col> = phase |row>, so (rho P)(col, col) = rho(col, row) * phase
    acc += rho(col, row) * phase;
  }
  return acc;
}

/// Real Pauli correlation tensor t_{ij} or t_{ijk}; indices 0,1,2 stand for x,y,z.
template <typename Real>
class PauliCorrelationTensor {
 public:
  PauliCorrelationTensor(int order, std::array<Real, 27> entries)
      : order_(order), entries_(entries)
  {
    detail::require(order == 2 || order == 3, "correlation tensor order must be 2 or 3");
  }

  int order() const { return order_; }

  Real operator()(int i, int j) const
  {
    detail::require(order_ == 2, "two-index access on a three-qubit tensor");
    return entries_[static_cast<std::size_t>(3 * i + j)];
  }

  Real operator()(int i, int j, int k) const
  {
    detail::require(order_ == 3, "three-index access on a two-qubit tensor");
    return entries_[static_cast<std::size_t>(9 * i + 3 * j + k)];
  }

  /// The 3x3 correlation matrix T (order 2 only).
  Matrix3<Real> matrix() const
  {
    Matrix3<Real> t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = (*this)(i, j);
    return t;
  }

  std::span<const Real> entries() const
  {
    return {entries_.data(), order_ == 2 ? std::size_t{9} : std::size_t{27}};
  }

 private:
  int order_;
  std::array<Real, 27> entries_{};
};

template <typename Real>
PauliCorrelationTensor<Real> correlation_tensor(const DensityOperator<Real>& rho)
{
  const int n = rho.qubits();
  detail::require(n == 2 || n == 3, "correlation tensor needs a two- or three-qubit state");
  constexpr std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
  std::array<Real, 27> t{};
  if (n == 2) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const std::array<Pauli, 2> p{axes[i], axes[j]};
        t[static_cast<std::size_t>(3 * i + j)] = pauli_expectation(rho.matrix(), std::span<const Pauli>(p)).real();
      }
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const std::array<Pauli, 3> p{axes[i], axes[j], axes[k]};
          t[static_cast<std::size_t>(9 * i + 3 * j + k)] =
              pauli_expectation(rho.matrix(), std::span<const Pauli>(p)).real();
        }
  }
  return PauliCorrelationTensor<Real>(n, t);
}

struct ValidationTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

template <typename Real>
struct DensityDiagnostics {
  Real hermiticity_defect;  // max |rho - rho^dagger| entrywise
  Real trace_defect;        // |Tr rho - 1|
  Real min_eigenvalue;      // of the Hermitian part
  bool hermitian;
  bool unit_trace;
  bool positive;

  bool ok() const { return hermitian && unit_trace && positive; }
};

template <typename Real>
Real min_eigenvalue_hermitian(const CMatrix<Real>& m)
{
  const CMatrix<Real> h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

template <typename Real>
DensityDiagnostics<Real> validate(const CMatrix<Real>& m, const ValidationTolerances& tol = {})
{
  DensityDiagnostics<Real> d{};
  d.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.trace_defect = std::abs(m.trace() - Complex<Real>(1));
  d.min_eigenvalue = min_eigenvalue_hermitian<Real>(m);
  d.hermitian = d.hermiticity_defect <= Real(tol.hermiticity);
  d.unit_trace = d.trace_defect <= Real(tol.trace);
  d.positive = d.min_eigenvalue >= Real(tol.min_eigenvalue);
  return d;
}

template <typename Real>
DensityDiagnostics<Real> validate(const DensityOperator<Real>& rho, const ValidationTolerances& tol = {})
{
  return validate<Real>(rho.matrix(), tol);
}

inline void require_bijection(const BasisOrder& order, Index dim)
{
  detail::require(static_cast<Index>(order.size()) == dim, "basis ordering has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  for (Index idx : order) {
    detail::require(idx >= 0 && idx < dim, "basis ordering index out of range");
    detail::require(!seen[static_cast<std::size_t>(idx)], "basis ordering is not a bijection");
    seen[static_cast<std::size_t>(idx)] = true;
  }
}

inline BasisOrder inverse_order(const BasisOrder& order)
{
  require_bijection(order, static_cast<Index>(order.size()));
  BasisOrder inv(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inv[static_cast<std::size_t>(order[k])] = static_cast<Index>(k);
  return inv;
}

inline BasisOrder identity_order(Index dim)
{
  BasisOrder order(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) order[static_cast<std::size_t>(k)] = k;
  return order;
}

/// Re-expresses m in the basis ordering `order`: result(k, l) = m(order[k], order[l]).
template <typename Derived>
auto permute_basis(const Eigen::MatrixBase<Derived>& m, const BasisOrder& order)
{
  using Scalar = typename Derived::Scalar;
  require_bijection(order, m.rows());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (Index k = 0; k < m.rows(); ++k)
    for (Index l = 0; l < m.cols(); ++l)
      out(k, l) = m(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(l)]);
  return out;
}

template <typename Real>
CMatrix<Real> permute_basis(const DensityOperator<Real>& rho, const BasisOrder& order)
{
  return permute_basis(rho.matrix(), order);
}

/// Basis ordering that swaps qubits `a` and `b` of an n-qubit register
/// (positions counted from the first, most significant, mode).
inline BasisOrder qubit_swap_order(int n, int a, int b)
{
  BasisOrder order(std::size_t{1} << n);
  const int ba = n - 1 - a, bb = n - 1 - b;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto idx = static_cast<Index>(k);
    const Index va = (idx >> ba) & 1, vb = (idx >> bb) & 1;
    Index swapped = idx & ~((Index{1} << ba) | (Index{1} << bb));
    swapped |= (va << bb) | (vb << ba);
    order[k] = swapped;
  }
  return order;
}

/// Basis index of a bitstring such as "01101" (first character = most significant bit).
inline Index basis_index(const std::string& bits)
{
  Index idx = 0;
  for (char ch : bits) {
    detail::require(ch == '0' || ch == '1', "bitstring must contain only 0 and 1");
    idx = (idx << 1) | (ch == '1' ? 1 : 0);
  }
  return idx;
}

template <typename Derived, typename OtherDerived>
auto max_abs_difference(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<OtherDerived>& b)
{
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace gtn
