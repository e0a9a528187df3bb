#include "gtn/correlation_measures.hpp"

#include <limits>
#include <random>

namespace gtn {

Eigen::Vector3d SphericalAngles::unit_vector() const
{
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

SphericalAngles SphericalAngles::from_vector(const Eigen::Vector3d& v)
{
  const Eigen::Vector3d u = v.normalized();
  SphericalAngles s;
  s.theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  s.phi = std::atan2(u.y(), u.x());
  if (s.phi < 0.0) s.phi += 2.0 * std::numbers::pi;
  if (s.phi >= 2.0 * std::numbers::pi) s.phi = 0.0;
  return s;
}

std::array<Eigen::Vector3d, 6> MeasurementSettings::vectors() const
{
  return {a.unit_vector(),       a_prime.unit_vector(), b.unit_vector(),
          b_prime.unit_vector(), c.unit_vector(),       c_prime.unit_vector()};
}

MeasurementSettings MeasurementSettings::from_vectors(const std::array<Eigen::Vector3d, 6>& v)
{
  return {SphericalAngles::from_vector(v[0]), SphericalAngles::from_vector(v[1]),
          SphericalAngles::from_vector(v[2]), SphericalAngles::from_vector(v[3]),
          SphericalAngles::from_vector(v[4]), SphericalAngles::from_vector(v[5])};
}

namespace {

using Vec3 = Eigen::Vector3d;

enum Slot { kA = 0, kAp, kB, kBp, kC, kCp };

class Tensor3 {
 public:
  explicit Tensor3(const PauliCorrelationTensor<double>& t)
  {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) t_[i][j][k] = t(i, j, k);
  }

  // contractions leaving the first, second or third index free
  Vec3 free_first(const Vec3& y, const Vec3& z) const
  {
    Vec3 out = Vec3::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out(i) += t_[i][j][k] * y(j) * z(k);
    return out;
  }

  Vec3 free_second(const Vec3& x, const Vec3& z) const
  {
    Vec3 out = Vec3::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out(j) += t_[i][j][k] * x(i) * z(k);
    return out;
  }

  Vec3 free_third(const Vec3& x, const Vec3& y) const
  {
    Vec3 out = Vec3::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out(k) += t_[i][j][k] * x(i) * y(j);
    return out;
  }

 private:
  double t_[3][3][3]{};
};

double objective(const Tensor3& t, const std::array<Vec3, 6>& v)
{
  const Vec3 x = t.free_first(v[kB], v[kCp]) + t.free_first(v[kBp], v[kC]);
  const Vec3 y = t.free_first(v[kB], v[kC]) - t.free_first(v[kBp], v[kCp]);
  return (v[kA] + v[kAp]).dot(x) + (v[kA] - v[kAp]).dot(y);
}

// Replaces v with the unit vector along g; a vanishing g leaves v unchanged.
void align(Vec3& v, const Vec3& g)
{
  const double n = g.norm();
  if (n > 1e-300) v = g / n;
}

// One pass of exact maximization over each setting in turn.
void sweep(const Tensor3& t, std::array<Vec3, 6>& v)
{
  {
    const Vec3 x = t.free_first(v[kB], v[kCp]) + t.free_first(v[kBp], v[kC]);
    const Vec3 y = t.free_first(v[kB], v[kC]) - t.free_first(v[kBp], v[kCp]);
    align(v[kA], x + y);
    align(v[kAp], x - y);
  }
  const Vec3 plus = v[kA] + v[kAp];
  const Vec3 minus = v[kA] - v[kAp];
  align(v[kB], t.free_second(plus, v[kCp]) + t.free_second(minus, v[kC]));
  align(v[kBp], t.free_second(plus, v[kC]) - t.free_second(minus, v[kCp]));
  align(v[kC], t.free_third(plus, v[kBp]) + t.free_third(minus, v[kB]));
  align(v[kCp], t.free_third(plus, v[kB]) - t.free_third(minus, v[kBp]));
}

Vec3 random_direction(std::mt19937_64& rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

}  // namespace

double svetlichny_expectation(const PauliCorrelationTensor<double>& t, const std::array<Eigen::Vector3d, 6>& v)
{
  detail::require(t.order() == 3, "Svetlichny expectation needs a three-qubit tensor");
  return objective(Tensor3(t), v);
}

SvetlichnyResult svetlichny_bruteforce(const DensityOperator<double>& rho, const SvetlichnyOptions& options)
{
  detail::require(rho.qubits() == 3, "Svetlichny value needs a three-qubit state");
  detail::require(options.restarts > 0, "restart count must be positive");
  detail::require(options.max_sweeps > 0, "sweep limit must be positive");

  const Tensor3 t(correlation_tensor(rho));
  std::mt19937_64 rng(options.seed);

  SvetlichnyResult best;
  best.value = -std::numeric_limits<double>::infinity();
  std::array<Vec3, 6> best_vectors;

  for (int r = 0; r < options.restarts; ++r) {
    std::array<Vec3, 6> v;
    for (auto& d : v) d = random_direction(rng);

    double value = objective(t, v);
    bool converged = false;
    for (int s = 0; s < options.max_sweeps; ++s) {
      sweep(t, v);
      const double next = objective(t, v);
      const double gain = next - value;
      value = next;
      if (gain < options.tolerance) {
        converged = true;
        break;
      }
    }
    if (value > best.value) {
      best.value = value;
      best.converged = converged;
      best_vectors = v;
    }
  }
  best.restarts_used = options.restarts;
  best.settings = MeasurementSettings::from_vectors(best_vectors);
  return best;
}

}  // namespace gtn
