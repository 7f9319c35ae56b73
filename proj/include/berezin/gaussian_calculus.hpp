#pragma once

// Closed-form algebra of the isotropic Gaussian symbols
//   g(z) = A * exp(-lambda/4 * sum_j (z_j + conj(z_j))^2) = A * exp(-lambda * sum_j x_j^2)
// under the Berezin transform of the Gaussian-weighted Bergman space on C^n.
// The family is closed under the transform and under the heat flow exp(t*Delta/4).

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "berezin/types.hpp"

namespace berezin {

template <typename Scalar = double>
class BasicGaussianSymbol {
 public:
  BasicGaussianSymbol(int dim, Scalar amplitude, Scalar compression)
      : dim_(dim), amplitude_(amplitude), compression_(compression) {
    if (dim < 1) throw DomainError("dim must be >= 1");
    if (!(amplitude > Scalar(0)) || !std::isfinite(static_cast<double>(amplitude))) {
      throw DomainError("amplitude must be positive and finite");
    }
    if (!(compression >= Scalar(0)) || !std::isfinite(static_cast<double>(compression))) {
      throw DomainError("compression must be non-negative and finite");
    }
  }

  int dim() const { return dim_; }
  Scalar amplitude() const { return amplitude_; }
  Scalar compression() const { return compression_; }

  BasicGaussianSymbol scaled(Scalar c) const { return {dim_, amplitude_ * c, compression_}; }

  friend bool operator==(const BasicGaussianSymbol&, const BasicGaussianSymbol&) = default;

 private:
  int dim_;
  Scalar amplitude_;
  Scalar compression_;
};

using GaussianSymbol = BasicGaussianSymbol<double>;

/// sum_j (z_j + conj z_j)^2 = 4 * sum_j (Re z_j)^2.
inline double real_part_square_sum(const ComplexPoint& z) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double u = 2.0 * z(k).real();
    s += u * u;
  }
  return s;
}

template <typename Scalar>
std::complex<Scalar> eval(const BasicGaussianSymbol<Scalar>& g, const ComplexPoint& z) {
  require_dim(z, g.dim());
  require_finite(z);
  const Scalar u2 = static_cast<Scalar>(real_part_square_sum(z));
  return {g.amplitude() * std::exp(-g.compression() / Scalar(4) * u2), Scalar(0)};
}

/// Berezin transform of a Gaussian symbol:
///   A -> A * (alpha/(alpha+lambda))^{n/2},  lambda -> alpha*lambda/(alpha+lambda).
template <typename Scalar>
BasicGaussianSymbol<Scalar> berezin_transform_closed(const BasicGaussianSymbol<Scalar>& g,
                                                     const BasicQuantParams<Scalar>& q) {
  const Scalar a = q.alpha();
  const Scalar l = g.compression();
  const Scalar ratio = a / (a + l);
  const Scalar amp = g.amplitude() * std::pow(ratio, Scalar(g.dim()) / Scalar(2));
  return {g.dim(), amp, a * l / (a + l)};
}

/// Heat flow exp(t * Delta/4), Delta = 4 sum_j d_{w_j} d_{conj w_j}, acting on a
/// Gaussian symbol. In real coordinates this is exp(t/4 * Laplacian); the width
/// evolves as lambda(t) = lambda/(1 + lambda t) and the mass is conserved.
template <typename Scalar>
BasicGaussianSymbol<Scalar> heat_flow(const BasicGaussianSymbol<Scalar>& g, Scalar time) {
  if (!(time >= Scalar(0)) || !std::isfinite(static_cast<double>(time))) {
    throw DomainError("heat time must be non-negative and finite");
  }
  const Scalar spread = Scalar(1) + g.compression() * time;
  const Scalar amp = g.amplitude() / std::pow(spread, Scalar(g.dim()) / Scalar(2));
  return {g.dim(), amp, g.compression() / spread};
}

/// Heat evolution to time 1/alpha.
template <typename Scalar>
BasicGaussianSymbol<Scalar> heat_evolve(const BasicGaussianSymbol<Scalar>& g,
                                        const BasicQuantParams<Scalar>& q) {
  return heat_flow(g, q.planck());
}

/// The order-1/alpha truncation of the transform at z with unit amplitude:
///   [1 + lambda^2 u^2/(4 alpha) - (n/2)(lambda/alpha)] * exp(-lambda u^2/4).
template <typename Scalar>
Scalar first_order_approx(const BasicGaussianSymbol<Scalar>& g, const BasicQuantParams<Scalar>& q,
                          const ComplexPoint& z) {
  require_dim(z, g.dim());
  require_finite(z);
  const Scalar u2 = static_cast<Scalar>(real_part_square_sum(z));
  const Scalar l = g.compression();
  const Scalar a = q.alpha();
  const Scalar bracket = Scalar(1) + l * l * u2 / (Scalar(4) * a) - Scalar(g.dim()) / Scalar(2) * (l / a);
  return bracket * std::exp(-l / Scalar(4) * u2);
}

/// |B_alpha g(z) - first_order_approx(z)| with the amplitude set to 1.
template <typename Scalar>
Scalar taylor_remainder(const BasicGaussianSymbol<Scalar>& g, const BasicQuantParams<Scalar>& q,
                        const ComplexPoint& z) {
  const BasicGaussianSymbol<Scalar> unit(g.dim(), Scalar(1), g.compression());
  const Scalar exact = eval(berezin_transform_closed(unit, q), z).real();
  return std::abs(exact - first_order_approx(unit, q, z));
}

template <typename Scalar>
BasicGaussianSymbol<Scalar> transform_compose(const BasicGaussianSymbol<Scalar>& g,
                                              const BasicQuantParams<Scalar>& first,
                                              const BasicQuantParams<Scalar>& second) {
  return berezin_transform_closed(berezin_transform_closed(g, first), second);
}

/// Delta/4 applied to g, evaluated at z: (lambda^2 u^2 - 2 n lambda)/4 * g(z).
template <typename Scalar>
Scalar quarter_laplacian(const BasicGaussianSymbol<Scalar>& g, const ComplexPoint& z) {
  const Scalar u2 = static_cast<Scalar>(real_part_square_sum(z));
  const Scalar l = g.compression();
  return (l * l * u2 - Scalar(2) * Scalar(g.dim()) * l) / Scalar(4) * eval(g, z).real();
}

inline bool gaussian_moment_vanishes(int k) { return k % 2 != 0; }

/// Integral over R of x^k exp(-a x^2) for even k:
///   (k-1)!! sqrt(pi) / (2^{k/2} a^{(k+1)/2}).
/// Odd k throws; the odd moments are zero by symmetry (see gaussian_moment_vanishes).
template <typename Scalar = double>
Scalar gaussian_moment(int k, Scalar a) {
  if (k < 0 || k % 2 != 0) throw DomainError("gaussian_moment needs an even non-negative order");
  if (!(a > Scalar(0)) || !std::isfinite(static_cast<double>(a))) {
    throw DomainError("gaussian_moment needs a > 0");
  }
  const Scalar sqrt_pi = std::sqrt(std::numbers::pi_v<Scalar>);
  if (k == 0) return std::sqrt(std::numbers::pi_v<Scalar> / a);
  Scalar double_factorial = 1;
  for (int j = k - 1; j > 1; j -= 2) double_factorial *= Scalar(j);
  return double_factorial * sqrt_pi /
         (std::pow(Scalar(2), Scalar(k / 2)) * std::pow(a, Scalar(k + 1) / Scalar(2)));
}

}  // namespace berezin
