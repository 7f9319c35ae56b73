#pragma once

// Gauss-Hermite quadrature and the numerical Berezin-transform oracle.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "berezin/gaussian_calculus.hpp"
#include "berezin/types.hpp"

namespace berezin {

/// Nodes and weights of the m-point rule for the weight exp(-t^2) on R.
struct QuadratureRule1D {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  int order = 0;
};

inline constexpr int kMaxHermiteOrder = 512;

/// Built from Golub-Welsch starting values refined by Newton iteration on the
/// orthonormal Hermite recurrence. Nodes are exactly symmetric.
QuadratureRule1D gauss_hermite(int m);

using RealFunction = std::function<double(std::span<const double>)>;

/// Tensor-product Gauss-Hermite approximation of
///   integral over R^d of fn(x) * exp(-sum_k scale_k x_k^2) dx.
/// Nodes are mapped as x_k = t / sqrt(scale_k); the 1/sqrt(scale_k) Jacobian is
/// included. Summation runs in a fixed lexicographic order with Neumaier
/// compensation.
double integrate(const RealFunction& fn, std::span<const QuadratureRule1D> rules,
                 std::span<const double> scales);

using ComplexFunction = std::function<std::complex<double>(const ComplexPoint&)>;

/// A complex-valued integrand on C^n together with its Gaussian growth rate:
/// |fn(w)| <= C exp(growth * |w|^2). The Berezin integral diverges unless
/// growth < alpha.
struct Symbol {
  int dim = 1;
  ComplexFunction fn;
  double growth = 0.0;
};

Symbol as_symbol(const GaussianSymbol& g);

/// B f(z) = (1/K(z,z)) * integral f(w) |K(z,w)|^2 rho(w) dA(w), evaluated with an
/// m-point Gauss-Hermite rule per real axis (R^{2n}, n <= 2).
std::complex<double> berezin_transform_numeric(const Symbol& f, const ComplexPoint& z,
                                               const QuantParams& q, int m);

struct MonteCarloConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

struct MonteCarloEstimate {
  std::complex<double> estimate;
  double stderr_ = 0.0;
};

/// Importance-sampled estimate of the Berezin transform: w is drawn from the
/// normalized Berezin density centred at z. Deterministic for a fixed seed.
MonteCarloEstimate monte_carlo_transform(const Symbol& f, const ComplexPoint& z, const QuantParams& q,
                                         const MonteCarloConfig& cfg);

}  // namespace berezin
