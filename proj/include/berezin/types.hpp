#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace berezin {

/// Raised when an argument violates a documented domain (negative widths,
/// non-finite inputs, out-of-range orders).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two objects of different complex dimension are combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

/// Raised when a numerical evaluation produces a non-finite value or would
/// integrate a divergent integrand.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of C^n, z_j = x_j + i y_j.
using ComplexPoint = Eigen::VectorXcd;

inline ComplexPoint make_point(std::initializer_list<std::complex<double>> coords) {
  ComplexPoint z(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (const auto& c : coords) z(k++) = c;
  return z;
}

inline void require_finite(const ComplexPoint& z) {
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    if (!std::isfinite(z(k).real()) || !std::isfinite(z(k).imag())) {
      throw DomainError("non-finite coordinate at index " + std::to_string(k));
    }
  }
}

inline void require_dim(const ComplexPoint& z, int dim) {
  if (z.size() != dim) throw DimensionMismatch(static_cast<std::size_t>(dim), static_cast<std::size_t>(z.size()));
}

/// The quantum parameter alpha = 1/h.
template <typename Scalar = double>
class BasicQuantParams {
 public:
  explicit BasicQuantParams(Scalar alpha) : alpha_(alpha) {
    if (!(alpha > Scalar(0)) || !std::isfinite(static_cast<double>(alpha))) {
      throw DomainError("alpha must be positive and finite");
    }
  }

  Scalar alpha() const { return alpha_; }
  Scalar planck() const { return Scalar(1) / alpha_; }

 private:
  Scalar alpha_;
};

using QuantParams = BasicQuantParams<double>;

}  // namespace berezin
