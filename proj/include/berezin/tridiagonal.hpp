#pragma once

// Eigenvalues of a real symmetric tridiagonal matrix by Sturm-sequence bisection.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "berezin/types.hpp"

namespace berezin {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Number of eigenvalues strictly less than x. `off` holds the sub-diagonal
/// (size n-1).
template <typename Scalar>
Eigen::Index sturm_count(const VectorX<Scalar>& diag, const VectorX<Scalar>& off, Scalar x) {
  const Scalar tiny = std::numeric_limits<Scalar>::min();
  Eigen::Index count = 0;
  Scalar q = diag(0) - x;
  if (q < Scalar(0)) ++count;
  for (Eigen::Index i = 1; i < diag.size(); ++i) {
    if (std::abs(q) < tiny) q = tiny;
    q = diag(i) - x - off(i - 1) * off(i - 1) / q;
    if (q < Scalar(0)) ++count;
  }
  return count;
}

/// The eigenvalues with indices [first, first + count) in ascending order.
template <typename Scalar>
VectorX<Scalar> tridiagonal_eigenvalues(const VectorX<Scalar>& diag, const VectorX<Scalar>& off,
                                        Eigen::Index first, Eigen::Index count) {
  const Eigen::Index n = diag.size();
  if (n == 0 || off.size() != std::max<Eigen::Index>(n - 1, 0)) {
    throw DomainError("tridiagonal: inconsistent diagonal/off-diagonal sizes");
  }
  if (first < 0 || count < 0 || first + count > n) throw DomainError("tridiagonal: index range out of bounds");

  // Gershgorin bounds.
  Scalar lo = std::numeric_limits<Scalar>::max();
  Scalar hi = std::numeric_limits<Scalar>::lowest();
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar r = 0;
    if (i > 0) r += std::abs(off(i - 1));
    if (i + 1 < n) r += std::abs(off(i));
    lo = std::min(lo, diag(i) - r);
    hi = std::max(hi, diag(i) + r);
  }
  const Scalar span = std::max(hi - lo, Scalar(1));
  lo -= span * Scalar(1e-3);
  hi += span * Scalar(1e-3);

  VectorX<Scalar> out(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::Index target = first + k;
    Scalar a = lo;
    Scalar b = hi;
    // Bisect until the interval stops shrinking.
    for (int it = 0; it < 400; ++it) {
      const Scalar mid = a + (b - a) / Scalar(2);
      if (mid <= a || mid >= b) break;
      if (sturm_count(diag, off, mid) > target) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out(k) = a + (b - a) / Scalar(2);
    if (!std::isfinite(static_cast<double>(out(k)))) throw NumericalError("tridiagonal: non-finite eigenvalue");
  }
  return out;
}

template <typename Scalar>
VectorX<Scalar> tridiagonal_eigenvalues(const VectorX<Scalar>& diag, const VectorX<Scalar>& off) {
  return tridiagonal_eigenvalues(diag, off, 0, diag.size());
}

}  // namespace berezin
