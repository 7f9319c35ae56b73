#pragma once

// The Gaussian-weighted Bergman (Segal-Bargmann) space on C^n:
// weight rho(z) = (alpha/pi)^n exp(-alpha |z|^2), kernel K(z,w) = exp(alpha <z,w>).

#include <complex>

#include "berezin/gaussian_calculus.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/types.hpp"

namespace berezin {

class PolynomialSymbol;

struct WeightSpec {
  int dim = 1;
  double alpha = 1.0;
};

struct TraceReport {
  double raw_trace = 0.0;
  double normalized_trace = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  int dim = 0;
};

std::complex<double> kernel(const ComplexPoint& z, const ComplexPoint& w, const QuantParams& q);

/// log |K(z,w)|^2 = 2 alpha Re <z,w>.
double log_abs_kernel_sq(const ComplexPoint& z, const ComplexPoint& w, const QuantParams& q);

double weight(const ComplexPoint& z, const QuantParams& q);
double log_weight(const ComplexPoint& z, const QuantParams& q);

/// Total mass of the weight over C^n by m-point Gauss-Hermite per real axis.
double weight_mass_numeric(const WeightSpec& spec, int m);

/// |integral p(w) K(z,w) rho(w) dA(w) - p(z)| for holomorphic p, by quadrature.
double reproducing_residual(const PolynomialSymbol& p, const ComplexPoint& z, const QuantParams& q,
                            const QuadratureRule1D& rule);

/// Tr g = (alpha/pi)^n integral g(z) exp(-alpha |z|^2) dA = A (alpha/(alpha+lambda))^{n/2}.
double trace(const GaussianSymbol& g, const QuantParams& q);

/// The same trace evaluated by tensor Gauss-Hermite quadrature over R^{2n}.
double trace_numeric(const GaussianSymbol& g, const QuantParams& q, int m);

/// Trace of the squared transformed unit Gaussian and its normalized form
/// (alpha/(alpha+3 lambda))^{n/2}.
TraceReport purity_index(double lambda, const QuantParams& q, int n);

/// purity_index with both traces recomputed by quadrature (n <= 2).
TraceReport purity_index_numeric(double lambda, const QuantParams& q, int n, int m);

}  // namespace berezin
