#include "berezin/bergman_space.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "berezin/semiclassics.hpp"

namespace berezin {

std::complex<double> kernel(const ComplexPoint& z, const ComplexPoint& w, const QuantParams& q) {
  require_dim(w, static_cast<int>(z.size()));
  // <z, w> = sum_j z_j conj(w_j); Eigen's dot conjugates its left operand.
  return std::exp(q.alpha() * w.dot(z));
}

double log_abs_kernel_sq(const ComplexPoint& z, const ComplexPoint& w, const QuantParams& q) {
  require_dim(w, static_cast<int>(z.size()));
  return 2.0 * q.alpha() * w.dot(z).real();
}

double log_weight(const ComplexPoint& z, const QuantParams& q) {
  const double n = static_cast<double>(z.size());
  return n * std::log(q.alpha() / std::numbers::pi) - q.alpha() * z.squaredNorm();
}

double weight(const ComplexPoint& z, const QuantParams& q) {
  require_finite(z);
  return std::pow(q.alpha() / std::numbers::pi, static_cast<double>(z.size())) *
         std::exp(-q.alpha() * z.squaredNorm());
}

namespace {

ComplexPoint from_real(std::span<const double> x) {
  ComplexPoint z(static_cast<Eigen::Index>(x.size() / 2));
  for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = {x[2 * j], x[2 * j + 1]};
  return z;
}

}  // namespace

double weight_mass_numeric(const WeightSpec& spec, int m) {
  if (spec.dim < 1 || spec.dim > 2) throw DomainError("weight_mass_numeric supports n in {1, 2}");
  const QuantParams q(spec.alpha);
  std::vector<QuadratureRule1D> rules(2 * spec.dim, gauss_hermite(m));
  std::vector<double> scales(2 * spec.dim, spec.alpha);
  return integrate(
      [&](std::span<const double> x) {
        const ComplexPoint z = from_real(x);
        return weight(z, q) * std::exp(spec.alpha * z.squaredNorm());
      },
      rules, scales);
}

double reproducing_residual(const PolynomialSymbol& p, const ComplexPoint& z, const QuantParams& q,
                            const QuadratureRule1D& rule) {
  if (!p.is_holomorphic()) throw DomainError("reproducing_residual needs a holomorphic polynomial");
  require_dim(z, p.dim());
  require_finite(z);
  const int d = 2 * p.dim();
  std::vector<QuadratureRule1D> rules(d, rule);
  std::vector<double> scales(d, q.alpha());
  auto integrand = [&](std::span<const double> x) {
    const ComplexPoint w = from_real(x);
    return p(w) * kernel(z, w, q) * weight(w, q) * std::exp(q.alpha() * w.squaredNorm());
  };
  const double re = integrate([&](std::span<const double> x) { return integrand(x).real(); }, rules, scales);
  const double im = integrate([&](std::span<const double> x) { return integrand(x).imag(); }, rules, scales);
  return std::abs(std::complex<double>(re, im) - p(z));
}

double trace(const GaussianSymbol& g, const QuantParams& q) {
  const double a = q.alpha();
  return g.amplitude() * std::pow(a / (a + g.compression()), g.dim() / 2.0);
}

double trace_numeric(const GaussianSymbol& g, const QuantParams& q, int m) {
  if (g.dim() > 2) throw DomainError("trace_numeric supports n <= 2");
  std::vector<QuadratureRule1D> rules(2 * g.dim(), gauss_hermite(m));
  std::vector<double> scales(2 * g.dim(), q.alpha());
  const double integral =
      integrate([&](std::span<const double> x) { return eval(g, from_real(x)).real(); }, rules, scales);
  return std::pow(q.alpha() / std::numbers::pi, g.dim()) * integral;
}

namespace {

void check_purity_inputs(double lambda, int n) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("purity_index needs lambda > 0");
  if (n < 1) throw DomainError("purity_index needs n >= 1");
}

GaussianSymbol squared(const GaussianSymbol& g) {
  return {g.dim(), g.amplitude() * g.amplitude(), 2.0 * g.compression()};
}

}  // namespace

TraceReport purity_index(double lambda, const QuantParams& q, int n) {
  check_purity_inputs(lambda, n);
  const double a = q.alpha();
  const GaussianSymbol transformed = berezin_transform_closed(GaussianSymbol(n, 1.0, lambda), q);
  TraceReport report;
  report.raw_trace = trace(squared(transformed), q);
  report.normalized_trace = std::pow(a / (a + 3.0 * lambda), n / 2.0);
  report.alpha = a;
  report.lambda = lambda;
  report.dim = n;
  return report;
}

TraceReport purity_index_numeric(double lambda, const QuantParams& q, int n, int m) {
  check_purity_inputs(lambda, n);
  const double a = q.alpha();
  const GaussianSymbol transformed = berezin_transform_closed(GaussianSymbol(n, 1.0, lambda), q);
  // Normalized symbol: B / (sqrt(A') (alpha/(alpha+lambda))^{n/4}) with A' = 1.
  const double normalizer = std::pow(a / (a + lambda), n / 4.0);
  const GaussianSymbol normalized = transformed.scaled(1.0 / normalizer);
  TraceReport report;
  report.raw_trace = trace_numeric(squared(transformed), q, m);
  report.normalized_trace = trace_numeric(squared(normalized), q, m);
  report.alpha = a;
  report.lambda = lambda;
  report.dim = n;
  return report;
}

}  // namespace berezin
