#include "berezin/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "berezin/bergman_space.hpp"
#include "berezin/tridiagonal.hpp"

namespace berezin {
namespace {

using Long = long double;

// Orthonormal Hermite recurrence at x: returns p_m(x) and p_{m-1}(x).
std::pair<Long, Long> hermite_pair(int m, Long x) {
  Long p_prev = 0;
  Long p = 1 / std::pow(std::numbers::pi_v<Long>, Long(0.25));
  for (int j = 1; j <= m; ++j) {
    const Long next = x * std::sqrt(Long(2) / j) * p - std::sqrt(Long(j - 1) / j) * p_prev;
    p_prev = p;
    p = next;
  }
  return {p, p_prev};
}

class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::string describe_node(std::span<const double> x) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t k = 0; k < x.size(); ++k) os << (k ? ", " : "") << x[k];
  os << ")";
  return os.str();
}

}  // namespace

QuadratureRule1D gauss_hermite(int m) {
  if (m < 1 || m > kMaxHermiteOrder) {
    throw DomainError("gauss_hermite: order must lie in [1, " + std::to_string(kMaxHermiteOrder) + "]");
  }
  // Jacobi matrix of the Hermite recurrence: zero diagonal, sqrt(k/2) off it.
  VectorX<Long> diag = VectorX<Long>::Zero(m);
  VectorX<Long> off(m - 1);
  for (int k = 1; k < m; ++k) off(k - 1) = std::sqrt(Long(k) / 2);
  const VectorX<Long> guess = tridiagonal_eigenvalues<Long>(diag, off);

  QuadratureRule1D rule;
  rule.order = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  const int half = m / 2;
  // Polish the non-negative roots, then mirror them.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    const int idx = m - 1 - i;
    Long x = (m % 2 == 1 && i == half) ? Long(0) : guess(idx);
    Long dp = 0;
    for (int it = 0; it < 100; ++it) {
      const auto [p, p_prev] = hermite_pair(m, x);
      dp = std::sqrt(Long(2) * m) * p_prev;
      const Long step = p / dp;
      x -= step;
      if (std::abs(step) <= std::numeric_limits<Long>::epsilon() * std::max(Long(1), std::abs(x))) break;
    }
    if (m % 2 == 1 && i == half) x = 0;
    const auto [p, p_prev] = hermite_pair(m, x);
    dp = std::sqrt(Long(2) * m) * p_prev;
    const Long w = Long(2) / (dp * dp);
    rule.nodes(idx) = static_cast<double>(x);
    rule.weights(idx) = static_cast<double>(w);
    rule.nodes(m - 1 - idx) = -static_cast<double>(x);
    rule.weights(m - 1 - idx) = static_cast<double>(w);
  }
  return rule;
}

double integrate(const RealFunction& fn, std::span<const QuadratureRule1D> rules,
                 std::span<const double> scales) {
  const std::size_t d = rules.size();
  if (d == 0 || d > 4) throw DomainError("integrate: dimension must lie in [1, 4]");
  if (scales.size() != d) throw DimensionMismatch(d, scales.size());
  double jacobian = 1.0;
  std::vector<double> inv_sqrt(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (!(scales[k] > 0.0) || !std::isfinite(scales[k])) throw DomainError("integrate: scales must be positive");
    inv_sqrt[k] = 1.0 / std::sqrt(scales[k]);
    jacobian *= inv_sqrt[k];
  }

  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  NeumaierSum sum;
  while (true) {
    double w = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      x[k] = rules[k].nodes(idx[k]) * inv_sqrt[k];
      w *= rules[k].weights(idx[k]);
    }
    const double v = fn(x);
    if (!std::isfinite(v)) throw NumericalError("integrate: non-finite integrand at node " + describe_node(x));
    sum.add(w * v);

    // Odometer increment, last axis fastest.
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++idx[k] < rules[k].order) break;
      idx[k] = 0;
      if (k == 0) return sum.value() * jacobian;
    }
  }
}

Symbol as_symbol(const GaussianSymbol& g) {
  return Symbol{g.dim(), [g](const ComplexPoint& w) { return eval(g, w); }, -g.compression()};
}

namespace {

void check_transform_inputs(const Symbol& f, const ComplexPoint& z, const QuantParams& q) {
  require_dim(z, f.dim);
  require_finite(z);
  if (!f.fn) throw DomainError("symbol has no function");
  if (!(f.growth < q.alpha())) {
    throw NumericalError("Berezin integral diverges: symbol growth rate " + std::to_string(f.growth) +
                         " is not below alpha = " + std::to_string(q.alpha()));
  }
}

// The Berezin density |K(z,w)|^2 rho(w) / K(z,z) divided by the Gaussian
// exp(-alpha |w - z|^2) absorbed into the rule, i.e. (alpha/pi)^n in exact
// arithmetic. Evaluated from the kernel and weight in log space.
double density_over_absorbed(const ComplexPoint& z, const ComplexPoint& w, const QuantParams& q) {
  const double log_density = log_abs_kernel_sq(z, w, q) + log_weight(w, q) - std::log(kernel(z, z, q).real());
  const double log_absorbed = -q.alpha() * (w - z).squaredNorm();
  return std::exp(log_density - log_absorbed);
}

}  // namespace

std::complex<double> berezin_transform_numeric(const Symbol& f, const ComplexPoint& z, const QuantParams& q,
                                               int m) {
  check_transform_inputs(f, z, q);
  if (f.dim > 2) throw DomainError("berezin_transform_numeric supports n <= 2");
  const QuadratureRule1D rule = gauss_hermite(m);
  const int d = 2 * f.dim;
  std::vector<QuadratureRule1D> rules(d, rule);
  std::vector<double> scales(d, q.alpha());

  auto point_at = [&](std::span<const double> t) {
    ComplexPoint w(f.dim);
    for (int j = 0; j < f.dim; ++j) w(j) = z(j) + std::complex<double>(t[2 * j], t[2 * j + 1]);
    return w;
  };
  const double re = integrate(
      [&](std::span<const double> t) {
        const ComplexPoint w = point_at(t);
        return f.fn(w).real() * density_over_absorbed(z, w, q);
      },
      rules, scales);
  const double im = integrate(
      [&](std::span<const double> t) {
        const ComplexPoint w = point_at(t);
        return f.fn(w).imag() * density_over_absorbed(z, w, q);
      },
      rules, scales);
  return {re, im};
}

MonteCarloEstimate monte_carlo_transform(const Symbol& f, const ComplexPoint& z, const QuantParams& q,
                                         const MonteCarloConfig& cfg) {
  check_transform_inputs(f, z, q);
  if (cfg.samples < 2) throw DomainError("monte_carlo_transform needs at least 2 samples");
  std::mt19937_64 gen(cfg.seed);
  // Each real coordinate of w - z is N(0, 1/(2 alpha)).
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5 / q.alpha()));

  ComplexPoint w(f.dim);
  std::complex<double> mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    for (int j = 0; j < f.dim; ++j) {
      const double dx = normal(gen);
      const double dy = normal(gen);
      w(j) = z(j) + std::complex<double>(dx, dy);
    }
    const std::complex<double> v = f.fn(w);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw NumericalError("monte_carlo_transform: non-finite sample");
    const std::complex<double> delta = v - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += std::real(std::conj(delta) * (v - mean));
  }
  const double n = static_cast<double>(cfg.samples);
  return {mean, std::sqrt(m2 / (n - 1.0) / n)};
}

}  // namespace berezin
