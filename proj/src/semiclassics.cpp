#include "berezin/semiclassics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace berezin {
namespace {

int total(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

// a (a-1) ... (a-k+1)
double falling(int a, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(a - i);
  return r;
}

double factorial(int k) { return falling(k, k); }

void require_same_dim(const PolynomialSymbol& f, const PolynomialSymbol& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch(static_cast<std::size_t>(f.dim()), static_cast<std::size_t>(g.dim()));
}

// Calls visit(beta) for every beta with |beta| = order and beta <= bound componentwise.
template <typename Visit>
void for_each_bounded(const MultiIndex& bound, int order, Visit&& visit) {
  MultiIndex beta(bound.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k + 1 == bound.size()) {
      if (remaining <= bound[k]) {
        beta[k] = remaining;
        visit(beta);
      }
      return;
    }
    for (int b = std::min(bound[k], remaining); b >= 0; --b) {
      beta[k] = b;
      self(self, k + 1, remaining - b);
    }
  };
  rec(rec, 0, order);
}

}  // namespace

PolynomialSymbol::PolynomialSymbol(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("polynomial dim must be >= 1");
}

PolynomialSymbol PolynomialSymbol::constant(int dim, Coefficient c) {
  PolynomialSymbol p(dim);
  p.add_term(MultiIndex(dim, 0), MultiIndex(dim, 0), c);
  return p;
}

PolynomialSymbol PolynomialSymbol::monomial(int dim, MultiIndex beta, MultiIndex gamma, Coefficient c) {
  PolynomialSymbol p(dim);
  p.add_term(beta, gamma, c);
  return p;
}

PolynomialSymbol PolynomialSymbol::z(int dim, int j) {
  MultiIndex beta(dim, 0);
  beta.at(j) = 1;
  return monomial(dim, beta, MultiIndex(dim, 0));
}

PolynomialSymbol PolynomialSymbol::zbar(int dim, int j) {
  MultiIndex gamma(dim, 0);
  gamma.at(j) = 1;
  return monomial(dim, MultiIndex(dim, 0), gamma);
}

void PolynomialSymbol::check_key(const MultiIndex& beta, const MultiIndex& gamma) const {
  if (beta.size() != static_cast<std::size_t>(dim_)) throw DimensionMismatch(dim_, beta.size());
  if (gamma.size() != static_cast<std::size_t>(dim_)) throw DimensionMismatch(dim_, gamma.size());
  auto negative = [](int e) { return e < 0; };
  if (std::ranges::any_of(beta, negative) || std::ranges::any_of(gamma, negative)) {
    throw DomainError("negative exponent in polynomial term");
  }
}

void PolynomialSymbol::add_term(const MultiIndex& beta, const MultiIndex& gamma, Coefficient c) {
  check_key(beta, gamma);
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("non-finite polynomial coefficient");
  if (c == Coefficient(0.0)) return;
  MonomialKey key{beta, gamma};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == Coefficient(0.0)) terms_.erase(it);
}

PolynomialSymbol::Coefficient PolynomialSymbol::coefficient(const MultiIndex& beta, const MultiIndex& gamma) const {
  auto it = terms_.find(MonomialKey{beta, gamma});
  return it == terms_.end() ? Coefficient(0.0) : it->second;
}

int PolynomialSymbol::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, total(key.beta) + total(key.gamma));
  return d;
}

int PolynomialSymbol::holomorphic_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, total(key.beta));
  return d;
}

int PolynomialSymbol::antiholomorphic_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, total(key.gamma));
  return d;
}

double PolynomialSymbol::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::complex<double> PolynomialSymbol::operator()(const ComplexPoint& z) const {
  require_dim(z, dim_);
  std::complex<double> sum = 0.0;
  for (const auto& [key, c] : terms_) {
    std::complex<double> term = c;
    for (int j = 0; j < dim_; ++j) {
      for (int e = 0; e < key.beta[j]; ++e) term *= z(j);
      for (int e = 0; e < key.gamma[j]; ++e) term *= std::conj(z(j));
    }
    sum += term;
  }
  return sum;
}

PolynomialSymbol PolynomialSymbol::d_z(int j) const {
  if (j < 0 || j >= dim_) throw DomainError("coordinate index out of range");
  PolynomialSymbol out(dim_);
  for (const auto& [key, c] : terms_) {
    if (key.beta[j] == 0) continue;
    MultiIndex beta = key.beta;
    const int e = beta[j]--;
    out.add_term(beta, key.gamma, c * static_cast<double>(e));
  }
  return out;
}

PolynomialSymbol PolynomialSymbol::d_zbar(int j) const {
  if (j < 0 || j >= dim_) throw DomainError("coordinate index out of range");
  PolynomialSymbol out(dim_);
  for (const auto& [key, c] : terms_) {
    if (key.gamma[j] == 0) continue;
    MultiIndex gamma = key.gamma;
    const int e = gamma[j]--;
    out.add_term(key.beta, gamma, c * static_cast<double>(e));
  }
  return out;
}

PolynomialSymbol& PolynomialSymbol::operator+=(const PolynomialSymbol& other) {
  require_same_dim(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key.beta, key.gamma, c);
  return *this;
}

PolynomialSymbol& PolynomialSymbol::operator-=(const PolynomialSymbol& other) {
  require_same_dim(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key.beta, key.gamma, -c);
  return *this;
}

PolynomialSymbol& PolynomialSymbol::operator*=(Coefficient c) {
  if (c == Coefficient(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second == Coefficient(0.0)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PolynomialSymbol operator*(const PolynomialSymbol& a, const PolynomialSymbol& b) {
  require_same_dim(a, b);
  PolynomialSymbol out(a.dim());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      MultiIndex beta(a.dim()), gamma(a.dim());
      for (int j = 0; j < a.dim(); ++j) {
        beta[j] = ka.beta[j] + kb.beta[j];
        gamma[j] = ka.gamma[j] + kb.gamma[j];
      }
      out.add_term(beta, gamma, ca * cb);
    }
  }
  return out;
}

PolynomialSymbol c_term(const PolynomialSymbol& f, const PolynomialSymbol& g, int j) {
  require_same_dim(f, g);
  if (j < 0) throw DomainError("c_term order must be >= 0");
  const int n = f.dim();
  PolynomialSymbol out(n);
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      // beta can differentiate z^{kf.beta} and conj(z)^{kg.gamma}.
      MultiIndex bound(n);
      for (int k = 0; k < n; ++k) bound[k] = std::min(kf.beta[k], kg.gamma[k]);
      if (total(bound) < j) continue;
      for_each_bounded(bound, j, [&](const MultiIndex& beta) {
        double weight = 1.0;
        MultiIndex zexp(n), zbexp(n);
        for (int k = 0; k < n; ++k) {
          weight *= falling(kf.beta[k], beta[k]) * falling(kg.gamma[k], beta[k]) / factorial(beta[k]);
          zexp[k] = kf.beta[k] - beta[k] + kg.beta[k];
          zbexp[k] = kf.gamma[k] + kg.gamma[k] - beta[k];
        }
        out.add_term(zexp, zbexp, cf * cg * weight);
      });
    }
  }
  return out;
}

PolynomialSymbol wick_star(const PolynomialSymbol& f, const PolynomialSymbol& g, const QuantParams& q) {
  require_same_dim(f, g);
  const int top = std::min(f.holomorphic_degree(), g.antiholomorphic_degree());
  const double inv_alpha = 1.0 / q.alpha();
  PolynomialSymbol out(f.dim());
  double scale = 1.0;
  for (int j = 0; j <= top; ++j) {
    out += c_term(f, g, j) * scale;
    scale *= inv_alpha;
  }
  return out;
}

std::complex<double> bracket_constant(BracketConvention convention) {
  switch (convention) {
    case BracketConvention::kQuantizationCondition:
      return 2.0 * std::numbers::pi / std::complex<double>(0.0, 1.0);
    case BracketConvention::kConventional:
      return {0.0, 1.0};
  }
  throw DomainError("unknown bracket convention");
}

PolynomialSymbol poisson_bracket(const PolynomialSymbol& f, const PolynomialSymbol& g, BracketConvention convention) {
  require_same_dim(f, g);
  PolynomialSymbol sum(f.dim());
  for (int j = 0; j < f.dim(); ++j) {
    sum += f.d_z(j) * g.d_zbar(j);
    sum -= f.d_zbar(j) * g.d_z(j);
  }
  return sum * bracket_constant(convention);
}

double quantization_condition_residual(const PolynomialSymbol& f, const PolynomialSymbol& g) {
  const std::complex<double> i_over_2pi(0.0, 1.0 / (2.0 * std::numbers::pi));
  PolynomialSymbol diff = c_term(f, g, 1) - c_term(g, f, 1);
  diff -= poisson_bracket(f, g) * i_over_2pi;
  return diff.max_abs_coefficient();
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("log_log_slope needs two equal-length series");
  double mx = 0.0, my = 0.0;
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

ExpansionReport expansion_check(const GaussianSymbol& g, const std::vector<double>& alphas,
                                const std::vector<ComplexPoint>& grid) {
  if (alphas.size() < 3) throw DomainError("expansion_check needs at least 3 alpha values");
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (!(alphas[i] > alphas[i - 1])) throw DomainError("expansion_check alphas must be strictly increasing");
  }
  if (grid.empty()) throw DomainError("expansion_check needs a non-empty grid");
  for (const auto& z : grid) require_dim(z, g.dim());

  ExpansionReport report;
  report.alphas = alphas;
  for (double alpha : alphas) {
    const QuantParams q(alpha);
    const GaussianSymbol transformed = berezin_transform_closed(g, q);
    double sup = 0.0;
    for (const auto& z : grid) {
      const double first_order = alpha * (eval(transformed, z).real() - eval(g, z).real());
      sup = std::max(sup, std::abs(first_order - quarter_laplacian(g, z)));
    }
    report.residual_norms.push_back(sup);
  }
  report.fitted_slope = log_log_slope(report.alphas, report.residual_norms);
  return report;
}

}  // namespace berezin
