#include "berezin/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "berezin/bergman_space.hpp"
#include "berezin/gaussian_calculus.hpp"
#include "berezin/oscillator.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/random_symbols.hpp"
#include "berezin/semiclassics.hpp"

namespace berezin {
namespace {

using Checks = std::vector<CheckResult>;

void at_most(Checks& out, const std::string& suite, const std::string& name, double value, double tol) {
  out.push_back({suite, name, value, tol, std::isfinite(value) && value <= tol});
}

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::uint64_t ulp_distance(double a, double b) {
  const auto ia = std::bit_cast<std::int64_t>(a);
  const auto ib = std::bit_cast<std::int64_t>(b);
  return ia > ib ? static_cast<std::uint64_t>(ia - ib) : static_cast<std::uint64_t>(ib - ia);
}

const std::vector<ComplexPoint>& theorem_points() {
  static const std::vector<ComplexPoint> pts{
      make_point({{0.0, 0.0}}),   make_point({{0.4, 0.1}}),   make_point({{-0.7, 0.3}}),
      make_point({{1.0, -0.5}}),  make_point({{0.25, 1.2}}),
  };
  return pts;
}

Checks theorem1(std::uint64_t) {
  Checks out;
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.5, 1.0, 5.0, 50.0}) {
      const GaussianSymbol g(1, 1.0, lambda);
      const QuantParams q(alpha);
      const GaussianSymbol closed = berezin_transform_closed(g, q);
      for (const auto& z : theorem_points()) {
        const double numeric = berezin_transform_numeric(as_symbol(g), z, q, 80).real();
        worst = std::max(worst, rel_dev(numeric, eval(closed, z).real()));
      }
    }
  }
  at_most(out, "theorem1", "quadrature vs closed form, max relative deviation", worst, 1e-9);
  return out;
}

Checks corollary(std::uint64_t) {
  Checks out;
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.5, 1.0, 5.0}) {
      const QuantParams q(alpha);
      const TraceReport closed = purity_index(lambda, q, 1);
      const TraceReport numeric = purity_index_numeric(lambda, q, 1, 80);
      worst = std::max(worst, rel_dev(numeric.normalized_trace, closed.normalized_trace));
      worst = std::max(worst, rel_dev(numeric.raw_trace, closed.raw_trace));
    }
  }
  for (double alpha : {1.0, 5.0}) {
    const TraceReport closed = purity_index(1.0, QuantParams(alpha), 2);
    const TraceReport numeric = purity_index_numeric(1.0, QuantParams(alpha), 2, 24);
    worst = std::max(worst, rel_dev(numeric.normalized_trace, closed.normalized_trace));
  }
  at_most(out, "corollary", "normalized and raw trace, quadrature vs closed form", worst, 1e-9);
  double exact = 0.0;
  for (int n : {1, 2, 3}) {
    exact = std::max(exact, std::abs(purity_index(1.0, QuantParams(1.0), n).normalized_trace - std::ldexp(1.0, -n)));
  }
  at_most(out, "corollary", "alpha = lambda = 1 gives 2^-n exactly", exact, 0.0);
  at_most(out, "corollary", "alpha = 1e6 within 2e-6 of 1",
          std::abs(1.0 - purity_index(1.0, QuantParams(1e6), 1).normalized_trace), 2e-6);
  return out;
}

Checks heat(std::uint64_t) {
  Checks out;
  std::uint64_t worst = 0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.5, 1.0, 5.0}) {
      for (int n : {1, 2}) {
        const GaussianSymbol g(n, 1.0, lambda);
        const QuantParams q(alpha);
        const GaussianSymbol a = heat_evolve(g, q);
        const GaussianSymbol b = berezin_transform_closed(g, q);
        worst = std::max({worst, ulp_distance(a.amplitude(), b.amplitude()),
                          ulp_distance(a.compression(), b.compression())});
      }
    }
  }
  at_most(out, "heat", "heat flow vs Berezin transform, max ulp distance", static_cast<double>(worst), 1.0);

  const GaussianSymbol g(1, 1.0, 1.0);
  const std::vector<double> alphas{10.0, 100.0, 1000.0};
  std::vector<double> rem;
  for (double a : alphas) rem.push_back(taylor_remainder(g, QuantParams(a), make_point({{0.3, 0.0}})));
  at_most(out, "heat", "first-order Taylor remainder slope + 2", std::abs(log_log_slope(alphas, rem) + 2.0), 0.1);
  return out;
}

Checks expansion(std::uint64_t) {
  Checks out;
  const std::vector<ComplexPoint> grid{make_point({{0.0, 0.0}}), make_point({{0.3, 0.0}}), make_point({{0.7, 0.0}})};
  const ExpansionReport r = expansion_check(GaussianSymbol(1, 1.0, 1.0), {10.0, 100.0, 1000.0}, grid);
  at_most(out, "expansion", "alpha (B f - f) - Delta f / 4 slope + 1", std::abs(r.fitted_slope + 1.0), 0.1);
  return out;
}

Checks star(std::uint64_t seed) {
  Checks out;
  std::mt19937_64 rng(seed);
  const QuantParams q(1.7);
  double condition = 0.0;
  double assoc = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + trial % 2;
    const PolynomialSymbol f = random_polynomial(dim, 3, 6, rng);
    const PolynomialSymbol g = random_polynomial(dim, 3, 6, rng);
    condition = std::max(condition, quantization_condition_residual(f, g));
    const PolynomialSymbol h = random_polynomial(dim, 3, 6, rng);
    const PolynomialSymbol left = wick_star(wick_star(f, g, q), h, q);
    const PolynomialSymbol right = wick_star(f, wick_star(g, h, q), q);
    assoc = std::max(assoc, (left - right).max_abs_coefficient());
  }
  at_most(out, "star", "C1(f,g) - C1(g,f) - (i/2pi){f,g}, 100 random pairs", condition, 1e-14);
  at_most(out, "star", "associativity deviation, 100 random triples", assoc, 1e-12);

  const PolynomialSymbol z = PolynomialSymbol::z(1);
  const PolynomialSymbol zb = PolynomialSymbol::zbar(1);
  const PolynomialSymbol commutator = wick_star(z, zb, q) - wick_star(zb, z, q);
  const PolynomialSymbol expected = PolynomialSymbol::constant(1, 1.0 / q.alpha());
  at_most(out, "star", "z*zbar - zbar*z - 1/alpha", (commutator - expected).max_abs_coefficient(), 0.0);
  return out;
}

Checks spectrum_suite(std::uint64_t) {
  Checks out;
  for (double h : {0.5, 1.0}) {
    const OscillatorSpec spec{1, h};
    const Eigen::VectorXd coarse = spectrum(spec, GridSpec{10.0, 2000}, 4).eigenvalues;
    const Eigen::VectorXd fine = spectrum(spec, GridSpec{10.0, 4001}, 4).eigenvalues;
    double err = 0.0;
    double ratio_dev = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double exact = 2.0 * j + h;
      err = std::max(err, std::abs(coarse(j) - exact));
      ratio_dev = std::max(ratio_dev, std::abs((coarse(j) - exact) / (fine(j) - exact) - 4.0));
    }
    const std::string tag = h == 0.5 ? "h = 0.5" : "h = 1";
    at_most(out, "spectrum", tag + ": |E_j - (2j + h)|, j < 4", err, 1e-3);
    at_most(out, "spectrum", tag + ": |error ratio under halved spacing - 4|", ratio_dev, 0.5);
  }
  const GridSpec grid{10.0, 2000};
  at_most(out, "spectrum", "ground state residual", ground_state_residual(OscillatorSpec{1, 1.0}, grid), 1e-4);
  at_most(out, "spectrum", "ladder identity residual",
          ladder_identity_residual({[](double x) { return std::exp(-x * x / 2.0); },
                                    [](double x) { return x * x * std::exp(-x * x / 2.0); }},
                                   grid, 1.0),
          1e-3);
  at_most(out, "spectrum", "[x,p] = ih residual", commutator_residual(grid, 1.0), 1e-3);
  return out;
}

Checks uncertainty(std::uint64_t) {
  Checks out;
  double closed = 0.0;
  double numeric = 0.0;
  double moments = 0.0;
  for (double lambda : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    for (double k : {0.5, 1.0, 3.0}) {
      const UncertaintyReport c = uncertainty_report(lambda, k);
      const UncertaintyReport nq = uncertainty_report_numeric(lambda, k, 80);
      closed = std::max(closed, std::abs(c.ratio - 1.0));
      numeric = std::max(numeric, std::abs(nq.ratio - 1.0));
      moments = std::max({moments, rel_dev(nq.var_x, c.var_x), rel_dev(nq.var_p, c.var_p), rel_dev(nq.rhs, c.rhs)});
    }
  }
  at_most(out, "uncertainty", "closed-form ratio - 1", closed, 1e-12);
  at_most(out, "uncertainty", "quadrature ratio - 1", numeric, 1e-8);
  at_most(out, "uncertainty", "quadrature moments vs closed form", moments, 1e-9);
  return out;
}

Checks quadrature_suite(std::uint64_t seed) {
  Checks out;
  double worst = 0.0;
  for (int m : {2, 5, 10, 40}) {
    const QuadratureRule1D rule = gauss_hermite(m);
    for (int k = 0; k <= 2 * m - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += rule.weights(i) * std::pow(rule.nodes(i), k);
      if (k % 2 == 0) {
        worst = std::max(worst, rel_dev(s, gaussian_moment(k, 1.0)));
      } else {
        // Relative to the absolute moment Gamma((k+1)/2).
        worst = std::max(worst, std::abs(s) / std::tgamma((k + 1) / 2.0));
      }
    }
  }
  at_most(out, "quadrature", "Gauss-Hermite exactness to degree 2m-1", worst, 1e-12);

  const GaussianSymbol g(1, 1.0, 1.0);
  const QuantParams q(1.0);
  const double exact = berezin_transform_closed(g, q).amplitude();
  int outside = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const MonteCarloEstimate est =
        monte_carlo_transform(as_symbol(g), make_point({{0.0, 0.0}}), q, MonteCarloConfig{10000, seed + s});
    if (std::abs(est.estimate.real() - exact) > 4.0 * est.stderr_) ++outside;
  }
  at_most(out, "quadrature", "Monte-Carlo seeds outside 4 stderr (of 100)", outside, 1.0);
  return out;
}

using Suite = std::function<Checks(std::uint64_t)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"theorem1", theorem1},   {"corollary", corollary},       {"heat", heat},
      {"expansion", expansion}, {"star", star},                 {"spectrum", spectrum_suite},
      {"uncertainty", uncertainty}, {"quadrature", quadrature_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, suite] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    Checks all;
    for (const auto& [suite_name, suite] : suites()) {
      Checks part = suite(seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  auto it = suites().find(name);
  if (it == suites().end()) throw DomainError("unknown verification suite: " + name);
  return it->second(seed);
}

}  // namespace berezin
