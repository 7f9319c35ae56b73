#include "berezin/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "berezin/quadrature.hpp"
#include "berezin/tridiagonal.hpp"
#include "berezin/types.hpp"

namespace berezin {
namespace {

constexpr int kMaxLevels = 10;
constexpr int kMinSpectralPoints = 500;
constexpr double kMinSpectralHalfWidth = 6.0;

template <typename Derived>
double grid_norm(const Eigen::MatrixBase<Derived>& v, double dx) { return std::sqrt(dx) * v.norm(); }

Eigen::VectorXd sample(const StateFunction& psi, const GridSpec& grid) {
  const Eigen::VectorXd x = grid.nodes();
  Eigen::VectorXd v(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) v(i) = psi(x(i));
  if (!v.allFinite()) throw NumericalError("state is not finite on the grid");
  return v;
}

double checked_norm(const Eigen::VectorXd& psi, double dx) {
  const double n = grid_norm(psi, dx);
  if (!(n > 1e-150)) throw DomainError("state has negligible norm on the grid");
  return n;
}

// Central first difference with zero Dirichlet data outside the grid.
template <typename Vec>
Vec central_difference(const Vec& v, double dx) {
  const Eigen::Index n = v.size();
  Vec out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto right = i + 1 < n ? v(i + 1) : typename Vec::Scalar(0);
    const auto left = i > 0 ? v(i - 1) : typename Vec::Scalar(0);
    out(i) = (right - left) / (2.0 * dx);
  }
  return out;
}

std::vector<StateFunction> commutator_family() {
  return {
      [](double x) { return std::exp(-x * x / 2.0); },
      [](double x) { return x * std::exp(-x * x / 2.0); },
      [](double x) { return (1.0 + x * x) * std::exp(-x * x / 2.0); },
      [](double x) { return std::exp(-(x - 1.0) * (x - 1.0)); },
      [](double x) { return std::exp(-x * x / 4.0) * std::cos(x); },
  };
}

}  // namespace

Eigen::VectorXd GridSpec::nodes() const {
  const double dx = spacing();
  Eigen::VectorXd x(points);
  for (int i = 0; i < points; ++i) x(i) = -half_width + (i + 1) * dx;
  return x;
}

void validate(const OscillatorSpec& spec) {
  if (spec.dim < 1) throw DomainError("oscillator dim must be >= 1");
  if (!(spec.h > 0.0) || !std::isfinite(spec.h)) throw DomainError("oscillator h must be positive");
}

void validate(const GridSpec& grid) {
  if (!(grid.half_width > 0.0) || !std::isfinite(grid.half_width)) throw DomainError("grid half-width must be positive");
  if (grid.points < 3) throw DomainError("grid needs at least 3 points");
}

Eigen::VectorXd apply_hamiltonian(const Eigen::VectorXd& psi, const GridSpec& grid, double h) {
  validate(grid);
  if (psi.size() != grid.points) throw DimensionMismatch(grid.points, psi.size());
  const Eigen::VectorXd x = grid.nodes();
  const double dx = grid.spacing();
  const Eigen::Index n = psi.size();
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double right = i + 1 < n ? psi(i + 1) : 0.0;
    const double left = i > 0 ? psi(i - 1) : 0.0;
    out(i) = -(right - 2.0 * psi(i) + left) / (dx * dx) + (x(i) * x(i) + h - 1.0) * psi(i);
  }
  return out;
}

SpectrumResult spectrum(const OscillatorSpec& spec, const GridSpec& grid, int levels) {
  validate(spec);
  validate(grid);
  if (levels < 1 || levels > kMaxLevels) throw DomainError("spectrum levels must lie in [1, 10]");
  if (levels > grid.points) throw DomainError("spectrum needs more grid points than levels");

  const Eigen::VectorXd x = grid.nodes();
  const double dx = grid.spacing();
  const Eigen::VectorXd diag = (2.0 / (dx * dx)) + x.array().square() + (spec.h - 1.0);
  const Eigen::VectorXd off = Eigen::VectorXd::Constant(grid.points - 1, -1.0 / (dx * dx));
  const Eigen::VectorXd one_dim = tridiagonal_eigenvalues<double>(diag, off, 0, levels);

  // Sums over dim one-dimensional levels; keep the lowest `levels`.
  std::vector<double> sums(one_dim.data(), one_dim.data() + one_dim.size());
  for (int d = 1; d < spec.dim; ++d) {
    std::vector<double> next;
    for (double a : sums)
      for (Eigen::Index j = 0; j < one_dim.size(); ++j) next.push_back(a + one_dim(j));
    std::ranges::sort(next);
    next.resize(std::min<std::size_t>(next.size(), static_cast<std::size_t>(levels)));
    sums = std::move(next);
  }

  SpectrumResult result;
  result.eigenvalues = Eigen::Map<const Eigen::VectorXd>(sums.data(), static_cast<Eigen::Index>(sums.size()));
  if (!result.eigenvalues.allFinite()) throw NumericalError("spectrum produced non-finite eigenvalues");
  if (grid.points < kMinSpectralPoints || grid.half_width < kMinSpectralHalfWidth) {
    result.warning = "grid too coarse for spectral accuracy claims (need N >= 500, L >= 6)";
  }
  return result;
}

double eigen_residual(const StateFunction& psi, double energy, const OscillatorSpec& spec, const GridSpec& grid) {
  validate(spec);
  validate(grid);
  if (spec.dim != 1) throw DomainError("grid residuals are one-dimensional");
  const Eigen::VectorXd v = sample(psi, grid);
  const double dx = grid.spacing();
  const double norm = checked_norm(v, dx);
  return grid_norm(apply_hamiltonian(v, grid, spec.h) - energy * v, dx) / norm;
}

double ground_state_residual(const OscillatorSpec& spec, const GridSpec& grid) {
  return eigen_residual([](double x) { return std::exp(-x * x / 2.0); }, spec.dim * spec.h, spec, grid);
}

double ladder_identity_residual(const std::vector<StateFunction>& states, const GridSpec& grid, double h) {
  validate(grid);
  validate(OscillatorSpec{1, h});
  if (states.empty()) throw DomainError("ladder_identity_residual needs at least one state");
  const Eigen::VectorXd x = grid.nodes();
  const double dx = grid.spacing();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  double worst = 0.0;
  for (const auto& state : states) {
    const Eigen::VectorXd psi = sample(state, grid);
    const double norm = checked_norm(psi, dx);
    // z = (x + d/dx)/sqrt2, zbar = (x - d/dx)/sqrt2.
    const Eigen::VectorXd zpsi = inv_sqrt2 * (x.cwiseProduct(psi) + central_difference(psi, dx));
    const Eigen::VectorXd zbar_zpsi = inv_sqrt2 * (x.cwiseProduct(zpsi) - central_difference(zpsi, dx));
    const Eigen::VectorXd ladder = 2.0 * zbar_zpsi + h * psi;
    worst = std::max(worst, grid_norm(apply_hamiltonian(psi, grid, h) - ladder, dx) / norm);
  }
  return worst;
}

double commutator_residual(const GridSpec& grid, double h, CanonicalPair pair) {
  validate(grid);
  validate(OscillatorSpec{1, h});
  const Eigen::VectorXcd x = grid.nodes().cast<std::complex<double>>();
  const double dx = grid.spacing();
  const std::complex<double> ih(0.0, h);
  auto p = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return -ih * central_difference(v, dx); };
  auto xop = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return x.cwiseProduct(v); };

  double worst = 0.0;
  for (const auto& state : commutator_family()) {
    const Eigen::VectorXd real_psi = sample(state, grid);
    const double norm = checked_norm(real_psi, dx);
    const Eigen::VectorXcd psi = real_psi.cast<std::complex<double>>();
    Eigen::VectorXcd commutator;
    std::complex<double> expected = 0.0;
    switch (pair) {
      case CanonicalPair::kXP:
        commutator = xop(p(psi)) - p(xop(psi));
        expected = ih;
        break;
      case CanonicalPair::kXX:
        commutator = xop(xop(psi)) - xop(xop(psi));
        break;
      case CanonicalPair::kPP:
        commutator = p(p(psi)) - p(p(psi));
        break;
    }
    worst = std::max(worst, grid_norm(Eigen::VectorXcd(commutator - expected * psi), dx) / norm);
  }
  return worst;
}

namespace {

void check_uncertainty_inputs(double lambda, double amplitude) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("uncertainty needs lambda > 0");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DomainError("uncertainty needs amplitude K > 0");
}

void finish(UncertaintyReport& r, double norm_sq) {
  r.ratio = r.var_x * r.var_p / r.rhs;
  r.normalized_var_x = r.var_x / norm_sq;
  r.normalized_var_p = r.var_p / norm_sq;
}

}  // namespace

UncertaintyReport uncertainty_report(double lambda, double amplitude) {
  check_uncertainty_inputs(lambda, amplitude);
  const double k2 = amplitude * amplitude;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  UncertaintyReport r;
  r.lambda = lambda;
  r.amplitude = amplitude;
  r.var_x = k2 * sqrt_pi * std::pow(1.0 + lambda, 1.5) / (2.0 * std::pow(lambda, 1.5));
  r.var_p = k2 * sqrt_pi * std::sqrt(lambda) / (2.0 * std::sqrt(1.0 + lambda));
  r.rhs = k2 * k2 * std::numbers::pi * (1.0 + lambda) / (4.0 * lambda);
  finish(r, k2 * sqrt_pi * std::sqrt((1.0 + lambda) / lambda));
  return r;
}

UncertaintyReport uncertainty_report_numeric(double lambda, double amplitude, int m) {
  check_uncertainty_inputs(lambda, amplitude);
  const double width = lambda / (2.0 * (1.0 + lambda));
  auto psi = [&](auto x) { return amplitude * std::exp(-width * x * x); };
  auto dpsi = [&](double x) {
    constexpr double step = 1e-30;
    return std::imag(psi(std::complex<double>(x, step))) / step;
  };

  const QuadratureRule1D rule = gauss_hermite(m);
  const std::vector<QuadratureRule1D> rules{rule};
  // psi^2 decays like exp(-2 width x^2); absorb that Gaussian into the rule.
  const std::vector<double> scales{2.0 * width};
  auto unweighted = [&](double x) { return std::exp(2.0 * width * x * x); };

  const double norm_sq = integrate([&](std::span<const double> x) { return psi(x[0]) * psi(x[0]) * unweighted(x[0]); },
                                   rules, scales);
  UncertaintyReport r;
  r.lambda = lambda;
  r.amplitude = amplitude;
  r.var_x = integrate(
      [&](std::span<const double> x) { return x[0] * x[0] * psi(x[0]) * psi(x[0]) * unweighted(x[0]); }, rules,
      scales);
  r.var_p = integrate([&](std::span<const double> x) { return dpsi(x[0]) * dpsi(x[0]) * unweighted(x[0]); }, rules,
                      scales);
  // -i[x,p] = h = 1, so the bracket is (psi, psi).
  r.rhs = 0.25 * norm_sq * norm_sq;
  finish(r, norm_sq);
  return r;
}

}  // namespace berezin
