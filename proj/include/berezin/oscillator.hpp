#pragma once

// The harmonic oscillator H = 2 zbar z + h, z = (x + d/dx)/sqrt(2), on a uniform
// Dirichlet grid, and the uncertainty identity for the quantized Gaussian.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace berezin {

struct OscillatorSpec {
  int dim = 1;
  double h = 1.0;
};

/// Interior points x_i = -L + (i+1) dx, dx = 2L/(N+1), of [-L, L].
struct GridSpec {
  double half_width = 10.0;
  int points = 2000;

  double spacing() const { return 2.0 * half_width / (points + 1); }
  Eigen::VectorXd nodes() const;
};

void validate(const OscillatorSpec& spec);
void validate(const GridSpec& grid);

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;
  std::optional<std::string> warning;
};

/// Lowest `levels` eigenvalues of the discretized Hamiltonian. For dim > 1 the
/// one-dimensional levels are combined additively.
SpectrumResult spectrum(const OscillatorSpec& spec, const GridSpec& grid, int levels);

/// H applied to grid samples of psi (dim 1).
Eigen::VectorXd apply_hamiltonian(const Eigen::VectorXd& psi, const GridSpec& grid, double h);

using StateFunction = std::function<double(double)>;

/// ||H psi - energy psi|| / ||psi|| on the grid (dim 1).
double eigen_residual(const StateFunction& psi, double energy, const OscillatorSpec& spec,
                      const GridSpec& grid);

/// eigen_residual of exp(-x^2/2) with E_0 = h.
double ground_state_residual(const OscillatorSpec& spec, const GridSpec& grid);

/// max over states of ||H psi - (2 zbar(z psi) + h psi)|| / ||psi||.
double ladder_identity_residual(const std::vector<StateFunction>& states, const GridSpec& grid, double h);

enum class CanonicalPair { kXP, kXX, kPP };

/// max over a fixed family of smooth states of ||[A,B] psi - c psi|| / ||psi||
/// with p = -i h d/dx and c = i h for [x,p], 0 otherwise.
double commutator_residual(const GridSpec& grid, double h, CanonicalPair pair = CanonicalPair::kXP);

struct UncertaintyReport {
  double lambda = 0.0;
  double amplitude = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  /// (1/4) (-i[x,p] psi, psi)^2 with h = 1.
  double rhs = 0.0;
  double ratio = 0.0;
  /// var / ||psi||^2.
  double normalized_var_x = 0.0;
  double normalized_var_p = 0.0;
};

/// psi(x) = K exp(-lambda x^2 / (2 (1 + lambda))), second moments taken against
/// the unnormalized density psi^2.
UncertaintyReport uncertainty_report(double lambda, double amplitude);

/// The same quantities with every integral recomputed by an m-point
/// Gauss-Hermite rule and d psi/dx taken by complex-step differentiation.
UncertaintyReport uncertainty_report_numeric(double lambda, double amplitude, int m);

}  // namespace berezin
