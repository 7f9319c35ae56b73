#pragma once

// Polynomial symbols in z and conj(z), the Wick (normal-ordered) star product,
// its bidifferential coefficients C_j, the Poisson bracket and the first-order
// expansion check of the Berezin transform.

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "berezin/gaussian_calculus.hpp"
#include "berezin/types.hpp"

namespace berezin {

using MultiIndex = std::vector<int>;

/// Exponent pair (beta, gamma) of the monomial z^beta conj(z)^gamma.
struct MonomialKey {
  MultiIndex beta;
  MultiIndex gamma;

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

/// A finite sum of complex multiples of z^beta conj(z)^gamma on C^n. Terms are
/// kept in lexicographic (beta, gamma) order; exact zeros are never stored.
class PolynomialSymbol {
 public:
  using Coefficient = std::complex<double>;
  using TermMap = std::map<MonomialKey, Coefficient>;

  explicit PolynomialSymbol(int dim);

  static PolynomialSymbol constant(int dim, Coefficient c);
  static PolynomialSymbol monomial(int dim, MultiIndex beta, MultiIndex gamma, Coefficient c = 1.0);
  /// The coordinate z_j.
  static PolynomialSymbol z(int dim, int j = 0);
  /// The coordinate conj(z_j).
  static PolynomialSymbol zbar(int dim, int j = 0);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * z^beta conj(z)^gamma, merging with an existing term.
  void add_term(const MultiIndex& beta, const MultiIndex& gamma, Coefficient c);
  Coefficient coefficient(const MultiIndex& beta, const MultiIndex& gamma) const;

  int degree() const;
  int holomorphic_degree() const;      // max |beta|
  int antiholomorphic_degree() const;  // max |gamma|
  bool is_holomorphic() const { return antiholomorphic_degree() == 0; }

  double max_abs_coefficient() const;

  std::complex<double> operator()(const ComplexPoint& z) const;

  /// d/dz_j and d/dconj(z_j), treating z and conj(z) as independent.
  PolynomialSymbol d_z(int j) const;
  PolynomialSymbol d_zbar(int j) const;

  PolynomialSymbol& operator+=(const PolynomialSymbol& other);
  PolynomialSymbol& operator-=(const PolynomialSymbol& other);
  PolynomialSymbol& operator*=(Coefficient c);

  friend PolynomialSymbol operator+(PolynomialSymbol a, const PolynomialSymbol& b) { return a += b; }
  friend PolynomialSymbol operator-(PolynomialSymbol a, const PolynomialSymbol& b) { return a -= b; }
  friend PolynomialSymbol operator*(PolynomialSymbol a, Coefficient c) { return a *= c; }
  friend PolynomialSymbol operator*(Coefficient c, PolynomialSymbol a) { return a *= c; }
  /// Pointwise product.
  friend PolynomialSymbol operator*(const PolynomialSymbol& a, const PolynomialSymbol& b);

  friend bool operator==(const PolynomialSymbol&, const PolynomialSymbol&) = default;

 private:
  void check_key(const MultiIndex& beta, const MultiIndex& gamma) const;

  int dim_;
  TermMap terms_;
};

/// Order-j coefficient of the Wick product:
///   C_j(f, g) = sum_{|beta| = j} (1/beta!) d_z^beta f * d_zbar^beta g.
PolynomialSymbol c_term(const PolynomialSymbol& f, const PolynomialSymbol& g, int j);

/// f * g = sum_j alpha^{-j} C_j(f, g); the sum is finite for polynomials.
PolynomialSymbol wick_star(const PolynomialSymbol& f, const PolynomialSymbol& g, const QuantParams& q);

/// Normalisation constant kappa in {f,g} = kappa * sum_j (d_j f dbar_j g - dbar_j f d_j g).
enum class BracketConvention {
  /// kappa = 2 pi / i, the unique choice with C_1(f,g) - C_1(g,f) = (i/2pi){f,g}.
  kQuantizationCondition,
  /// kappa = i.
  kConventional,
};

std::complex<double> bracket_constant(BracketConvention convention);

PolynomialSymbol poisson_bracket(const PolynomialSymbol& f, const PolynomialSymbol& g,
                                 BracketConvention convention = BracketConvention::kQuantizationCondition);

/// Max coefficient magnitude of C_1(f,g) - C_1(g,f) - (i/2pi){f,g}.
double quantization_condition_residual(const PolynomialSymbol& f, const PolynomialSymbol& g);

struct ExpansionReport {
  std::vector<double> alphas;
  /// sup over the grid of |alpha (B_alpha g - g) - Delta g / 4|.
  std::vector<double> residual_norms;
  /// Least-squares slope of log(residual) against log(alpha). NaN when any
  /// residual is exactly zero.
  double fitted_slope = 0.0;
};

ExpansionReport expansion_check(const GaussianSymbol& g, const std::vector<double>& alphas,
                                const std::vector<ComplexPoint>& grid);

/// Least-squares slope of log(y) on log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace berezin
