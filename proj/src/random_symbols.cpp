#include "berezin/random_symbols.hpp"

namespace berezin {

PolynomialSymbol random_polynomial(int dim, int max_degree, int max_terms, std::mt19937_64& rng) {
  if (max_degree < 0 || max_terms < 1) throw DomainError("random_polynomial: bad degree or term budget");
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> slot(0, 2 * dim - 1);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  PolynomialSymbol p(dim);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    MultiIndex beta(dim, 0), gamma(dim, 0);
    const int d = degree(rng);
    for (int e = 0; e < d; ++e) {
      const int s = slot(rng);
      if (s < dim) {
        ++beta[s];
      } else {
        ++gamma[s - dim];
      }
    }
    const double re = coeff(rng);
    const double im = coeff(rng);
    p.add_term(beta, gamma, {re, im});
  }
  return p;
}

}  // namespace berezin
