#pragma once

#include <cstdint>
#include <random>

#include "berezin/semiclassics.hpp"

namespace berezin {

/// Polynomial with up to `max_terms` monomials of total degree <= max_degree and
/// coefficients uniform in [-1, 1] + i[-1, 1].
PolynomialSymbol random_polynomial(int dim, int max_degree, int max_terms, std::mt19937_64& rng);

}  // namespace berezin
