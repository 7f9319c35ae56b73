#pragma once

// JSON form of a polynomial symbol:
//   {"dim": n, "terms": [{"beta": [...], "gamma": [...], "re": x, "im": y}, ...]}
// with terms in lexicographic (beta, gamma) order.

#include <json.hpp>

#include "berezin/semiclassics.hpp"

namespace berezin {

nlohmann::ordered_json to_json(const PolynomialSymbol& p);
PolynomialSymbol polynomial_from_json(const nlohmann::ordered_json& j);

}  // namespace berezin
