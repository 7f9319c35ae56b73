#include "berezin/polynomial_json.hpp"

namespace berezin {

nlohmann::ordered_json to_json(const PolynomialSymbol& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back({{"beta", key.beta}, {"gamma", key.gamma}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"dim", p.dim()}, {"terms", std::move(terms)}};
}

PolynomialSymbol polynomial_from_json(const nlohmann::ordered_json& j) {
  try {
    PolynomialSymbol p(j.at("dim").get<int>());
    for (const auto& t : j.at("terms")) {
      p.add_term(t.at("beta").get<MultiIndex>(), t.at("gamma").get<MultiIndex>(),
                 {t.at("re").get<double>(), t.at("im").get<double>()});
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace berezin
