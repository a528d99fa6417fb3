#include "rforge/poly_json.hpp"

#include "rforge/errors.hpp"

namespace rforge {

nlohmann::json to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  auto order = TermOrder::degrevlex(p.ring());
  for (const auto& t : sorted_terms(p, order)) {
    auto m = nlohmann::json::object();
    for (const auto& f : t.monomial.factors()) m[p.ring()->name(f.var)] = f.exp;
    out.push_back({{"c", rational_to_string(t.coeff)}, {"m", std::move(m)}});
  }
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j, const RingPtr& ring) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("c") || !term.contains("m"))
      throw ParseError("polynomial term must be an object with \"c\" and \"m\"");
    if (!term["c"].is_string()) throw ParseError("term coefficient must be a \"num/den\" string");
    if (!term["m"].is_object()) throw ParseError("term monomial must be an object");
    MonomialBuilder mb;
    for (const auto& [name, exp] : term["m"].items()) {
      auto idx = ring->parse_name(name);
      if (!idx) throw RingMismatch("variable '" + name + "' is not in the ring");
      if (!exp.is_number_integer() || exp.get<long long>() < 0)
        throw ParseError("exponent of '" + name + "' must be a nonnegative integer");
      mb.multiply(*idx, exp.get<std::uint32_t>());
    }
    terms.push_back({mb.build(), parse_rational(term["c"].get<std::string>())});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

nlohmann::json to_json(const std::vector<Polynomial>& ps) {
  auto out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::vector<Polynomial> polynomials_from_json(const nlohmann::json& j, const RingPtr& ring) {
  if (!j.is_array()) throw ParseError("expected an array of polynomials");
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p, ring));
  return out;
}

}  // namespace rforge
