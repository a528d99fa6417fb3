#include "rforge/cli/export.hpp"

#include "rforge/errors.hpp"
#include "rforge/ordering.hpp"
#include "rforge/poly_json.hpp"

#include <algorithm>
#include <sstream>

namespace rforge::cli {

ExportFormat parse_export_format(std::string_view name) {
  if (name == "m2") return ExportFormat::m2;
  if (name == "singular") return ExportFormat::singular;
  if (name == "json") return ExportFormat::json;
  if (name == "text") return ExportFormat::text;
  throw ParameterOutOfRange("unsupported format '" + std::string(name) + "'");
}

std::string_view format_name(ExportFormat f) {
  switch (f) {
    case ExportFormat::m2:
      return "m2";
    case ExportFormat::singular:
      return "singular";
    case ExportFormat::json:
      return "json";
    case ExportFormat::text:
      break;
  }
  return "text";
}

bool alias_available(const Ring& ring) {
  return !ring.has_eliminand() && ring.auxiliaries().empty() && ring.d() + 1 <= 26;
}

namespace {

// "b_1_0" -> "b_(1,0)" for Macaulay2; anything else unchanged.
std::string indexed_token(const std::string& name) {
  auto first = name.find('_');
  if (first == std::string::npos) return name;
  auto second = name.find('_', first + 1);
  if (second == std::string::npos) return name;
  return name.substr(0, first) + "_(" + name.substr(first + 1, second - first - 1) + "," + name.substr(second + 1) + ")";
}

}  // namespace

std::string variable_name(const Ring& ring, std::size_t index, NameStyle style) {
  switch (style) {
    case NameStyle::plain:
      return ring.name(index);
    case NameStyle::indexed:
      return indexed_token(ring.name(index));
    case NameStyle::alias: {
      if (!alias_available(ring)) throw ParameterOutOfRange("alias names need a coefficient ring with d < 26");
      auto v = ring.variable(index);
      return std::string(1, static_cast<char>('a' + v.j)) + "_" + std::to_string(v.i);
    }
  }
  return ring.name(index);
}

std::string format_monomial(const Monomial& m, const Ring& ring, NameStyle style) {
  if (m.is_one()) return "1";
  std::vector<VarPower> factors(m.factors().begin(), m.factors().end());
  if (style == NameStyle::alias) {
    // Macaulay2 declares a_1..a_n before b_1..b_n, so factors follow columns.
    std::stable_sort(factors.begin(), factors.end(), [&](const VarPower& x, const VarPower& y) {
      auto vx = ring.variable(x.var), vy = ring.variable(y.var);
      return std::pair(vx.j, vx.i) < std::pair(vy.j, vy.i);
    });
  }
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += variable_name(ring, f.var, style);
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

namespace {

std::string coefficient_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Multiline comma-separated block used by both script formats.
std::string generator_block(const std::vector<Polynomial>& gens, const TermOrder& order, NameStyle style) {
  std::string out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    out += "  " + format_polynomial(gens[g], order, style);
    out += (g + 1 < gens.size()) ? ",\n" : "\n";
  }
  return out;
}

std::string m2_ring(const Ring& ring, NameStyle style, const std::string& name) {
  std::string vars;
  if (style == NameStyle::alias) {
    for (int j = 0; j <= ring.d(); ++j) {
      if (j) vars += ',';
      const char letter = static_cast<char>('a' + j);
      vars += std::string(1, letter) + "_1.." + letter + "_" + std::to_string(ring.n());
    }
  } else {
    for (std::size_t v = 0; v < ring.size(); ++v) {
      if (v) vars += ',';
      vars += variable_name(ring, v, style);
    }
  }
  return name + " = QQ[" + vars + "];\n";
}

}  // namespace

std::string format_polynomial(const Polynomial& p, const TermOrder& order, NameStyle style) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(p, order)) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? "-" : "+";
    first = false;
    if (t.monomial.is_one()) {
      out += coefficient_text(c);
    } else {
      if (c != 1) out += coefficient_text(c) + "*";
      out += format_monomial(t.monomial, ring, style);
    }
  }
  return out;
}

nlohmann::json ring_to_json(const Ring& ring) {
  auto vars = nlohmann::json::array();
  for (std::size_t v = 0; v < ring.size(); ++v) vars.push_back(ring.name(v));
  return {{"d", ring.d()},
          {"n", ring.n()},
          {"eliminand", ring.has_eliminand()},
          {"auxiliaries", ring.auxiliaries()},
          {"variables", std::move(vars)}};
}

RingPtr ring_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> aux;
    if (j.contains("auxiliaries")) aux = j.at("auxiliaries").get<std::vector<std::string>>();
    const bool x = j.contains("eliminand") && j.at("eliminand").get<bool>();
    return Ring::make(j.at("d").get<int>(), j.at("n").get<int>(), x, std::move(aux));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ring: ") + e.what());
  }
}

std::string export_ideal(const IdealPresentation& ideal, ExportFormat format, const ExportOptions& options) {
  const auto& ring = *ideal.ring;
  std::ostringstream out;
  switch (format) {
    case ExportFormat::m2: {
      const auto style = options.alias && alias_available(ring) ? NameStyle::alias : NameStyle::indexed;
      // Print terms the way Macaulay2 would order them in the declared ring.
      const auto order = style == NameStyle::alias ? column_major_degrevlex(ideal.ring) : TermOrder::degrevlex(ideal.ring);
      out << m2_ring(ring, style, options.ring_name);
      if (ideal.generators.empty()) {
        out << options.ideal_name << " = ideal(0_" << options.ring_name << ");\n";
      } else {
        out << options.ideal_name << " = ideal(\n" << generator_block(ideal.generators, order, style) << "  );\n";
      }
      break;
    }
    case ExportFormat::singular: {
      const auto order = TermOrder::degrevlex(ideal.ring);
      out << "ring " << options.ring_name << " = 0,(";
      for (std::size_t v = 0; v < ring.size(); ++v) out << (v ? "," : "") << ring.name(v);
      out << "),dp;\n";
      if (ideal.generators.empty()) {
        out << "ideal " << options.ideal_name << " = 0;\n";
      } else {
        out << "ideal " << options.ideal_name << " =\n"
            << generator_block(ideal.generators, order, NameStyle::plain) << "  ;\n";
      }
      break;
    }
    case ExportFormat::json: {
      nlohmann::json j{{"ring", ring_to_json(ring)}, {"order", ideal.order.describe()}, {"generators", to_json(ideal.generators)}};
      if (ideal.certified_basis) j["basis"] = to_json(*ideal.certified_basis);
      out << j.dump(2) << "\n";
      break;
    }
    case ExportFormat::text: {
      const auto order = TermOrder::degrevlex(ideal.ring);
      for (const auto& g : ideal.generators) out << format_polynomial(g, order, NameStyle::plain) << "\n";
      break;
    }
  }
  return out.str();
}

ImportedIdeal import_ideal(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("generators"))
    throw ParseError("ideal JSON needs \"ring\" and \"generators\"");
  ImportedIdeal out;
  out.ring = ring_from_json(j.at("ring"));
  out.generators = polynomials_from_json(j.at("generators"), out.ring);
  if (j.contains("basis")) out.basis = polynomials_from_json(j.at("basis"), out.ring);
  if (j.contains("order") && j.at("order").is_string()) out.order = j.at("order").get<std::string>();
  return out;
}

}  // namespace rforge::cli
