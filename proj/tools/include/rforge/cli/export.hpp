#pragma once

#include "rforge/groebner.hpp"
#include "rforge/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rforge::cli {

enum class ExportFormat { m2, singular, json, text };

ExportFormat parse_export_format(std::string_view name);
std::string_view format_name(ExportFormat f);

// How ring variables are spelled in scripts.
//   plain:   a_1_0, x, r, b_1_0
//   indexed: a_(1,0), x, r, b_(1,0)          (Macaulay2 subscripts)
//   alias:   a_1, b_1, c_1 for a_{1,0}, a_{1,1}, a_{1,2}
enum class NameStyle { plain, indexed, alias };

// alias is available for coefficient rings with at most 26 columns.
bool alias_available(const Ring& ring);
std::string variable_name(const Ring& ring, std::size_t index, NameStyle style);
std::string format_monomial(const Monomial& m, const Ring& ring, NameStyle style);
// Terms largest first under order; integer coefficients print bare, others as num/den.
std::string format_polynomial(const Polynomial& p, const TermOrder& order, NameStyle style);

struct ExportOptions {
  bool alias = true;  // Macaulay2 only; falls back to indexed names when unavailable
  std::string ring_name = "R";
  std::string ideal_name = "I";
};

// Script or document for the generators of the presentation. JSON output also
// carries the certified basis when present.
std::string export_ideal(const IdealPresentation& ideal, ExportFormat format, const ExportOptions& options = {});

struct ImportedIdeal {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<std::vector<Polynomial>> basis;
  std::string order;
};

// Reads the JSON produced by export_ideal.
ImportedIdeal import_ideal(const nlohmann::json& j);

nlohmann::json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const nlohmann::json& j);

}  // namespace rforge::cli
