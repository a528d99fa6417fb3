#include "rforge/cli/cli.hpp"

#include "rforge/cli/export.hpp"
#include "rforge/errors.hpp"
#include "rforge/geometry.hpp"
#include "rforge/groebner.hpp"
#include "rforge/minors.hpp"
#include "rforge/ordering.hpp"
#include "rforge/poly_json.hpp"
#include "rforge/verify.hpp"
#include "rforge/walks.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace rforge::cli {

namespace {

using nlohmann::json;

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  int d = 2;
  int n = 3;
  std::optional<int> k;
  std::string format;
  std::string order = "diag";
  bool reduced = false;
  bool monomials = false;
  bool alias = true;
  bool initial = false;
  std::uint64_t seed = 1;
  bool planted = false;
  std::size_t samples = 200;
  std::string coeffs;
  std::string input;
  std::string output;
  std::vector<int> degrees;
  std::string check;
  std::string what = "minors";
  std::optional<std::size_t> max_pairs;
  std::optional<std::size_t> max_basis;
  std::optional<int> max_degree;
  std::optional<double> timeout;
};

GroebnerLimits limits_of(const Options& o) {
  auto limits = GroebnerLimits::from_environment();
  if (o.max_pairs) limits.max_pairs = *o.max_pairs;
  if (o.max_basis) limits.max_basis = *o.max_basis;
  if (o.max_degree) limits.max_degree = *o.max_degree;
  if (o.timeout)
    limits.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(*o.timeout * 1000.0));
  return limits;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

TermOrder order_by_name(const std::string& name, int d, int n, const RingPtr& ring) {
  if (name == "diag") return diagonal_order(build_diagonal_weights(d, n), ring);
  if (name == "degrevlex") return column_major_degrevlex(ring);
  if (name == "lex") return TermOrder::lex(ring);
  throw UsageError("unknown order '" + name + "'");
}

NameStyle display_style(const Ring& ring, bool alias) {
  return alias && alias_available(ring) ? NameStyle::alias : NameStyle::plain;
}

json rows_json(const RowSelection& sel) {
  auto rows = json::array();
  for (const auto& r : sel.rows()) rows.push_back({r.block, r.poly});
  return rows;
}

json walk_json(const MinorWalk& w) {
  auto steps = json::array();
  for (const auto& p : w.steps) steps.push_back({p.u, p.v});
  return steps;
}

json variable_names(const Ring& ring, const std::vector<std::size_t>& vars) {
  auto out = json::array();
  for (auto v : vars) out.push_back(ring.name(v));
  return out;
}

json report(const std::string& claim, json parameters, bool passed, json witnesses) {
  return {{"claim", claim},
          {"parameters", std::move(parameters)},
          {"status", passed ? "pass" : "fail"},
          {"witnesses", std::move(witnesses)}};
}

json dn(const Options& o) { return {{"d", o.d}, {"n", o.n}}; }

// --- subcommands ---------------------------------------------------------

int cmd_cascade(const Options& o, std::ostream& out) {
  if (!o.k) throw UsageError("cascade needs --k");
  auto m = build_cascade(o.d, o.n, *o.k);
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (int r = 1; r <= m.rows(); ++r)
    for (int c = 1; c <= m.cols(); ++c) {
      auto v = m.variable_at(m.label(r), c);
      cells[r - 1][c - 1] = v ? to_string(*v) : "0";
    }
  if (o.format == "json") {
    out << json{{"d", o.d}, {"n", o.n}, {"k", *o.k}, {"rows", cells}}.dump(2) << "\n";
    return exit_ok;
  }
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& cell : row) width = std::max(width, cell.size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? " " : "") << std::setw(static_cast<int>(width)) << row[c];
    out << "\n";
  }
  return exit_ok;
}

IdealPresentation coefficient_presentation(int d, int n, std::vector<Polynomial> gens) {
  auto ring = Ring::coefficients(d, n);
  return {ring, std::move(gens), TermOrder::degrevlex(ring), std::nullopt, {}};
}

int cmd_gens(const Options& o, std::ostream& out) {
  auto records = o.reduced ? generators_for_basis(o.d, o.n) : enumerate_generators(o.d, o.n, o.k);
  if (o.reduced && o.k)
    std::erase_if(records, [&](const GeneratorRecord& r) { return r.k != *o.k; });
  auto ideal = coefficient_presentation(o.d, o.n, polys_of(records));
  const auto format = parse_export_format(o.format.empty() ? "json" : o.format);
  if (format != ExportFormat::json) {
    out << export_ideal(ideal, format, {.alias = o.alias});
    return exit_ok;
  }
  auto doc = json::parse(export_ideal(ideal, format));
  auto meta = json::array();
  for (const auto& r : records)
    meta.push_back({{"k", r.k}, {"rows", rows_json(r.selection)}, {"walk", walk_json(r.walk)}, {"degree", r.degree}});
  doc["records"] = std::move(meta);
  out << doc.dump(2) << "\n";
  return exit_ok;
}

int cmd_walks(const Options& o, std::ostream& out) {
  std::vector<MinorWalk> walks;
  if (o.reduced) {
    walks = enumerate_reduced(o.d, o.n);
    if (o.k) std::erase_if(walks, [&](const MinorWalk& w) { return w.length() != static_cast<std::size_t>(o.d + *o.k); });
  } else if (o.k) {
    walks = enumerate_walks(o.d, o.n, *o.k);
  } else {
    for (int k = 1; k <= o.d; ++k) {
      auto part = enumerate_walks(o.d, o.n, k);
      walks.insert(walks.end(), part.begin(), part.end());
    }
  }
  auto ring = Ring::coefficients(o.d, o.n);
  const bool text = o.format == "text";
  auto doc = json::array();
  for (const auto& w : walks) {
    if (o.monomials) {
      auto m = format_monomial(walk_leading_monomial(w, *ring), *ring, NameStyle::plain);
      if (text)
        out << m << "\n";
      else
        doc.push_back(m);
    } else if (text) {
      for (std::size_t s = 0; s < w.steps.size(); ++s)
        out << (s ? " " : "") << "(" << w.steps[s].u << "," << w.steps[s].v << ")";
      out << "\n";
    } else {
      doc.push_back(walk_json(w));
    }
  }
  if (!text) out << doc.dump() << "\n";
  return exit_ok;
}

int cmd_leadterms(const Options& o, std::ostream& out) {
  auto ring = Ring::coefficients(o.d, o.n);
  const auto order = order_by_name(o.order, o.d, o.n, ring);
  const auto style = display_style(*ring, o.alias);
  auto records = o.reduced ? generators_for_basis(o.d, o.n) : enumerate_generators(o.d, o.n, o.k);
  std::vector<Monomial> leads;
  if (o.initial) {
    auto basis = buchberger(polys_of(records), order, limits_of(o));
    leads = initial_ideal_generators(*basis.certified_basis, order);
  } else {
    for (const auto& r : records) leads.push_back(leading_term(r.poly, order).monomial);
  }
  if (o.format == "json") {
    auto doc = json::array();
    for (const auto& m : leads) doc.push_back(format_monomial(m, *ring, style));
    out << doc.dump() << "\n";
  } else {
    for (const auto& m : leads) out << format_monomial(m, *ring, style) << "\n";
  }
  return exit_ok;
}

SquareFreeMonomialIdeal lead_ideal_of_g(int d, int n) {
  auto ring = Ring::coefficients(d, n);
  std::vector<Monomial> leads;
  for (const auto& w : enumerate_reduced(d, n)) leads.push_back(walk_leading_monomial(w, *ring));
  return SquareFreeMonomialIdeal(std::move(leads));
}

int cmd_components(const Options& o, std::ostream& out) {
  auto ring = Ring::coefficients(o.d, o.n);
  auto ideal = lead_ideal_of_g(o.d, o.n);
  auto primes = minimal_primes(ideal);
  auto dd = dim_and_degree(ideal, ring->size());
  auto comps = json::array();
  for (const auto& p : primes) comps.push_back(variable_names(*ring, p));
  out << json{{"components", std::move(comps)}, {"dim", dd.dimension}, {"degree", dd.degree},
              {"equidimensional", dd.equidimensional}}
             .dump(2)
      << "\n";
  return exit_ok;
}

int cmd_degree(const Options& o, std::ostream& out) {
  if (o.degrees.empty()) throw UsageError("degree needs --degrees");
  out << json{{"degrees", o.degrees}, {"D", chow_degree(o.degrees)}}.dump() << "\n";
  return exit_ok;
}

CoefficientTuple read_tuple(const Options& o, const CLI::App& sub) {
  auto tuple = CoefficientTuple::from_json(read_json_file(o.coeffs));
  if ((sub.count("--d") && tuple.d() != o.d) || (sub.count("--n") && tuple.n() != o.n))
    throw UsageError("--d/--n disagree with the coefficient file");
  return tuple;
}

int cmd_eval(const Options& o, const CLI::App& sub, std::ostream& out) {
  auto tuple = read_tuple(o, sub);
  MembershipScanner scanner(tuple.d(), tuple.n());
  auto scan = scanner.scan(tuple);
  auto table = json::array();
  for (std::size_t g = 0; g < scanner.generators().size(); ++g) {
    const auto& rec = scanner.generators()[g];
    table.push_back({{"k", rec.k}, {"rows", rows_json(rec.selection)}, {"vanishes", static_cast<bool>(scan.vanishes[g])}});
  }
  json root{{"has_affine_common_root", scan.root.has_affine_common_root},
            {"all_leading_zero", scan.root.all_leading_zero},
            {"gcd_degree", scan.root.gcd_degree},
            {"gcd", scan.root.gcd.to_string()}};
  out << json{{"d", tuple.d()},
              {"n", tuple.n()},
              {"root", std::move(root)},
              {"all_generators_vanish", scan.all_generators_vanish},
              {"top_minors_vanish", scan.top_minors_vanish},
              {"consistent", scan.consistent},
              {"generators", std::move(table)}}
             .dump(2)
      << "\n";
  return scan.consistent ? exit_ok : exit_check_failed;
}

int cmd_sample(const Options& o, std::ostream& out) {
  json doc;
  if (o.planted) {
    auto s = sample_planted(o.d, o.n, o.seed);
    doc = s.tuple.to_json();
    doc["root"] = rational_to_string(s.root);
  } else {
    doc = sample_random(o.d, o.n, o.seed).to_json();
  }
  doc["seed"] = o.seed;
  out << doc.dump(2) << "\n";
  return exit_ok;
}

int cmd_export(const Options& o, std::ostream& out) {
  const auto format = parse_export_format(o.format.empty() ? "m2" : o.format);
  IdealPresentation ideal = [&] {
    if (!o.input.empty()) {
      auto imported = import_ideal(read_json_file(o.input));
      IdealPresentation p{imported.ring, imported.generators, TermOrder::degrevlex(imported.ring), std::nullopt, {}};
      if (o.what == "basis") {
        if (!imported.basis) throw UsageError(o.input + " carries no basis");
        p.generators = *imported.basis;
      }
      return p;
    }
    if (o.what == "minors") return coefficient_presentation(o.d, o.n, polys_of(enumerate_generators(o.d, o.n)));
    if (o.what == "top") return coefficient_presentation(o.d, o.n, polys_of(enumerate_generators(o.d, o.n, o.d)));
    if (o.what == "reduced") return coefficient_presentation(o.d, o.n, polys_of(generators_for_basis(o.d, o.n)));
    if (o.what == "basis") {
      auto ring = Ring::coefficients(o.d, o.n);
      auto gens = polys_of(enumerate_generators(o.d, o.n));
      auto p = buchberger(gens, order_by_name(o.order, o.d, o.n, ring), limits_of(o));
      p.generators = *p.certified_basis;
      return p;
    }
    if (o.what == "eliminated") {
      auto p = eliminate_x(o.d, o.n, limits_of(o));
      p.generators = *p.certified_basis;
      return p;
    }
    throw UsageError("unknown --what '" + o.what + "'");
  }();
  out << export_ideal(ideal, format, {.alias = o.alias});
  return exit_ok;
}

// --- verify ----------------------------------------------------------------

const std::vector<std::pair<std::string, std::string>>& verify_claims() {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"groebner", "reduced-walk-minors-form-groebner-basis"},
      {"elimination", "minors-generate-resultant-ideal"},
      {"chart", "top-minors-agree-on-chart"},
      {"diagonal", "diagonal-is-leading-term"},
      {"planted", "planted-root-annihilates-generators"},
      {"roots", "top-minors-cut-out-common-roots"},
      {"rank", "rank-deficiency-cascades-down"},
      {"components", "initial-ideal-components"},
      {"sylvester", "top-minor-is-sylvester-resultant"},
      {"example", "degrevlex-initial-ideal-example"},
  };
  return table;
}

std::vector<std::string> verify_checks() {
  std::vector<std::string> names;
  for (const auto& [check, claim] : verify_claims()) names.push_back(check);
  return names;
}

std::string claim_of(const std::string& check) {
  for (const auto& [name, claim] : verify_claims())
    if (name == check) return claim;
  return check;
}

json verify_groebner(const Options& o) {
  auto gens = polys_of(generators_for_basis(o.d, o.n));
  auto cert = certify_groebner(gens, diagonal_order(build_diagonal_weights(o.d, o.n)));
  auto failures = json::array();
  for (auto [i, j] : cert.failures) failures.push_back({i, j});
  return report(claim_of("groebner"), dn(o), cert.ok(),
                {{"generators", gens.size()}, {"pairs_checked", cert.pairs_checked}, {"failures", failures}});
}

json verify_elimination(const Options& o) {
  auto limits = limits_of(o);
  auto elim = eliminate_x(o.d, o.n, limits);
  auto minors = coefficient_presentation(o.d, o.n, polys_of(enumerate_generators(o.d, o.n)));
  const bool minors_in_elim = contained_in(minors.generators, *elim.certified_basis, elim.order);
  const bool equal = minors_in_elim && ideal_equal(minors, elim, limits);
  return report(claim_of("elimination"), dn(o), equal,
                {{"minors", minors.generators.size()},
                 {"elimination_basis", elim.certified_basis->size()},
                 {"minors_in_elimination", minors_in_elim},
                 {"equal", equal}});
}

json verify_chart(const Options& o) {
  auto c = chart_equal(o.d, o.n, limits_of(o));
  return report(claim_of("chart"), dn(o), c.equal,
                {{"j_generators", c.j_generators},
                 {"i_generators", c.i_generators},
                 {"j_basis", c.j_basis},
                 {"i_basis", c.i_basis},
                 {"j_in_i", c.j_in_i},
                 {"i_in_j", c.i_in_j}});
}

json verify_diagonal(const Options& o) {
  auto r = verify_diagonal_property(o.d, o.n);
  auto ring = Ring::coefficients(o.d, o.n);
  auto bad = json::array();
  for (const auto& c : r.checks)
    if (!c.matches || !c.strict_weight)
      bad.push_back({{"k", c.k},
                     {"rows", rows_json(c.selection)},
                     {"diagonal", format_monomial(c.diagonal, *ring, NameStyle::plain)},
                     {"leading", format_monomial(c.leading, *ring, NameStyle::plain)},
                     {"strict_weight", c.strict_weight}});
  return report(claim_of("diagonal"), dn(o), r.ok(),
                {{"minors", r.checks.size()}, {"violations", std::move(bad)}});
}

json verify_planted(const Options& o) {
  auto r = planted_vanishing(o.d, o.n);
  return report(claim_of("planted"), dn(o), r.ok(),
                {{"generators", r.generators}, {"nonvanishing", r.nonvanishing}});
}

json sampling_witness(const SamplingReport& r) {
  return {{"samples", r.samples}, {"eligible", r.eligible}, {"failing_seeds", r.failures}};
}

json verify_roots(const Options& o) {
  auto planted = planted_sampling(o.d, o.n, o.samples, o.seed);
  auto random = nonplanted_sampling(o.d, o.n, o.samples, o.seed);
  auto params = dn(o);
  params["samples"] = o.samples;
  params["seed"] = o.seed;
  return report(claim_of("roots"), params, planted.ok() && random.ok(),
                {{"planted", sampling_witness(planted)}, {"random", sampling_witness(random)}});
}

json verify_rank(const Options& o) {
  auto r = rank_cascade_sampling(o.d, o.n, o.samples, o.seed);
  auto params = dn(o);
  params["samples"] = o.samples;
  params["seed"] = o.seed;
  return report(claim_of("rank"), params, r.ok(), sampling_witness(r));
}

json verify_components(const Options& o) {
  auto ring = Ring::coefficients(o.d, o.n);
  auto ideal = lead_ideal_of_g(o.d, o.n);
  auto primes = minimal_primes(ideal);
  auto dd = dim_and_degree(ideal, ring->size());
  std::set<std::vector<std::size_t>> expected;
  for (const auto& c : components(o.d, o.n)) {
    std::vector<std::size_t> vars;
    for (const auto& v : c.variables) vars.push_back(ring->index_of(v));
    std::sort(vars.begin(), vars.end());
    expected.insert(vars);
  }
  const std::set<std::vector<std::size_t>> found(primes.begin(), primes.end());
  const int nd = o.d * o.n;
  const bool ok = found == expected && primes.size() == static_cast<std::size_t>(nd) && dd.dimension == nd &&
                  dd.degree == nd && dd.equidimensional;
  auto comps = json::array();
  for (const auto& p : primes) comps.push_back(variable_names(*ring, p));
  return report(claim_of("components"), dn(o), ok,
                {{"components", std::move(comps)},
                 {"matches_coordinate_subspaces", found == expected},
                 {"component_size", primes.empty() ? 0 : primes.front().size()},
                 {"dim", dd.dimension},
                 {"degree", dd.degree}});
}

json verify_sylvester(const Options& o) {
  if (o.n != 2) throw UsageError("verify sylvester needs --n 2");
  auto ring = Ring::coefficients(o.d, 2);
  auto top = enumerate_generators(o.d, 2, o.d);
  auto res = sylvester_resultant(ring, 1, 2);
  const bool ok = top.size() == 1 && (top[0].poly == res || top[0].poly == -res);
  return report(claim_of("sylvester"), dn(o), ok,
                {{"top_minors", top.size()}, {"resultant_terms", res.terms().size()},
                 {"sign", ok ? (top[0].poly == res ? 1 : -1) : 0}});
}

// The degrevlex initial ideal of the d = 2, n = 3 minors, as printed by Macaulay2.
json verify_example(const Options& o) {
  if (o.d != 2 || o.n != 3) throw UsageError("verify example is defined for --d 2 --n 3");
  auto ring = Ring::coefficients(2, 3);
  auto order = column_major_degrevlex(ring);
  auto p = buchberger(polys_of(enumerate_generators(2, 3)), order, limits_of(o));
  std::vector<std::string> got;
  for (const auto& m : initial_ideal_generators(*p.certified_basis, order))
    got.push_back(format_monomial(m, *ring, NameStyle::alias));
  const std::vector<std::string> expected{"a_3*b_2*c_1",     "a_3*b_2*b_3*c_2", "a_3*b_1*b_3*c_2", "a_2*b_1*b_3*c_2",
                                          "a_3*b_1*b_3*c_1", "a_2*b_1*b_3*c_1", "a_2*b_1*b_2*c_1"};
  const std::set<std::string> got_set(got.begin(), got.end()), expected_set(expected.begin(), expected.end());
  return report(claim_of("example"), dn(o), got_set == expected_set && got.size() == expected.size(),
                {{"initial_ideal", got}, {"basis_size", p.certified_basis->size()}});
}

int cmd_verify(const Options& o, std::ostream& out) {
  json doc;
  const auto& c = o.check;
  try {
    if (c == "groebner") doc = verify_groebner(o);
    else if (c == "elimination") doc = verify_elimination(o);
    else if (c == "chart") doc = verify_chart(o);
    else if (c == "diagonal") doc = verify_diagonal(o);
    else if (c == "planted") doc = verify_planted(o);
    else if (c == "roots") doc = verify_roots(o);
    else if (c == "rank") doc = verify_rank(o);
    else if (c == "components") doc = verify_components(o);
    else if (c == "sylvester") doc = verify_sylvester(o);
    else doc = verify_example(o);
  } catch (const ResourceExhausted& e) {
    out << json{{"claim", claim_of(c)}, {"parameters", dn(o)}, {"status", "exhausted"}, {"witnesses", {{"reason", e.what()}}}}
               .dump(2)
        << "\n";
    return exit_exhausted;
  }
  out << doc.dump(2) << "\n";
  return doc["status"] == "pass" ? exit_ok : exit_check_failed;
}

// --- wiring ----------------------------------------------------------------

void add_dn(CLI::App* sub, Options& o) {
  sub->add_option("--d", o.d, "degree of each polynomial")->check(CLI::Range(1, 64));
  sub->add_option("--n", o.n, "number of polynomials")->check(CLI::Range(1, 64));
}

void add_limits(CLI::App* sub, Options& o) {
  sub->add_option("--max-pairs", o.max_pairs, "Buchberger pair budget");
  sub->add_option("--max-basis", o.max_basis, "Buchberger basis size budget");
  sub->add_option("--max-degree", o.max_degree, "Buchberger S-polynomial degree bound");
  sub->add_option("--timeout", o.timeout, "Buchberger wall-clock budget in seconds")->check(CLI::PositiveNumber);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Resultant ideals of n univariate polynomials of degree d", "rforge"};
  app.require_subcommand(1);
  app.add_option("--output,-o", o.output, "write the result to a file instead of stdout");

  auto* cascade = app.add_subcommand("cascade", "print the cascading matrix M_k");
  add_dn(cascade, o);
  cascade->add_option("--k", o.k, "cascade depth")->required();
  cascade->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* gens = app.add_subcommand("gens", "maximal minors of M_1..M_d");
  add_dn(gens, o);
  gens->add_option("--k", o.k, "only minors of M_k");
  gens->add_flag("--reduced-only", o.reduced, "only minors indexed by reduced walks");
  gens->add_option("--format", o.format)->check(CLI::IsMember({"json", "m2", "singular", "text"}));
  gens->add_option("--alias", o.alias, "Macaulay2 names a_i, b_i, c_i, ... (default true)");

  auto* walks = app.add_subcommand("walks", "minor walks");
  add_dn(walks, o);
  walks->add_option("--k", o.k, "walk length d+k");
  walks->add_flag("--reduced", o.reduced, "only reduced walks");
  walks->add_flag("--monomials", o.monomials, "print leading monomials instead of lattice points");
  walks->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* lead = app.add_subcommand("leadterms", "leading monomials of the generators");
  add_dn(lead, o);
  lead->add_option("--k", o.k, "only minors of M_k");
  lead->add_option("--order", o.order)->check(CLI::IsMember({"diag", "degrevlex", "lex"}));
  lead->add_flag("--reduced-only", o.reduced, "only minors indexed by reduced walks");
  lead->add_flag("--initial", o.initial, "minimal generators of the initial ideal (runs Buchberger)");
  lead->add_option("--alias", o.alias, "print a_i, b_i, c_i, ... names (default true)");
  lead->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  add_limits(lead, o);

  auto* comps = app.add_subcommand("components", "minimal primes of the initial ideal of G");
  add_dn(comps, o);

  auto* degree = app.add_subcommand("degree", "degree of the resultant variety for mixed degrees");
  degree->add_option("--degrees", o.degrees, "comma-separated d_1,...,d_n")->delimiter(',')->required();

  auto* verify = app.add_subcommand("verify", "check one claim and print a JSON report");
  verify->add_option("check", o.check, "claim to check")->required()->check(CLI::IsMember(verify_checks()));
  add_dn(verify, o);
  verify->add_option("--samples", o.samples, "samples per family (roots, rank)");
  verify->add_option("--seed", o.seed, "first sampler seed (roots, rank)");
  add_limits(verify, o);

  auto* eval = app.add_subcommand("eval", "evaluate the generators at a coefficient tuple");
  add_dn(eval, o);
  eval->add_option("--coeffs", o.coeffs, "coefficient tuple JSON")->required();

  auto* sample = app.add_subcommand("sample", "draw a coefficient tuple");
  add_dn(sample, o);
  sample->add_option("--seed", o.seed);
  sample->add_flag("--planted", o.planted, "plant a common rational root");

  auto* exp = app.add_subcommand("export", "write an ideal as a Macaulay2, Singular, JSON or text document");
  add_dn(exp, o);
  exp->add_option("--what", o.what, "minors, top, reduced, basis or eliminated")
      ->check(CLI::IsMember({"minors", "top", "reduced", "basis", "eliminated"}));
  exp->add_option("--order", o.order, "order for --what basis")->check(CLI::IsMember({"diag", "degrevlex", "lex"}));
  exp->add_option("--input", o.input, "re-export an ideal JSON document");
  exp->add_option("--format", o.format)->check(CLI::IsMember({"json", "m2", "singular", "text"}));
  exp->add_option("--alias", o.alias, "Macaulay2 names a_i, b_i, c_i, ... (default true)");
  add_limits(exp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::ostringstream buffer;
  int code = exit_ok;
  try {
    if (*cascade) code = cmd_cascade(o, buffer);
    else if (*gens) code = cmd_gens(o, buffer);
    else if (*walks) code = cmd_walks(o, buffer);
    else if (*lead) code = cmd_leadterms(o, buffer);
    else if (*comps) code = cmd_components(o, buffer);
    else if (*degree) code = cmd_degree(o, buffer);
    else if (*verify) code = cmd_verify(o, buffer);
    else if (*eval) code = cmd_eval(o, *eval, buffer);
    else if (*sample) code = cmd_sample(o, buffer);
    else code = cmd_export(o, buffer);
  } catch (const ResourceExhausted& e) {
    err << "rforge: " << e.what() << "\n";
    return exit_exhausted;
  } catch (const Error& e) {
    err << "rforge: " << e.what() << "\n";
    return exit_usage;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "rforge: cannot write " << o.output << "\n";
      return exit_usage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return dispatch(argc, argv, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"rforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rforge::cli
