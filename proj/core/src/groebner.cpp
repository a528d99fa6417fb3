#include "rforge/groebner.hpp"

#include "rforge/errors.hpp"
#include "rforge/minors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace rforge {

GroebnerLimits GroebnerLimits::parse(const std::string& text) { return parse(text, GroebnerLimits{}); }

GroebnerLimits GroebnerLimits::parse(const std::string& text, GroebnerLimits base) {
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("limits: expected key=value, got '" + item + "'");
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    long long number = 0;
    try {
      std::size_t used = 0;
      number = std::stoll(value, &used);
      if (used != value.size() || number < 0) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError("limits: '" + key + "' needs a nonnegative integer");
    }
    if (key == "max_pairs")
      base.max_pairs = static_cast<std::size_t>(number);
    else if (key == "max_basis")
      base.max_basis = static_cast<std::size_t>(number);
    else if (key == "max_degree")
      base.max_degree = static_cast<int>(number);
    else if (key == "timeout_ms")
      base.timeout = std::chrono::milliseconds(number);
    else
      throw ParseError("limits: unknown key '" + key + "'");
  }
  return base;
}

GroebnerLimits GroebnerLimits::from_environment() {
  const char* env = std::getenv("RESULTANT_FORGE_LIMITS");
  if (!env) return {};
  return parse(env);
}

namespace {

using TermMap = std::map<Monomial, Rational, OrderGreater>;

struct BasisElement {
  std::vector<Term> terms;  // descending, monic
  Monomial lead;
  std::uint32_t lead_degree;
};

BasisElement make_element(const Polynomial& p, const TermOrder& order) {
  auto terms = sorted_terms(p, order);
  Rational inv = 1 / terms.front().coeff;
  for (auto& t : terms) t.coeff *= inv;
  auto lead = terms.front().monomial;
  auto deg = lead.degree();
  return {std::move(terms), std::move(lead), deg};
}

Polynomial element_poly(const RingPtr& ring, const BasisElement& e) { return Polynomial::from_terms(ring, e.terms); }

// Full reduction of work modulo the elements, largest reducible term first.
std::vector<Term> reduce(TermMap work, const std::vector<BasisElement>& basis, std::size_t skip = SIZE_MAX) {
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const BasisElement* hit = nullptr;
    const auto top_degree = top->first.degree();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b == skip) continue;
      const auto& e = basis[b];
      if (e.lead_degree <= top_degree && e.lead.divides(top->first)) {
        hit = &e;
        break;
      }
    }
    if (!hit) {
      remainder.push_back({top->first, std::move(top->second)});
      work.erase(top);
      continue;
    }
    Monomial factor = hit->lead.quotient_of(top->first);
    Rational c = std::move(top->second);
    work.erase(top);
    for (std::size_t t = 1; t < hit->terms.size(); ++t) {
      const auto& term = hit->terms[t];
      auto [it, inserted] = work.try_emplace(term.monomial * factor, 0);
      it->second -= c * term.coeff;
      if (it->second == 0) work.erase(it);
    }
  }
  return remainder;
}

TermMap spoly_map(const BasisElement& f, const BasisElement& g, const TermOrder& order) {
  auto l = lcm(f.lead, g.lead);
  auto mf = f.lead.quotient_of(l);
  auto mg = g.lead.quotient_of(l);
  TermMap work{OrderGreater{&order}};
  for (std::size_t t = 1; t < f.terms.size(); ++t) work.emplace(f.terms[t].monomial * mf, f.terms[t].coeff);
  for (std::size_t t = 1; t < g.terms.size(); ++t) {
    auto [it, inserted] = work.try_emplace(g.terms[t].monomial * mg, 0);
    it->second -= g.terms[t].coeff;
    if (it->second == 0) work.erase(it);
  }
  return work;
}

struct Pair {
  std::uint32_t degree;
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

void check_order(const TermOrder& order, const char* what) {
  if (!order.is_total()) throw ParameterOutOfRange(std::string(what) + ": term order must rank every variable");
}

std::vector<Polynomial> finish_basis(const RingPtr& ring, std::vector<BasisElement> basis, const TermOrder& order) {
  // Minimal: drop elements whose lead is divisible by an earlier-kept lead or
  // by any other lead strictly.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (basis[b].lead.divides(basis[a].lead) && (basis[b].lead != basis[a].lead || b < a)) keep[a] = 0;
    }
  }
  std::vector<BasisElement> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(basis[a]));

  // Inter-reduce tails; leads are untouched because the basis is minimal.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    TermMap work{OrderGreater{&order}};
    for (std::size_t t = 1; t < minimal[a].terms.size(); ++t)
      work.emplace(minimal[a].terms[t].monomial, minimal[a].terms[t].coeff);
    auto tail = reduce(std::move(work), minimal, a);
    std::vector<Term> terms;
    terms.push_back(minimal[a].terms.front());
    for (auto& t : tail) terms.push_back(std::move(t));
    minimal[a].terms = std::move(terms);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const BasisElement& x, const BasisElement& y) { return order.compare(x.lead, y.lead) < 0; });
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const auto& e : minimal) out.push_back(content_normalize(element_poly(ring, e), order));
  return out;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const TermOrder& order) {
  require_same_ring(p.ring(), q.ring(), "s_polynomial");
  require_same_ring(p.ring(), order.ring(), "s_polynomial");
  if (p.is_zero() || q.is_zero()) throw ZeroInput("s_polynomial: zero input");
  auto f = make_element(p, order);
  auto g = make_element(q, order);
  auto work = spoly_map(f, g, order);
  std::vector<Term> terms;
  for (auto& [m, c] : work) terms.push_back({m, c});
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

IdealPresentation buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                             const GroebnerLimits& limits) {
  check_order(order, "buchberger");
  const auto& ring = order.ring();
  const auto deadline = limits.timeout ? std::optional(std::chrono::steady_clock::now() + *limits.timeout) : std::nullopt;
  GroebnerStats stats;

  std::vector<BasisElement> basis;
  std::set<Pair, PairLess> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](BasisElement e) {
    if (basis.size() >= limits.max_basis)
      throw ResourceExhausted("buchberger: basis exceeded " + std::to_string(limits.max_basis) + " elements");
    const std::size_t j = basis.size();
    basis.push_back(std::move(e));
    for (std::size_t i = 0; i < j; ++i) {
      auto l = lcm(basis[i].lead, basis[j].lead);
      auto deg = l.degree();
      queue.insert({deg, i, j, std::move(l)});
      pending.insert({i, j});
      ++stats.pairs_total;
    }
  };

  for (const auto& g : generators) {
    require_same_ring(g.ring(), ring, "buchberger");
    if (g.is_zero()) continue;
    add_element(make_element(g, order));
  }

  std::size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > limits.max_pairs)
      throw ResourceExhausted("buchberger: more than " + std::to_string(limits.max_pairs) + " pairs");
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw ResourceExhausted("buchberger: timeout");
    Pair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});
    if (limits.max_degree && static_cast<int>(pair.degree) > *limits.max_degree)
      throw ResourceExhausted("buchberger: S-pair degree " + std::to_string(pair.degree) + " exceeds the degree bound");

    const auto& f = basis[pair.i];
    const auto& g = basis[pair.j];
    if (f.lead.coprime(g.lead)) {
      ++stats.product_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].lead.divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
      chain = !pending.contains(key(pair.i, k)) && !pending.contains(key(pair.j, k));
    }
    if (chain) {
      ++stats.chain_skips;
      continue;
    }
    ++stats.pairs_reduced;
    auto remainder = reduce(spoly_map(f, g, order), basis);
    if (remainder.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    add_element(make_element(Polynomial::from_terms(ring, std::move(remainder)), order));
  }

  auto result = finish_basis(ring, std::move(basis), order);
  if (limits.self_check) {
    auto report = certify_groebner(result, order);
    if (!report.ok()) throw std::logic_error("buchberger: output failed the S-polynomial self-check");
  }
  IdealPresentation out{ring, generators, order, std::move(result), stats};
  return out;
}

CertificationReport certify_groebner(const std::vector<Polynomial>& basis, const TermOrder& order) {
  check_order(order, "certify_groebner");
  std::vector<BasisElement> elements;
  for (const auto& b : basis) {
    require_same_ring(b.ring(), order.ring(), "certify_groebner");
    if (b.is_zero()) throw ZeroInput("certify_groebner: basis contains zero");
    elements.push_back(make_element(b, order));
  }
  CertificationReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      ++report.pairs_checked;
      if (!reduce(spoly_map(elements[i], elements[j], order), elements).empty()) report.failures.push_back({i, j});
    }
  }
  return report;
}

std::vector<Monomial> initial_ideal_generators(const std::vector<Polynomial>& basis, const TermOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& b : basis) leads.push_back(leading_term(b, order).monomial);
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> out;
  for (std::size_t a = 0; a < leads.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < leads.size() && !redundant; ++b)
      if (a != b && leads[b].divides(leads[a])) redundant = true;
    if (!redundant) out.push_back(leads[a]);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return order.compare(x, y) < 0; });
  return out;
}

std::vector<Polynomial> generic_system(const RingPtr& ring) {
  const auto x = ring->eliminand_index();
  std::vector<Polynomial> out;
  for (int i = 1; i <= ring->n(); ++i) {
    std::vector<Term> terms;
    for (int j = 0; j <= ring->d(); ++j) {
      MonomialBuilder b;
      b.multiply(ring->coefficient_index(i, j)).multiply(x, static_cast<std::uint32_t>(ring->d() - j));
      terms.push_back({b.build(), 1});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

IdealPresentation eliminate_x(int d, int n, const GroebnerLimits& limits) {
  if (d < 1) throw ParameterOutOfRange("eliminate_x: d must be >= 1");
  if (n < 2) throw ParameterOutOfRange("eliminate_x: n must be >= 2");
  auto big = Ring::with_eliminand(d, n);
  const auto x = big->eliminand_index();
  std::vector<std::size_t> coeffs(big->coefficient_count());
  for (std::size_t v = 0; v < coeffs.size(); ++v) coeffs[v] = v;
  auto order = TermOrder::block(big, {x}, TermOrder::degrevlex(big, {x}), TermOrder::degrevlex(big, coeffs));
  auto full = buchberger(generic_system(big), order, limits);

  auto small = Ring::coefficients(d, n);
  auto small_order = TermOrder::degrevlex(small);
  std::vector<Polynomial> eliminated;
  for (const auto& g : *full.certified_basis) {
    auto vars = g.support();
    if (std::find(vars.begin(), vars.end(), x) != vars.end()) continue;
    eliminated.push_back(Polynomial::from_terms(small, g.terms()));
  }
  // Already a Groebner basis of the elimination ideal; sort into the
  // canonical form of the restricted order.
  std::sort(eliminated.begin(), eliminated.end(), [&](const Polynomial& p, const Polynomial& q) {
    return small_order.compare(leading_term(p, small_order).monomial, leading_term(q, small_order).monomial) < 0;
  });
  for (auto& e : eliminated) e = content_normalize(e, small_order);
  IdealPresentation out{small, eliminated, small_order, eliminated, full.stats};
  return out;
}

bool contained_in(const std::vector<Polynomial>& polys, const std::vector<Polynomial>& basis, const TermOrder& order) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const Polynomial& p) { return normal_form(p, basis, order).is_zero(); });
}

bool ideal_equal(IdealPresentation& a, IdealPresentation& b, const GroebnerLimits& limits) {
  require_same_ring(a.ring, b.ring, "ideal_equal");
  if (!a.certified_basis) a = buchberger(a.generators, a.order, limits);
  if (!b.certified_basis) b = buchberger(b.generators, b.order, limits);
  return contained_in(a.generators, *b.certified_basis, b.order) &&
         contained_in(b.generators, *a.certified_basis, a.order);
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerLimits& limits) {
  auto ca = a;
  auto cb = b;
  return ideal_equal(ca, cb, limits);
}

ChartReport chart_equal(int d, int n, const GroebnerLimits& limits) {
  auto ring = Ring::coefficients(d, n);
  Assignment chart{{VariableId::coefficient(1, 0), Polynomial::constant(ring, 1)}};
  auto dehomogenize = [&](const std::vector<GeneratorRecord>& records) {
    std::vector<Polynomial> out;
    for (const auto& r : records) {
      auto p = substitute(r.poly, chart, ring);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
  };
  auto j_gens = dehomogenize(enumerate_generators(d, n, d));
  auto i_gens = dehomogenize(enumerate_generators(d, n));
  auto order = TermOrder::degrevlex(ring);
  auto j_gb = buchberger(j_gens, order, limits);
  auto i_gb = buchberger(i_gens, order, limits);

  ChartReport report;
  report.j_generators = j_gens.size();
  report.i_generators = i_gens.size();
  report.j_basis = j_gb.certified_basis->size();
  report.i_basis = i_gb.certified_basis->size();
  report.j_in_i = contained_in(j_gens, *i_gb.certified_basis, order);
  report.i_in_j = contained_in(i_gens, *j_gb.certified_basis, order);
  report.equal = report.j_in_i && report.i_in_j;
  return report;
}

}  // namespace rforge
