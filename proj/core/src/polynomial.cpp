#include "rforge/polynomial.hpp"

#include "rforge/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace rforge {

namespace {

bool term_less(const Term& a, const Term& b) { return a.monomial < b.monomial; }

void check_support(const RingPtr& ring, const Monomial& m) {
  if (m.max_variable() > ring->size()) throw RingMismatch("monomial uses a variable outside the ring");
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingMismatch("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw RingMismatch("variable index outside the ring");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::variable(RingPtr ring, const VariableId& v) {
  auto index = ring->index_of(v);
  return variable(std::move(ring), index);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  check_support(ring, m);
  std::vector<Term> terms;
  if (c != 0) terms.push_back({std::move(m), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) check_support(ring, t.monomial);
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, static_cast<int>(t.monomial.degree()));
  return deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto deg = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [deg](const Term& t) { return t.monomial.degree() == deg; });
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) vars.push_back(f.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial Polynomial::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  auto terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  check_support(ring_, m);
  if (c == 0) return Polynomial(ring_);
  // Multiplying by a fixed monomial preserves the structural order only for
  // some monomials, so re-sort.
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial * m, t.coeff * c});
  std::sort(terms.begin(), terms.end(), term_less);
  return Polynomial(ring_, std::move(terms));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_, "add");
  std::vector<Term> out;
  out.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin();
  auto b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->monomial < b->monomial)) {
      out.push_back(*a++);
    } else if (a == p.terms_.end() || b->monomial < a->monomial) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  return Polynomial(p.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_, "mul");
  if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& s : p.terms_)
    for (const auto& t : q.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_less);
  return Polynomial(p.ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  auto order = TermOrder::degrevlex(ring_);
  auto sorted = sorted_terms(*this, order);
  std::string out;
  bool first = true;
  for (const auto& t : sorted) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || t.monomial.is_one()) {
      out += c.get_str();
      if (!t.monomial.is_one()) out += "*";
    }
    bool first_factor = true;
    for (const auto& f : t.monomial.factors()) {
      if (!first_factor) out += "*";
      first_factor = false;
      out += ring_->name(f.var);
      if (f.exp > 1) out += "^" + std::to_string(f.exp);
    }
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p.scale(c); }

LeadingTerm leading_term(const Polynomial& p, const TermOrder& order) {
  require_same_ring(p.ring(), order.ring(), "leading_term");
  if (p.is_zero()) throw ZeroInput("leading_term: zero polynomial has no leading term");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return {best->monomial, best->coeff};
}

std::vector<Term> sorted_terms(const Polynomial& p, const TermOrder& order) {
  require_same_ring(p.ring(), order.ring(), "sorted_terms");
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return terms;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, const TermOrder& order) {
  require_same_ring(p.ring(), order.ring(), "normal_form");
  struct Reducer {
    Monomial lead;
    Rational lead_coeff;
    std::vector<Term> tail;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size());
  for (const auto& b : basis) {
    require_same_ring(p.ring(), b.ring(), "normal_form");
    if (b.is_zero()) throw ZeroInput("normal_form: basis contains the zero polynomial");
    auto terms = sorted_terms(b, order);
    Reducer r{terms.front().monomial, terms.front().coeff, {}};
    r.tail.assign(std::make_move_iterator(terms.begin() + 1), std::make_move_iterator(terms.end()));
    reducers.push_back(std::move(r));
  }

  std::map<Monomial, Rational, OrderGreater> work{OrderGreater{&order}};
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const Reducer* hit = nullptr;
    for (const auto& r : reducers)
      if (r.lead.divides(top->first)) {
        hit = &r;
        break;
      }
    if (!hit) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    Monomial factor = hit->lead.quotient_of(top->first);
    Rational c = top->second / hit->lead_coeff;
    work.erase(top);
    for (const auto& t : hit->tail) {
      auto m = t.monomial * factor;
      auto [it, inserted] = work.try_emplace(std::move(m), 0);
      it->second -= c * t.coeff;
      if (it->second == 0) work.erase(it);
    }
  }
  return Polynomial::from_terms(p.ring(), std::move(remainder));
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment, const RingPtr& target) {
  const auto& source = p.ring();
  std::vector<std::optional<Polynomial>> images(source->size());
  for (const auto& [var, image] : assignment) {
    auto idx = source->find(var);
    if (!idx) throw RingMismatch("substitute: " + to_string(var) + " is not a variable of the source ring");
    require_same_ring(image.ring(), target, "substitute");
    images[*idx] = image;
  }
  std::vector<std::vector<Polynomial>> powers(source->size());
  auto image_power = [&](std::uint32_t var, std::uint32_t exp) -> const Polynomial& {
    if (!images[var]) {
      auto v = source->variable(var);
      auto tidx = target->find(v);
      if (!tidx) throw UnmappedVariable("substitute: " + to_string(v) + " has no image in the target ring");
      images[var] = Polynomial::variable(target, *tidx);
    }
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(*images[var]);
    while (cache.size() < exp) cache.push_back(cache.back() * *images[var]);
    return cache[exp - 1];
  };

  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (const auto& f : t.monomial.factors()) {
      term = term * image_power(f.var, f.exp);
      if (term.is_zero()) break;
    }
    result = result + term;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  return substitute(p, assignment, p.ring());
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.ring()->size()) throw RingMismatch("evaluate: point has the wrong number of coordinates");
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (const auto& f : t.monomial.factors()) {
      for (std::uint32_t e = 0; e < f.exp; ++e) v *= point[f.var];
      if (v == 0) break;
    }
    total += v;
  }
  return total;
}

Polynomial content_normalize(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw ZeroInput("content_normalize: zero polynomial");
  mpz_class den_lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_class num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (leading_term(p, order).coeff < 0) factor = -factor;
  return p.scale(factor);
}

Polynomial content_normalize(const Polynomial& p) { return content_normalize(p, TermOrder::degrevlex(p.ring())); }

std::string rational_to_string(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    return std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw ParseError("malformed rational '" + text + "'");
    return Rational(mpz_class(strip_plus(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + text + "'");
  mpz_class d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

}  // namespace rforge
