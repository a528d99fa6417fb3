#include "rforge/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace rforge {

Monomial::Monomial(std::initializer_list<std::pair<std::size_t, std::uint32_t>> factors) {
  MonomialBuilder b;
  for (auto [var, exp] : factors) b.multiply(var, exp);
  *this = b.build();
}

Monomial Monomial::variable(std::size_t var, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({static_cast<std::uint32_t>(var), exp});
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t total = 0;
  for (const auto& f : factors_) total += f.exp;
  return total;
}

std::uint32_t Monomial::exponent(std::size_t var) const {
  for (const auto& f : factors_) {
    if (f.var == var) return f.exp;
    if (f.var > var) break;
  }
  return 0;
}

std::size_t Monomial::max_variable() const {
  return factors_.empty() ? 0 : static_cast<std::size_t>(factors_.back().var) + 1;
}

bool Monomial::is_square_free() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const VarPower& f) { return f.exp == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (factors_.size() > other.factors_.size()) return false;
  auto it = other.factors_.begin();
  const auto end = other.factors_.end();
  for (const auto& f : factors_) {
    while (it != end && it->var < f.var) ++it;
    if (it == end || it->var != f.var || it->exp < f.exp) return false;
    ++it;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var == b->var) return false;
    if (a->var < b->var)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  assert(divides(other));
  Monomial out;
  auto a = factors_.begin();
  for (const auto& f : other.factors_) {
    while (a != factors_.end() && a->var < f.var) ++a;
    std::uint32_t sub = (a != factors_.end() && a->var == f.var) ? a->exp : 0;
    if (f.exp > sub) out.factors_.push_back({f.var, f.exp - sub});
  }
  return out;
}

Monomial lcm(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto a = x.factors_.begin();
  auto b = y.factors_.begin();
  while (a != x.factors_.end() || b != y.factors_.end()) {
    if (b == y.factors_.end() || (a != x.factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == x.factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->var, std::max(a->exp, b->exp)});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial gcd(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto a = x.factors_.begin();
  auto b = y.factors_.begin();
  while (a != x.factors_.end() && b != y.factors_.end()) {
    if (a->var == b->var) {
      out.factors_.push_back({a->var, std::min(a->exp, b->exp)});
      ++a;
      ++b;
    } else if (a->var < b->var) {
      ++a;
    } else {
      ++b;
    }
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  return std::lexicographical_compare_three_way(factors_.begin(), factors_.end(), other.factors_.begin(),
                                                other.factors_.end());
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var) << 32) | f.exp;
    h *= 0x100000001b3ULL;
  }
  return h;
}

MonomialBuilder& MonomialBuilder::multiply(std::size_t var, std::uint32_t exp) {
  if (exp > 0) factors_.push_back({static_cast<std::uint32_t>(var), exp});
  return *this;
}

MonomialBuilder& MonomialBuilder::multiply(const Monomial& m) {
  factors_.insert(factors_.end(), m.factors().begin(), m.factors().end());
  return *this;
}

Monomial MonomialBuilder::build() {
  std::sort(factors_.begin(), factors_.end(), [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  Monomial out;
  for (const auto& f : factors_) {
    if (!out.factors_.empty() && out.factors_.back().var == f.var)
      out.factors_.back().exp += f.exp;
    else
      out.factors_.push_back(f);
  }
  factors_.clear();
  return out;
}

}  // namespace rforge
