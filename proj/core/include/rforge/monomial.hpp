#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>

namespace rforge {

struct VarPower {
  std::uint32_t var;
  std::uint32_t exp;

  bool operator==(const VarPower&) const = default;
  auto operator<=>(const VarPower&) const = default;
};

// Sparse exponent vector keyed by ring variable index. Factors are kept
// sorted by variable index with no zero exponents, so structural equality is
// monomial equality.
class Monomial {
 public:
  using Storage = boost::container::small_vector<VarPower, 6>;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<std::size_t, std::uint32_t>> factors);

  static Monomial variable(std::size_t var, std::uint32_t exp = 1);

  const Storage& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::size_t var) const;
  std::size_t max_variable() const;  // one past the largest index used
  bool is_square_free() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  // Structural order used for canonical storage; not a term order.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

 private:
  Storage factors_;
  friend class MonomialBuilder;
};

// Accumulates factors in any order and produces a canonical Monomial.
class MonomialBuilder {
 public:
  MonomialBuilder& multiply(std::size_t var, std::uint32_t exp = 1);
  MonomialBuilder& multiply(const Monomial& m);
  Monomial build();

 private:
  Monomial::Storage factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace rforge
