#pragma once

#include "rforge/monomial.hpp"
#include "rforge/ring.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rforge {

// A monomial order on a ring. Strategies compose: weighted orders carry a
// tiebreak order, block orders compare a variable subset first.
//
// Rankings list variable indices from the most significant to the least
// significant. Every top-level order must rank every ring variable.
class TermOrder {
 public:
  enum class Kind { lex, degrevlex, weighted, block };

  static TermOrder lex(RingPtr ring, std::vector<std::size_t> ranking);
  static TermOrder degrevlex(RingPtr ring, std::vector<std::size_t> ranking);
  // Ranking by increasing variable index: a_{1,0} > a_{1,1} > ... > a_{n,d} > x > aux.
  static TermOrder lex(RingPtr ring);
  static TermOrder degrevlex(RingPtr ring);
  // weights holds one positive entry per ring variable.
  static TermOrder weighted(RingPtr ring, std::vector<std::int64_t> weights, TermOrder tiebreak);
  // first_vars are compared first with first_order (which only looks at
  // those variables); ties fall through to second_order on the rest.
  static TermOrder block(RingPtr ring, std::vector<std::size_t> first_vars, TermOrder first_order,
                         TermOrder second_order);

  Kind kind() const;
  // True when the order distinguishes every ring variable.
  bool is_total() const;
  const RingPtr& ring() const { return ring_; }
  std::string describe() const;

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  // Weight of a monomial under a weighted order (throws for other kinds).
  std::int64_t weight(const Monomial& m) const;

  struct Node;

 private:
  TermOrder(RingPtr ring, std::shared_ptr<const Node> root);

  RingPtr ring_;
  std::shared_ptr<const Node> root_;
};

// Strict "larger first" comparator for ordered containers.
struct OrderGreater {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace rforge
