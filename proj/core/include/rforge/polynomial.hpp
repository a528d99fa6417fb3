#pragma once

#include "rforge/monomial.hpp"
#include "rforge/ring.hpp"
#include "rforge/term_order.hpp"

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rforge {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial with exact rational coefficients. Terms are stored in
// structural monomial order with no zero coefficients; the zero polynomial
// has no terms. Values are immutable through the public interface.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const VariableId& v);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  // Combines like terms and drops zeros; order of input terms is irrelevant.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  // Same ring and same terms.
  bool operator==(const Polynomial& other) const;

  // Human-readable form, largest term first under degrevlex on the natural
  // variable ranking: "a_1_0*a_2_1 - a_1_1*a_2_0".
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

struct LeadingTerm {
  Monomial monomial;
  Rational coeff;
};

// Order-maximal term. Throws ZeroInput for p = 0.
LeadingTerm leading_term(const Polynomial& p, const TermOrder& order);

// Terms sorted from largest to smallest under order.
std::vector<Term> sorted_terms(const Polynomial& p, const TermOrder& order);

// Multivariate division remainder. The largest reducible term is reduced
// first, using the first basis element (in list order) whose leading
// monomial divides it.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, const TermOrder& order);

using Assignment = std::vector<std::pair<VariableId, Polynomial>>;

// Ring homomorphism into target: variables named in the assignment map to
// their images, every other variable maps to itself in target (which must
// then contain it, else UnmappedVariable).
Polynomial substitute(const Polynomial& p, const Assignment& assignment, const RingPtr& target);
Polynomial substitute(const Polynomial& p, const Assignment& assignment);

// Evaluation at a point given as one rational per ring variable.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

// Integer coefficients with gcd 1 and positive leading coefficient.
Polynomial content_normalize(const Polynomial& p, const TermOrder& order);
// Same, with the ring's natural degrevlex order deciding the sign.
Polynomial content_normalize(const Polynomial& p);

std::string rational_to_string(const Rational& q);  // always "num/den"
Rational parse_rational(const std::string& text);

}  // namespace rforge
