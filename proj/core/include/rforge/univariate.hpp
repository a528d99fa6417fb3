#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rforge {

// Dense univariate polynomial over Q, coefficients from the constant term up.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<mpq_class> ascending);
  // a_0 x^d + a_1 x^{d-1} + ... + a_d
  static UnivariatePolynomial from_descending(const std::vector<mpq_class>& descending);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  const mpq_class& leading() const { return coeffs_.back(); }
  mpq_class operator()(const mpq_class& x) const;

  UnivariatePolynomial monic() const;
  UnivariatePolynomial remainder(const UnivariatePolynomial& divisor) const;

  bool operator==(const UnivariatePolynomial&) const = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

}  // namespace rforge
