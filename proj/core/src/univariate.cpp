#include "rforge/univariate.hpp"

#include "rforge/errors.hpp"

namespace rforge {

UnivariatePolynomial::UnivariatePolynomial(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

UnivariatePolynomial UnivariatePolynomial::from_descending(const std::vector<mpq_class>& descending) {
  return UnivariatePolynomial(std::vector<mpq_class>(descending.rbegin(), descending.rend()));
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class UnivariatePolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return {};
  auto out = coeffs_;
  mpq_class inv = 1 / coeffs_.back();
  for (auto& c : out) c *= inv;
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::remainder(const UnivariatePolynomial& divisor) const {
  if (divisor.is_zero()) throw ZeroInput("univariate remainder: division by zero polynomial");
  auto r = coeffs_;
  const int dd = divisor.degree();
  const mpq_class& lc = divisor.leading();
  for (int top = static_cast<int>(r.size()) - 1; top >= dd; --top) {
    if (r[top] == 0) continue;
    mpq_class q = r[top] / lc;
    for (int i = 0; i <= dd; ++i) r[top - dd + i] -= q * divisor.coeffs_[i];
  }
  return UnivariatePolynomial(std::move(r));
}

std::string UnivariatePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const auto& c = coeffs_[e];
    if (c == 0) continue;
    if (!out.empty()) out += (c < 0) ? " - " : " + ";
    else if (c < 0) out += "-";
    mpq_class mag = abs(c);
    if (mag != 1 || e == 0) out += mag.get_str() + (e > 0 ? "*" : "");
    if (e >= 1) out += "x";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace rforge
