#include "rforge/verify.hpp"

#include "rforge/errors.hpp"

#include <algorithm>

namespace rforge {

CoefficientTuple::CoefficientTuple(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 1) throw ParameterOutOfRange("coefficient tuple: need d >= 1 and n >= 1");
  values_.assign(static_cast<std::size_t>(n) * (d + 1), 0);
}

CoefficientTuple::CoefficientTuple(int d, int n, std::vector<Rational> row_major) : CoefficientTuple(d, n) {
  if (row_major.size() != values_.size())
    throw ParameterOutOfRange("coefficient tuple: expected " + std::to_string(values_.size()) + " values");
  values_ = std::move(row_major);
}

const Rational& CoefficientTuple::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 0 || j > d_) throw ParameterOutOfRange("coefficient tuple: index out of range");
  return values_[static_cast<std::size_t>(i - 1) * (d_ + 1) + j];
}

Rational& CoefficientTuple::at(int i, int j) {
  return const_cast<Rational&>(static_cast<const CoefficientTuple&>(*this).at(i, j));
}

UnivariatePolynomial CoefficientTuple::polynomial(int i) const {
  std::vector<Rational> descending;
  for (int j = 0; j <= d_; ++j) descending.push_back(at(i, j));
  return UnivariatePolynomial::from_descending(descending);
}

bool CoefficientTuple::all_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
}

bool CoefficientTuple::all_leading_zero() const {
  for (int i = 1; i <= n_; ++i)
    if (at(i, 0) != 0) return false;
  return true;
}

nlohmann::json CoefficientTuple::to_json() const {
  auto rows = nlohmann::json::array();
  for (int i = 1; i <= n_; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j <= d_; ++j) row.push_back(rational_to_string(at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"d", d_}, {"n", n_}, {"values", std::move(rows)}};
}

CoefficientTuple CoefficientTuple::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("n") || !j.contains("values"))
    throw ParseError("coefficient tuple JSON needs \"d\", \"n\" and \"values\"");
  if (!j["d"].is_number_integer() || !j["n"].is_number_integer())
    throw ParseError("coefficient tuple: d and n must be integers");
  const int d = j["d"].get<int>();
  const int n = j["n"].get<int>();
  const auto& rows = j["values"];
  if (d < 1 || n < 1) throw ParseError("coefficient tuple: d and n must be positive");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw ParseError("coefficient tuple: values must hold n rows");
  CoefficientTuple out(d, n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[i - 1];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d + 1))
      throw ParseError("coefficient tuple: every row must hold d+1 values");
    for (int c = 0; c <= d; ++c) {
      const auto& cell = row[c];
      if (cell.is_string())
        out.at(i, c) = parse_rational(cell.get<std::string>());
      else if (cell.is_number_integer())
        out.at(i, c) = Rational(cell.get<long>());
      else
        throw ParseError("coefficient tuple: values must be rational strings");
    }
  }
  return out;
}

RootReport common_root_oracle(const CoefficientTuple& c) {
  if (c.all_zero()) throw DegenerateInput("common_root_oracle: every coefficient is zero");
  RootReport report;
  report.all_leading_zero = c.all_leading_zero();
  UnivariatePolynomial g;
  for (int i = 1; i <= c.n(); ++i) {
    auto f = c.polynomial(i);
    if (f.is_zero()) continue;
    g = gcd(g, f);
  }
  report.gcd = g;
  report.gcd_degree = g.degree();
  report.has_affine_common_root = report.gcd_degree >= 1;
  return report;
}

std::uint64_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

int Lcg64::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>((next() >> 33) % span);
}

Rational Lcg64::small_rational() {
  auto draw = [this] {
    int v = uniform(0, 39);  // 40 nonzero values
    return v < 20 ? v - 20 : v - 19;
  };
  int num = draw();
  int den = draw();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

PlantedSample sample_planted(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 2) throw ParameterOutOfRange("sample_planted: need d >= 1, n >= 2");
  Lcg64 rng(seed);
  Rational r = rng.small_rational();
  CoefficientTuple tuple(d, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> b(d);
    for (auto& q : b) q = rng.small_rational();
    tuple.at(i, 0) = b[0];
    for (int j = 1; j < d; ++j) tuple.at(i, j) = b[j] - r * b[j - 1];
    tuple.at(i, d) = -r * b[d - 1];
  }
  return {std::move(tuple), r};
}

CoefficientTuple sample_random(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 2) throw ParameterOutOfRange("sample_random: need d >= 1, n >= 2");
  Lcg64 rng(seed);
  CoefficientTuple tuple(d, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= d; ++j) tuple.at(i, j) = rng.small_rational();
  return tuple;
}

CoefficientTuple sample_specialization(int d, int n, std::uint64_t seed) {
  switch (seed % 5) {
    case 0:
      return sample_random(d, n, seed);
    case 1:
      return sample_planted(d, n, seed).tuple;
    case 2: {
      auto c = sample_random(d, n, seed);
      for (int i = 1; i <= n; ++i) c.at(i, 0) = 0;
      return c;
    }
    case 3: {
      auto c = sample_random(d, n, seed);
      Lcg64 rng(~seed);
      for (int i = 2; i <= n; ++i) {
        Rational w = rng.small_rational();
        for (int j = 0; j <= d; ++j) c.at(i, j) = w * c.at(1, j);
      }
      return c;
    }
    default: {
      auto c = sample_random(d, n, seed);
      Lcg64 rng(~seed);
      for (int j = 0; j <= d; ++j) c.at(n, j) = 0;
      for (int i = 1; i < n; ++i) {
        Rational w = rng.small_rational();
        for (int j = 0; j <= d; ++j) c.at(n, j) += w * c.at(i, j);
      }
      return c;
    }
  }
}

RingPtr planted_ring(int d, int n) {
  std::vector<std::string> aux{"r"};
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < d; ++j) aux.push_back("b_" + std::to_string(i) + "_" + std::to_string(j));
  return Ring::make(d, n, false, std::move(aux));
}

Assignment planted_assignment(int d, int n, const RingPtr& target) {
  auto var = [&](const std::string& name) { return Polynomial::variable(target, VariableId::auxiliary(name)); };
  auto b = [&](int i, int j) { return var("b_" + std::to_string(i) + "_" + std::to_string(j)); };
  const auto r = var("r");
  Assignment out;
  for (int i = 1; i <= n; ++i) {
    out.emplace_back(VariableId::coefficient(i, 0), b(i, 0));
    for (int j = 1; j < d; ++j) out.emplace_back(VariableId::coefficient(i, j), b(i, j) - r * b(i, j - 1));
    out.emplace_back(VariableId::coefficient(i, d), -(r * b(i, d - 1)));
  }
  return out;
}

PlantedVanishingReport planted_vanishing(int d, int n) {
  auto target = planted_ring(d, n);
  auto assignment = planted_assignment(d, n, target);
  auto gens = enumerate_generators(d, n);
  PlantedVanishingReport report{d, n, gens.size(), {}};
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!substitute(gens[g].poly, assignment, target).is_zero()) report.nonvanishing.push_back(g);
  return report;
}

MembershipScanner::MembershipScanner(int d, int n) : d_(d), n_(n), generators_(enumerate_generators(d, n)) {}

bool MembershipScanner::minors_vanish(const CoefficientTuple& c, int k) const {
  if (c.d() != d_ || c.n() != n_) throw ParameterOutOfRange("scan: tuple dimensions differ from the scanner");
  for (const auto& g : generators_)
    if (g.k == k && evaluate(g.poly, c.values()) != 0) return false;
  return true;
}

ScanReport MembershipScanner::scan(const CoefficientTuple& c) const {
  if (c.d() != d_ || c.n() != n_) throw ParameterOutOfRange("scan: tuple dimensions differ from the scanner");
  ScanReport report;
  report.all_generators_vanish = true;
  report.top_minors_vanish = true;
  for (const auto& g : generators_) {
    bool zero = evaluate(g.poly, c.values()) == 0;
    report.vanishes.push_back(zero);
    report.all_generators_vanish = report.all_generators_vanish && zero;
    if (g.k == d_) report.top_minors_vanish = report.top_minors_vanish && zero;
  }
  report.root = common_root_oracle(c);
  report.consistent = report.top_minors_vanish == report.root.projective_common_root();
  return report;
}

ScanReport membership_scan(const CoefficientTuple& c) { return MembershipScanner(c.d(), c.n()).scan(c); }

RationalMatrix specialize(const CascadeMatrix& m, const CoefficientTuple& c) {
  if (c.d() != m.d() || c.n() != m.n()) throw ParameterOutOfRange("specialize: tuple dimensions differ from matrix");
  RationalMatrix out(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (int row = 1; row <= m.rows(); ++row)
    for (int col = 1; col <= m.cols(); ++col)
      if (auto v = m.variable_at(m.label(row), col)) out[row - 1][col - 1] = c.at(v->i, v->j);
  return out;
}

std::size_t exact_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> kernel_residual(const CascadeMatrix& m, const CoefficientTuple& c, const Rational& r) {
  auto values = specialize(m, c);
  std::vector<Rational> powers(m.cols());
  Rational p = 1;
  for (int col = m.cols() - 1; col >= 0; --col) {
    powers[col] = p;
    p *= r;
  }
  std::vector<Rational> out(m.rows(), 0);
  for (int row = 0; row < m.rows(); ++row)
    for (int col = 0; col < m.cols(); ++col) out[row] += values[row][col] * powers[col];
  return out;
}

std::vector<RankCascadeCheck> rank_cascade(const MembershipScanner& scanner, const CoefficientTuple& c) {
  const int d = scanner.d();
  const int n = scanner.n();
  auto deficient = [&](int k) {
    return exact_rank(specialize(build_cascade(d, n, k), c)) < static_cast<std::size_t>(d + k);
  };
  std::vector<RankCascadeCheck> out;
  for (int k = 2; k <= d; ++k)
    out.push_back({k, scanner.minors_vanish(c, k), scanner.minors_vanish(c, k - 1), deficient(k), deficient(k - 1)});
  return out;
}

std::optional<CoefficientTuple> search_m1_insufficiency(int d, int n, std::uint64_t seed, int attempts) {
  if (n < 2 || n > d + 1) throw ParameterOutOfRange("search_m1_insufficiency: need 2 <= n <= d + 1");
  Lcg64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    CoefficientTuple c = sample_random(d, n, rng.next());
    // Force the last row of M_1 into the span of the others.
    for (int j = 0; j <= d; ++j) c.at(n, j) = 0;
    for (int i = 1; i < n; ++i) {
      Rational w = rng.small_rational();
      for (int j = 0; j <= d; ++j) c.at(n, j) += w * c.at(i, j);
    }
    MembershipScanner scanner(d, n);
    if (!scanner.minors_vanish(c, 1)) continue;
    if (common_root_oracle(c).projective_common_root()) continue;
    return c;
  }
  return std::nullopt;
}

SamplingReport planted_sampling(int d, int n, std::size_t samples, std::uint64_t seed) {
  MembershipScanner scanner(d, n);
  std::vector<CascadeMatrix> cascades;
  for (int k = 1; k <= d; ++k) cascades.push_back(build_cascade(d, n, k));
  SamplingReport report{d, n, samples, 0, {}};
  for (std::size_t s = 0; s < samples; ++s) {
    const auto sample = sample_planted(d, n, seed + s);
    ++report.eligible;
    auto scan = scanner.scan(sample.tuple);
    bool good = scan.all_generators_vanish && scan.consistent;
    for (const auto& m : cascades) {
      auto residual = kernel_residual(m, sample.tuple, sample.root);
      good = good && std::all_of(residual.begin(), residual.end(), [](const Rational& q) { return q == 0; });
    }
    if (!good) report.failures.push_back(seed + s);
  }
  return report;
}

SamplingReport nonplanted_sampling(int d, int n, std::size_t samples, std::uint64_t seed) {
  MembershipScanner scanner(d, n);
  SamplingReport report{d, n, samples, 0, {}};
  for (std::size_t s = 0; s < samples; ++s) {
    const auto tuple = sample_random(d, n, seed + s);
    auto scan = scanner.scan(tuple);
    if (!scan.consistent) {
      report.failures.push_back(seed + s);
      continue;
    }
    if (scan.root.projective_common_root()) continue;
    ++report.eligible;
    if (scan.top_minors_vanish) report.failures.push_back(seed + s);
  }
  return report;
}

SamplingReport rank_cascade_sampling(int d, int n, std::size_t samples, std::uint64_t seed) {
  MembershipScanner scanner(d, n);
  SamplingReport report{d, n, samples, 0, {}};
  for (std::size_t s = 0; s < samples; ++s) {
    const auto tuple = sample_specialization(d, n, seed + s);
    bool good = true;
    for (const auto& check : rank_cascade(scanner, tuple)) {
      if (check.minors_k_vanish) ++report.eligible;
      good = good && check.holds();
    }
    if (!good) report.failures.push_back(seed + s);
  }
  return report;
}

}  // namespace rforge
