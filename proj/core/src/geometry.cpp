#include "rforge/geometry.hpp"

#include "rforge/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rforge {

SquareFreeMonomialIdeal::SquareFreeMonomialIdeal(std::vector<Monomial> generators) {
  for (const auto& g : generators)
    if (!g.is_square_free()) throw ParameterOutOfRange("square-free monomial ideal: generator is not square-free");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t a = 0; a < generators.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < generators.size() && !redundant; ++b)
      if (a != b && generators[b].divides(generators[a])) redundant = true;
    if (!redundant) generators_.push_back(generators[a]);
  }
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const std::vector<Monomial>& gens) {
    for (const auto& g : gens) {
      std::vector<std::size_t> edge;
      for (const auto& f : g.factors()) edge.push_back(f.var);
      edges_.push_back(std::move(edge));
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    if (edges_.empty()) return {{}};
    hits_.assign(edges_.size(), 0);
    search();
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool chosen(std::size_t v) const { return std::find(chosen_.begin(), chosen_.end(), v) != chosen_.end(); }
  bool forbidden(std::size_t v) const {
    return std::find(forbidden_.begin(), forbidden_.end(), v) != forbidden_.end();
  }

  // Every chosen vertex must still own an edge hit by nothing else.
  bool all_have_private_edges() const {
    for (auto v : chosen_) {
      bool owns = false;
      for (std::size_t e = 0; e < edges_.size() && !owns; ++e)
        owns = hits_[e] == 1 && std::find(edges_[e].begin(), edges_[e].end(), v) != edges_[e].end();
      if (!owns) return false;
    }
    return true;
  }

  void search() {
    std::size_t open = edges_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (hits_[e] == 0) {
        open = e;
        break;
      }
    if (open == edges_.size()) {
      auto cover = chosen_;
      std::sort(cover.begin(), cover.end());
      found_.push_back(std::move(cover));
      return;
    }
    const std::size_t forbidden_mark = forbidden_.size();
    for (auto v : edges_[open]) {
      if (forbidden(v)) continue;
      choose(v, +1);
      if (all_have_private_edges()) search();
      choose(v, -1);
      // Later branches of this edge exclude v, so each cover appears once.
      forbidden_.push_back(v);
    }
    forbidden_.resize(forbidden_mark);
  }

  void choose(std::size_t v, int delta) {
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (std::find(edges_[e].begin(), edges_[e].end(), v) != edges_[e].end()) hits_[e] += delta;
    if (delta > 0)
      chosen_.push_back(v);
    else
      chosen_.pop_back();
  }

  std::vector<std::vector<std::size_t>> edges_;
  std::vector<int> hits_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> forbidden_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<std::vector<std::size_t>> minimal_primes(const SquareFreeMonomialIdeal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.is_one()) return {};  // unit ideal, empty variety
  return CoverSearch(ideal.generators()).run();
}

DimensionDegree dim_and_degree(const SquareFreeMonomialIdeal& ideal, std::size_t ambient) {
  auto primes = minimal_primes(ideal);
  if (primes.empty()) return {-1, 0, true};
  std::size_t smallest = primes.front().size();
  std::size_t largest = smallest;
  for (const auto& p : primes) {
    smallest = std::min(smallest, p.size());
    largest = std::max(largest, p.size());
  }
  if (smallest > ambient) throw ParameterOutOfRange("dim_and_degree: component larger than the ambient space");
  int degree = static_cast<int>(std::count_if(primes.begin(), primes.end(), [&](const auto& p) { return p.size() == smallest; }));
  return {static_cast<int>(ambient) - 1 - static_cast<int>(smallest), degree, smallest == largest};
}

ChowClass::ChowClass(int top) : top_(top), coeffs_(2 * static_cast<std::size_t>(top + 1), 0) {
  if (top < 0) throw ParameterOutOfRange("ChowClass: negative truncation");
}

ChowClass ChowClass::constant(int top, std::int64_t c) {
  ChowClass out(top);
  out.coeffs_[0] = c;
  return out;
}

ChowClass ChowClass::h1(int top) {
  ChowClass out(top);
  out.coeffs_[static_cast<std::size_t>(top + 1)] = 1;
  return out;
}

ChowClass ChowClass::h2(int top) {
  ChowClass out(top);
  if (top >= 1) out.coeffs_[1] = 1;
  return out;
}

std::int64_t ChowClass::coefficient(int a, int b) const {
  if (a < 0 || a > 1 || b < 0 || b > top_) return 0;
  return coeffs_[static_cast<std::size_t>(a) * (top_ + 1) + b];
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
  if (top_ != other.top_) throw ParameterOutOfRange("ChowClass: mismatched truncation");
  ChowClass out(top_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return out;
}

ChowClass ChowClass::operator*(const ChowClass& other) const {
  if (top_ != other.top_) throw ParameterOutOfRange("ChowClass: mismatched truncation");
  ChowClass out(top_);
  const int width = top_ + 1;
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int b1 = 0; b1 <= top_; ++b1) {
      auto c1 = coefficient(a1, b1);
      if (c1 == 0) continue;
      for (int a2 = 0; a1 + a2 <= 1; ++a2)
        for (int b2 = 0; b1 + b2 <= top_; ++b2) {
          auto c2 = other.coefficient(a2, b2);
          if (c2 != 0) out.coeffs_[static_cast<std::size_t>(a1 + a2) * width + b1 + b2] += c1 * c2;
        }
    }
  return out;
}

ChowClass ChowClass::scale(std::int64_t c) const {
  ChowClass out(top_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * c;
  return out;
}

std::int64_t chow_degree(std::span<const int> degrees) {
  if (degrees.size() < 2) throw ParameterOutOfRange("chow_degree: need at least two forms");
  for (int d : degrees)
    if (d < 1) throw ParameterOutOfRange("chow_degree: degrees must be >= 1");
  const int n = static_cast<int>(degrees.size());
  const int big_d = std::accumulate(degrees.begin(), degrees.end(), 0);
  const int top = n - 1 + big_d;  // H_2^{n+D} = 0
  auto h1 = ChowClass::h1(top);
  auto h2 = ChowClass::h2(top);
  auto product = ChowClass::constant(top, 1);
  for (int i = 0; i < big_d; ++i) product = product * h2;
  for (int d : degrees) product = product * (h1.scale(d) + h2);
  return product.coefficient(1, top);
}

}  // namespace rforge
