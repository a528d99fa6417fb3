#include "rforge/ring.hpp"

#include "rforge/errors.hpp"

#include <charconv>
#include <cstdio>

namespace rforge {

namespace {

std::optional<std::pair<int, int>> parse_indexed(std::string_view name, char prefix) {
  if (name.size() < 5 || name[0] != prefix || name[1] != '_') return std::nullopt;
  auto rest = name.substr(2);
  auto sep = rest.find('_');
  if (sep == std::string_view::npos) return std::nullopt;
  int i = 0;
  int j = 0;
  auto first = rest.substr(0, sep);
  auto second = rest.substr(sep + 1);
  if (first.empty() || second.empty()) return std::nullopt;
  auto r1 = std::from_chars(first.data(), first.data() + first.size(), i);
  auto r2 = std::from_chars(second.data(), second.data() + second.size(), j);
  if (r1.ec != std::errc{} || r1.ptr != first.data() + first.size()) return std::nullopt;
  if (r2.ec != std::errc{} || r2.ptr != second.data() + second.size()) return std::nullopt;
  return std::pair{i, j};
}

}  // namespace

std::string to_string(const VariableId& v) {
  switch (v.kind) {
    case VariableId::Kind::coefficient:
      return "a_" + std::to_string(v.i) + "_" + std::to_string(v.j);
    case VariableId::Kind::eliminand:
      return "x";
    case VariableId::Kind::auxiliary:
      return v.name;
  }
  return {};
}

Ring::Ring(int d, int n, bool with_eliminand, std::vector<std::string> auxiliaries)
    : d_(d), n_(n), with_eliminand_(with_eliminand), auxiliaries_(std::move(auxiliaries)) {
  if (d < 1) throw ParameterOutOfRange("ring: degree d must be >= 1");
  if (n < 1) throw ParameterOutOfRange("ring: polynomial count n must be >= 1");
  for (std::size_t a = 0; a < auxiliaries_.size(); ++a) {
    const auto& token = auxiliaries_[a];
    if (token.empty() || token == "x" || parse_indexed(token, 'a'))
      throw ParameterOutOfRange("ring: auxiliary name '" + token + "' is reserved or empty");
    for (std::size_t b = 0; b < a; ++b)
      if (auxiliaries_[b] == token) throw ParameterOutOfRange("ring: duplicate auxiliary '" + token + "'");
  }
}

RingPtr Ring::coefficients(int d, int n) { return std::make_shared<const Ring>(d, n); }

RingPtr Ring::with_eliminand(int d, int n) { return std::make_shared<const Ring>(d, n, true); }

RingPtr Ring::make(int d, int n, bool with_eliminand, std::vector<std::string> auxiliaries) {
  return std::make_shared<const Ring>(d, n, with_eliminand, std::move(auxiliaries));
}

std::size_t Ring::coefficient_index(int i, int j) const {
  if (i < 1 || i > n_ || j < 0 || j > d_)
    throw RingMismatch("coefficient a_" + std::to_string(i) + "_" + std::to_string(j) +
                       " is outside the ring with d=" + std::to_string(d_) + ", n=" + std::to_string(n_));
  return static_cast<std::size_t>(i - 1) * (d_ + 1) + static_cast<std::size_t>(j);
}

std::size_t Ring::eliminand_index() const {
  if (!with_eliminand_) throw RingMismatch("ring has no eliminand x");
  return coefficient_count();
}

std::optional<std::size_t> Ring::find(const VariableId& v) const {
  switch (v.kind) {
    case VariableId::Kind::coefficient:
      if (v.i < 1 || v.i > n_ || v.j < 0 || v.j > d_) return std::nullopt;
      return coefficient_index(v.i, v.j);
    case VariableId::Kind::eliminand:
      if (!with_eliminand_) return std::nullopt;
      return coefficient_count();
    case VariableId::Kind::auxiliary: {
      std::size_t base = coefficient_count() + (with_eliminand_ ? 1 : 0);
      for (std::size_t a = 0; a < auxiliaries_.size(); ++a)
        if (auxiliaries_[a] == v.name) return base + a;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::size_t Ring::index_of(const VariableId& v) const {
  auto idx = find(v);
  if (!idx) throw RingMismatch("variable " + to_string(v) + " does not belong to the ring");
  return *idx;
}

VariableId Ring::variable(std::size_t index) const {
  if (index < coefficient_count()) {
    int i = static_cast<int>(index / (d_ + 1)) + 1;
    int j = static_cast<int>(index % (d_ + 1));
    return VariableId::coefficient(i, j);
  }
  index -= coefficient_count();
  if (with_eliminand_) {
    if (index == 0) return VariableId::eliminand();
    --index;
  }
  if (index < auxiliaries_.size()) return VariableId::auxiliary(auxiliaries_[index]);
  throw RingMismatch("variable index out of range for ring");
}

std::string Ring::name(std::size_t index) const { return to_string(variable(index)); }

std::optional<std::size_t> Ring::parse_name(std::string_view name) const {
  if (name == "x") return find(VariableId::eliminand());
  if (auto ij = parse_indexed(name, 'a')) return find(VariableId::coefficient(ij->first, ij->second));
  return find(VariableId::auxiliary(std::string(name)));
}

bool Ring::operator==(const Ring& other) const {
  return d_ == other.d_ && n_ == other.n_ && with_eliminand_ == other.with_eliminand_ &&
         auxiliaries_ == other.auxiliaries_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view context) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(context) + ": operands live in different rings");
}

}  // namespace rforge
