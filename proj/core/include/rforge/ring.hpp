#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rforge {

// Identity of a ring variable: a coefficient a_{i,j}, the eliminand x, or a
// named auxiliary symbol (r, b_{i,j}, ...).
struct VariableId {
  enum class Kind { coefficient, eliminand, auxiliary };

  Kind kind = Kind::coefficient;
  int i = 0;
  int j = 0;
  std::string name;  // auxiliary only

  static VariableId coefficient(int i, int j) { return {Kind::coefficient, i, j, {}}; }
  static VariableId eliminand() { return {Kind::eliminand, 0, 0, {}}; }
  static VariableId auxiliary(std::string name) {
    return {Kind::auxiliary, 0, 0, std::move(name)};
  }

  bool operator==(const VariableId&) const = default;
};

std::string to_string(const VariableId& v);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring Q[a_{i,j} (1<=i<=n, 0<=j<=d), optional x, auxiliaries].
//
// Variable indices are dense: the a-variables come first in row-major order
// (a_{1,0}, a_{1,1}, ..., a_{n,d}), then x if present, then the auxiliaries
// in declaration order. Two rings with equal (d, n, eliminand, auxiliaries)
// are interchangeable.
class Ring {
 public:
  Ring(int d, int n, bool with_eliminand = false, std::vector<std::string> auxiliaries = {});

  static RingPtr coefficients(int d, int n);
  static RingPtr with_eliminand(int d, int n);
  static RingPtr make(int d, int n, bool with_eliminand, std::vector<std::string> auxiliaries);

  int d() const { return d_; }
  int n() const { return n_; }
  bool has_eliminand() const { return with_eliminand_; }
  const std::vector<std::string>& auxiliaries() const { return auxiliaries_; }

  std::size_t size() const { return coefficient_count() + (with_eliminand_ ? 1 : 0) + auxiliaries_.size(); }
  std::size_t coefficient_count() const { return static_cast<std::size_t>(n_) * (d_ + 1); }

  std::size_t index_of(const VariableId& v) const;
  std::optional<std::size_t> find(const VariableId& v) const;
  std::size_t coefficient_index(int i, int j) const;
  std::size_t eliminand_index() const;
  VariableId variable(std::size_t index) const;
  bool is_coefficient(std::size_t index) const { return index < coefficient_count(); }

  // "a_<i>_<j>", "x", or the auxiliary token.
  std::string name(std::size_t index) const;
  std::optional<std::size_t> parse_name(std::string_view name) const;

  bool operator==(const Ring& other) const;

 private:
  int d_;
  int n_;
  bool with_eliminand_;
  std::vector<std::string> auxiliaries_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view context);

}  // namespace rforge
