#include "rforge/term_order.hpp"

#include "rforge/errors.hpp"

#include <algorithm>
#include <limits>

namespace rforge {

struct TermOrder::Node {
  Kind kind = Kind::degrevlex;
  // rank[var] = position in the ranking (0 = most significant), -1 = ignored.
  std::vector<int> rank;
  std::vector<std::int64_t> weights;
  std::shared_ptr<const Node> tiebreak;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
  std::vector<char> covered;
};

namespace {

using Node = TermOrder::Node;

std::vector<int> rank_table(const Ring& ring, const std::vector<std::size_t>& ranking, const char* what) {
  std::vector<int> rank(ring.size(), -1);
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
    auto var = ranking[pos];
    if (var >= ring.size()) throw RingMismatch(std::string(what) + ": ranking names a variable outside the ring");
    if (rank[var] != -1) throw ParameterOutOfRange(std::string(what) + ": ranking repeats a variable");
    rank[var] = static_cast<int>(pos);
  }
  return rank;
}

std::vector<std::size_t> natural_ranking(const Ring& ring) {
  std::vector<std::size_t> r(ring.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
  return r;
}

template <typename F>
void for_each_difference(const Monomial& u, const Monomial& v, F&& f) {
  const auto& a = u.factors();
  const auto& b = v.factors();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->var < ib->var)) {
      f(ia->var, ia->exp, 0u);
      ++ia;
    } else if (ia == a.end() || ib->var < ia->var) {
      f(ib->var, 0u, ib->exp);
      ++ib;
    } else {
      if (ia->exp != ib->exp) f(ia->var, ia->exp, ib->exp);
      ++ia;
      ++ib;
    }
  }
}

std::strong_ordering compare_node(const Node& node, const Monomial& u, const Monomial& v) {
  switch (node.kind) {
    case TermOrder::Kind::lex: {
      int best = std::numeric_limits<int>::max();
      std::strong_ordering result = std::strong_ordering::equal;
      for_each_difference(u, v, [&](std::uint32_t var, std::uint32_t eu, std::uint32_t ev) {
        int r = node.rank[var];
        if (r >= 0 && r < best) {
          best = r;
          result = eu <=> ev;
        }
      });
      return result;
    }
    case TermOrder::Kind::degrevlex: {
      std::int64_t du = 0;
      std::int64_t dv = 0;
      for (const auto& f : u.factors())
        if (node.rank[f.var] >= 0) du += f.exp;
      for (const auto& f : v.factors())
        if (node.rank[f.var] >= 0) dv += f.exp;
      if (du != dv) return du <=> dv;
      int worst = -1;
      std::strong_ordering result = std::strong_ordering::equal;
      for_each_difference(u, v, [&](std::uint32_t var, std::uint32_t eu, std::uint32_t ev) {
        int r = node.rank[var];
        if (r > worst) {
          worst = r;
          result = ev <=> eu;  // smaller exponent in the last variable wins
        }
      });
      return result;
    }
    case TermOrder::Kind::weighted: {
      std::int64_t wu = 0;
      std::int64_t wv = 0;
      for (const auto& f : u.factors()) wu += node.weights[f.var] * f.exp;
      for (const auto& f : v.factors()) wv += node.weights[f.var] * f.exp;
      if (wu != wv) return wu <=> wv;
      return compare_node(*node.tiebreak, u, v);
    }
    case TermOrder::Kind::block: {
      auto r = compare_node(*node.first, u, v);
      if (r != 0) return r;
      return compare_node(*node.second, u, v);
    }
  }
  return std::strong_ordering::equal;
}

std::string describe_node(const Node& node) {
  switch (node.kind) {
    case TermOrder::Kind::lex:
      return "lex";
    case TermOrder::Kind::degrevlex:
      return "degrevlex";
    case TermOrder::Kind::weighted:
      return "weighted(" + describe_node(*node.tiebreak) + ")";
    case TermOrder::Kind::block:
      return "block(" + describe_node(*node.first) + "; " + describe_node(*node.second) + ")";
  }
  return {};
}

}  // namespace

TermOrder::TermOrder(RingPtr ring, std::shared_ptr<const Node> root) : ring_(std::move(ring)), root_(std::move(root)) {}

TermOrder TermOrder::lex(RingPtr ring, std::vector<std::size_t> ranking) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::lex;
  node->rank = rank_table(*ring, ranking, "lex");
  node->covered.assign(ring->size(), 0);
  for (auto v : ranking) node->covered[v] = 1;
  return TermOrder(std::move(ring), std::move(node));
}

TermOrder TermOrder::degrevlex(RingPtr ring, std::vector<std::size_t> ranking) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::degrevlex;
  node->rank = rank_table(*ring, ranking, "degrevlex");
  node->covered.assign(ring->size(), 0);
  for (auto v : ranking) node->covered[v] = 1;
  return TermOrder(std::move(ring), std::move(node));
}

TermOrder TermOrder::lex(RingPtr ring) {
  auto ranking = natural_ranking(*ring);
  return lex(std::move(ring), std::move(ranking));
}

TermOrder TermOrder::degrevlex(RingPtr ring) {
  auto ranking = natural_ranking(*ring);
  return degrevlex(std::move(ring), std::move(ranking));
}

TermOrder TermOrder::weighted(RingPtr ring, std::vector<std::int64_t> weights, TermOrder tiebreak) {
  require_same_ring(ring, tiebreak.ring_, "weighted order tiebreak");
  if (weights.size() != ring->size())
    throw ParameterOutOfRange("weighted order: need exactly one weight per ring variable");
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] < 0) throw ParameterOutOfRange("weighted order: weights must be nonnegative");
    if (weights[v] == 0 && tiebreak.root_->covered[v])
      throw ParameterOutOfRange("weighted order: weight of " + ring->name(v) + " must be positive");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::weighted;
  node->weights = std::move(weights);
  node->covered = tiebreak.root_->covered;
  node->tiebreak = tiebreak.root_;
  return TermOrder(std::move(ring), std::move(node));
}

TermOrder TermOrder::block(RingPtr ring, std::vector<std::size_t> first_vars, TermOrder first_order,
                           TermOrder second_order) {
  require_same_ring(ring, first_order.ring_, "block order");
  require_same_ring(ring, second_order.ring_, "block order");
  std::vector<char> in_first(ring->size(), 0);
  for (auto v : first_vars) {
    if (v >= ring->size()) throw RingMismatch("block order: variable outside the ring");
    in_first[v] = 1;
  }
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (first_order.root_->covered[v] && !in_first[v])
      throw ParameterOutOfRange("block order: first order must only see the first block");
    if (in_first[v] && !first_order.root_->covered[v])
      throw ParameterOutOfRange("block order: first order must rank every first-block variable");
    if (second_order.root_->covered[v] && in_first[v])
      throw ParameterOutOfRange("block order: second order must not see first-block variables");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::block;
  node->first = first_order.root_;
  node->second = second_order.root_;
  node->covered.assign(ring->size(), 0);
  for (std::size_t v = 0; v < ring->size(); ++v)
    node->covered[v] = first_order.root_->covered[v] || second_order.root_->covered[v];
  return TermOrder(std::move(ring), std::move(node));
}

TermOrder::Kind TermOrder::kind() const { return root_->kind; }

bool TermOrder::is_total() const {
  return std::all_of(root_->covered.begin(), root_->covered.end(), [](char c) { return c != 0; });
}

std::string TermOrder::describe() const { return describe_node(*root_); }

std::strong_ordering TermOrder::compare(const Monomial& u, const Monomial& v) const {
  const auto size = ring_->size();
  if (u.max_variable() > size || v.max_variable() > size)
    throw RingMismatch("compare: monomial uses a variable outside the order's ring");
  return compare_node(*root_, u, v);
}

std::int64_t TermOrder::weight(const Monomial& m) const {
  if (root_->kind != Kind::weighted) throw ParameterOutOfRange("weight: order is not weighted");
  if (m.max_variable() > ring_->size()) throw RingMismatch("weight: monomial outside the order's ring");
  std::int64_t w = 0;
  for (const auto& f : m.factors()) w += root_->weights[f.var] * f.exp;
  return w;
}

}  // namespace rforge
