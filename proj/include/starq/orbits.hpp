#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starq/weights.hpp"

namespace starq {

struct OrbitEdge {
  Weight from;
  SimpleIndex label = 0;
  Weight to;
  // Relation of `from` to `to`. Non-loop comparable edges are stored with
  // from > to; loops are Equal; incomparable edges keep lexicographic order.
  Order relation = Order::Incomparable;
};

struct OrbitGraph {
  int n = 0;
  std::vector<Weight> vertices;  // sorted
  std::vector<OrbitEdge> edges;  // sorted, each undirected edge once
  bool truncated = false;

  bool contains(const Weight& w) const;
  std::vector<Weight> maximal() const;
};

OrbitGraph orbit(const Weight& l, std::size_t cap);

struct IncreasingString {
  std::vector<Weight> weights;  // mu_0 < mu_1 < ... < mu_s
  std::vector<SimpleIndex> steps;  // mu_{j+1} = s_{steps[j]} * mu_j

  std::size_t length() const { return steps.size(); }
  const Weight& top() const { return weights.back(); }
  // Word w with w * top() == weights.front().
  Word word() const { return steps; }
};

// All increasing strings from mu. `limit` stops the search early once that
// many strings have been found (0 means exhaustive).
std::vector<IncreasingString> increasing_strings(const Weight& mu, std::size_t limit = 0);

struct ChainBound {
  std::uint64_t bound = 0;
  bool heuristic = false;  // formal coordinates were ignored
};
ChainBound chain_bound(const Weight& mu);

}  // namespace starq
