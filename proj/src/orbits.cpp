#include "starq/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace starq {

bool OrbitGraph::contains(const Weight& w) const {
  return std::binary_search(vertices.begin(), vertices.end(), w);
}

std::vector<Weight> OrbitGraph::maximal() const {
  std::vector<Weight> out;
  for (const auto& v : vertices)
    if (maximal_info(v).is_maximal) out.push_back(v);
  return out;
}

OrbitGraph orbit(const Weight& l, std::size_t cap) {
  OrbitGraph g;
  g.n = l.n();
  std::set<Weight> seen{l};
  std::deque<Weight> queue{l};
  while (!queue.empty() && !g.truncated) {
    Weight v = queue.front();
    queue.pop_front();
    for (int i = 1; i < l.n(); ++i) {
      Weight w = star(i, v);
      if (seen.count(w)) continue;
      if (seen.size() >= cap) {
        g.truncated = true;
        break;
      }
      seen.insert(w);
      queue.push_back(w);
    }
  }
  g.vertices.assign(seen.begin(), seen.end());

  using Key = std::tuple<Weight, int, Weight>;
  std::map<Key, OrbitEdge> edges;
  for (const auto& v : g.vertices) {
    for (int i = 1; i < l.n(); ++i) {
      Weight w = star(i, v);
      if (!seen.count(w)) continue;
      OrbitEdge e{v, i, w, compare(v, w)};
      if (e.relation == Order::Less ||
          (e.relation == Order::Incomparable && w < v)) {
        std::swap(e.from, e.to);
        e.relation = flip(e.relation);
      }
      edges.emplace(Key{e.from, i, e.to}, e);
    }
  }
  for (auto& [k, e] : edges) g.edges.push_back(std::move(e));
  return g;
}

namespace {

void extend(IncreasingString& cur, std::vector<IncreasingString>& out, std::size_t limit) {
  const Weight mu = cur.weights.back();
  bool any = false;
  for (int i = 1; i < mu.n(); ++i) {
    if (limit && out.size() >= limit) return;
    if (star_relation_by_coords(mu, i) != Order::Less) continue;
    any = true;
    cur.weights.push_back(star(i, mu));
    cur.steps.push_back(i);
    extend(cur, out, limit);
    cur.weights.pop_back();
    cur.steps.pop_back();
  }
  if (!any) out.push_back(cur);
}

}  // namespace

std::vector<IncreasingString> increasing_strings(const Weight& mu, std::size_t limit) {
  std::vector<IncreasingString> out;
  IncreasingString cur;
  cur.weights.push_back(mu);
  extend(cur, out, limit);
  return out;
}

// Dot-type steps in an increasing string only touch coordinate pairs (-a, a)
// with a >= 1 rational, and each raises the sum of negative coordinates by
// one; between two such steps there are at most N plain swaps. That gives
// N + (N+1)*floor(|sneg_0|).
ChainBound chain_bound(const Weight& mu) {
  ChainBound r;
  Rational sneg = 0;
  for (const auto& a : mu.coords()) {
    if (!a.is_rational()) {
      r.heuristic = true;
      continue;
    }
    if (a.rational() < 0) sneg += a.rational();
  }
  const std::uint64_t n = static_cast<std::uint64_t>(mu.n());
  const std::uint64_t big_n = n * (n - 1) / 2;
  mpz_class dots = mpz_class(-sneg.get_num()) / sneg.get_den();
  r.bound = big_n + (big_n + 1) * dots.get_ui();
  return r;
}

}  // namespace starq
