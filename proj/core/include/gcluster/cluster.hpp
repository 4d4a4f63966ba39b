#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gcluster/split.hpp"

namespace gcluster {

// Vertices 0..n-1 are mutable, n..s-1 frozen. arrows(l, m) = number of arrows l -> m.
class MultiQuiver {
 public:
  MultiQuiver(int mutable_count, int total, std::vector<int> multiplicities);

  int mutable_count() const noexcept { return n_; }
  int size() const noexcept { return s_; }
  bool is_mutable(int v) const noexcept { return v >= 0 && v < n_; }
  // d_m for mutable vertices, 1 for frozen ones.
  int multiplicity(int v) const;
  int arrows(int from, int to) const { return b_.at(index(from, to)); }
  void set_arrows(int from, int to, int count);
  void add_arrows(int from, int to, int count) { set_arrows(from, to, arrows(from, to) + count); }
  // Appends frozen vertices without arrows.
  MultiQuiver with_frozen(int extra) const;
  // Throws StructuralError when a mutable-mutable 2-cycle is present.
  void validate() const;

  friend bool operator==(const MultiQuiver&, const MultiQuiver&) = default;

 private:
  std::size_t index(int from, int to) const;

  int n_;
  int s_;
  std::vector<int> d_;
  std::vector<int> b_;
};

MultiQuiver quiver_mutate(const MultiQuiver& q, int m);

// Exponent of every vertex in the term T_r at mutable vertex m (p_{mr} excluded).
std::vector<int> exchange_exponents(const MultiQuiver& q, int m, int r);

// Per mutable vertex m: coefficients p_{m,0..d_m}.
using ExchangeStrings = std::vector<std::vector<RationalSplit>>;

ExchangeStrings trivial_strings(const MultiQuiver& q, const DistSetPtr& dist);

class Seed {
 public:
  Seed(MultiQuiver quiver, std::vector<RationalSplit> vars, ExchangeStrings strings, DistSetPtr dist);

  const MultiQuiver& quiver() const noexcept { return quiver_; }
  const RationalSplit& var(int v) const { return vars_.at(static_cast<std::size_t>(v)); }
  const std::vector<RationalSplit>& vars() const noexcept { return vars_; }
  const std::vector<RationalSplit>& string(int m) const { return strings_.at(static_cast<std::size_t>(m)); }
  const ExchangeStrings& strings() const noexcept { return strings_; }
  const DistSetPtr& dist() const noexcept { return dist_; }
  const VarTablePtr& ambient() const { return dist_->vars(); }
  // Frozen vertex carrying distinguished polynomial k (the vertex whose split is q_k).
  int vertex_of(std::size_t k) const { return dist_vertex_.at(k); }

  friend bool operator==(const Seed& a, const Seed& b);

 private:
  MultiQuiver quiver_;
  std::vector<RationalSplit> vars_;
  ExchangeStrings strings_;
  DistSetPtr dist_;
  std::vector<int> dist_vertex_;
};

std::vector<RationalSplit> exchange_rhs(const Seed& seed, int m);
RationalSplit exchange_polynomial(const Seed& seed, int m);
Seed mutate_seed(const Seed& seed, int m);
std::vector<int> y_variable(const MultiQuiver& q, int m);
inline std::vector<int> y_variable(const Seed& seed, int m) { return y_variable(seed.quiver(), m); }

std::string quiver_key(const MultiQuiver& q);
std::string seed_key(const Seed& seed);

struct SeedGraphEdge {
  std::size_t from;
  std::size_t to;
  int direction;
};

template <class State>
struct Graph {
  std::vector<State> nodes;
  std::vector<std::string> keys;
  std::vector<int> depth;
  std::vector<SeedGraphEdge> edges;
  // Mutations that could not be carried out, with the reason.
  std::vector<std::pair<SeedGraphEdge, std::string>> failures;
  bool truncated = false;
};

using SeedGraph = Graph<Seed>;

// Breadth-first enumeration keyed by canonical form; directions tried in increasing order.
template <class State>
Graph<State> explore_states(const State& root, int max_depth, std::size_t max_seeds, int mutable_count,
                            const std::function<State(const State&, int)>& mutate,
                            const std::function<std::string(const State&)>& key) {
  Graph<State> g;
  std::map<std::string, std::size_t> index;
  g.nodes.push_back(root);
  g.keys.push_back(key(root));
  g.depth.push_back(0);
  index.emplace(g.keys.back(), 0);
  for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
    const bool boundary = g.depth[cur] >= max_depth;
    for (int m = 0; m < mutable_count; ++m) {
      std::optional<State> next;
      try {
        next.emplace(mutate(g.nodes[cur], m));
      } catch (const std::exception& e) {
        if (!boundary) g.failures.push_back({{cur, cur, m}, e.what()});
        continue;
      }
      std::string k = key(*next);
      auto it = index.find(k);
      if (it != index.end()) {
        g.edges.push_back({cur, it->second, m});
        continue;
      }
      if (boundary || g.nodes.size() >= max_seeds) {
        g.truncated = true;
        continue;
      }
      index.emplace(k, g.nodes.size());
      g.edges.push_back({cur, g.nodes.size(), m});
      g.nodes.push_back(std::move(*next));
      g.keys.push_back(std::move(k));
      g.depth.push_back(g.depth[cur] + 1);
    }
  }
  return g;
}

SeedGraph explore(const Seed& seed, int max_depth, std::size_t max_seeds);

// Distinct variables (canonical text) across all nodes of a seed graph.
std::vector<std::string> distinct_variables(const SeedGraph& g);

}  // namespace gcluster
