#include <set>
#include <sstream>

#include "gcluster/cluster.hpp"

namespace gcluster {

ExchangeStrings trivial_strings(const MultiQuiver& q, const DistSetPtr& dist) {
  ExchangeStrings out;
  for (int m = 0; m < q.mutable_count(); ++m)
    out.emplace_back(static_cast<std::size_t>(q.multiplicity(m) + 1), RationalSplit::one(dist));
  return out;
}

Seed::Seed(MultiQuiver quiver, std::vector<RationalSplit> vars, ExchangeStrings strings, DistSetPtr dist)
    : quiver_(std::move(quiver)), vars_(std::move(vars)), strings_(std::move(strings)), dist_(std::move(dist)) {
  quiver_.validate();
  if (!dist_) throw StructuralError("seed without distinguished set");
  if (static_cast<int>(vars_.size()) != quiver_.size()) throw StructuralError("one variable per vertex required");
  for (const auto& v : vars_) {
    if (!same_dist(v.dist(), dist_)) throw StructuralError("seed variable over a different distinguished set");
    if (v.is_zero()) throw StructuralError("cluster variables must be nonzero");
  }
  if (static_cast<int>(strings_.size()) != quiver_.mutable_count())
    throw StructuralError("one exchange string per mutable vertex required");
  for (int m = 0; m < quiver_.mutable_count(); ++m) {
    const auto& s = strings_[static_cast<std::size_t>(m)];
    if (static_cast<int>(s.size()) != quiver_.multiplicity(m) + 1)
      throw StructuralError("exchange string at vertex " + std::to_string(m + 1) + " has wrong length");
    if (!s.front().is_one() || !s.back().is_one())
      throw StructuralError("exchange string at vertex " + std::to_string(m + 1) + " must have unit endpoints");
    for (const auto& p : s)
      if (!same_dist(p.dist(), dist_)) throw StructuralError("exchange coefficient over a different set");
  }
  for (std::size_t k = 0; k < dist_->size(); ++k) {
    auto q = RationalSplit::q_power(dist_, k, 1);
    int found = -1;
    for (int v = quiver_.mutable_count(); v < quiver_.size(); ++v)
      if (vars_[static_cast<std::size_t>(v)] == q) found = v;
    if (found < 0)
      throw StructuralError("distinguished polynomial '" + dist_->entry(k).label + "' does not occupy a frozen vertex");
    dist_vertex_.push_back(found);
  }
}

bool operator==(const Seed& a, const Seed& b) {
  return a.quiver_ == b.quiver_ && a.vars_ == b.vars_ && a.strings_ == b.strings_ && same_dist(a.dist_, b.dist_);
}

std::vector<RationalSplit> exchange_rhs(const Seed& seed, int m) {
  const auto& q = seed.quiver();
  if (!q.is_mutable(m)) throw DomainError("exchange relation at frozen vertex " + std::to_string(m + 1));
  std::vector<RationalSplit> terms;
  for (int r = 0; r <= q.multiplicity(m); ++r) {
    auto e = exchange_exponents(q, m, r);
    RationalSplit t = seed.string(m)[static_cast<std::size_t>(r)];
    for (int l = 0; l < q.size(); ++l)
      if (e[static_cast<std::size_t>(l)] > 0) t = t * seed.var(l).pow(static_cast<unsigned>(e[static_cast<std::size_t>(l)]));
    terms.push_back(std::move(t));
  }
  return terms;
}

RationalSplit exchange_polynomial(const Seed& seed, int m) {
  auto terms = exchange_rhs(seed, m);
  RationalSplit sum = RationalSplit::zero(seed.dist());
  for (const auto& t : terms) sum = sum + t;
  return sum;
}

Seed mutate_seed(const Seed& seed, int m) {
  const auto& q = seed.quiver();
  if (!q.is_mutable(m)) throw DomainError("cannot mutate at frozen or out-of-range vertex " + std::to_string(m + 1));
  RationalSplit P = exchange_polynomial(seed, m);
  auto fresh = P.try_div(seed.var(m));
  if (!fresh)
    throw NonRegularError("exchange polynomial at vertex " + std::to_string(m + 1) +
                          " is not divisible by the cluster variable; the structure is not regular");
  std::vector<RationalSplit> vars = seed.vars();
  vars[static_cast<std::size_t>(m)] = std::move(*fresh);
  ExchangeStrings strings = seed.strings();
  auto& s = strings[static_cast<std::size_t>(m)];
  std::reverse(s.begin(), s.end());
  return Seed(quiver_mutate(q, m), std::move(vars), std::move(strings), seed.dist());
}

std::string seed_key(const Seed& seed) {
  std::ostringstream os;
  for (const auto& v : seed.vars()) os << v.to_string() << '|';
  os << quiver_key(seed.quiver()) << '|';
  for (const auto& s : seed.strings())
    for (const auto& p : s) os << p.to_string() << ';';
  return os.str();
}

SeedGraph explore(const Seed& seed, int max_depth, std::size_t max_seeds) {
  if (max_depth < 0 || max_seeds == 0) throw DomainError("exploration bounds must be positive");
  return explore_states<Seed>(seed, max_depth, max_seeds, seed.quiver().mutable_count(), mutate_seed, seed_key);
}

std::vector<std::string> distinct_variables(const SeedGraph& g) {
  std::set<std::string> seen;
  for (const auto& s : g.nodes)
    for (const auto& v : s.vars()) seen.insert(v.to_string());
  return {seen.begin(), seen.end()};
}

}  // namespace gcluster
