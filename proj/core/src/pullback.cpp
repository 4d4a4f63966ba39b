#include "gcluster/pullback.hpp"

#include <algorithm>
#include <sstream>

namespace gcluster {

namespace {

// u^e for a split whose numerator is 1.
RationalSplit unit_power(const RationalSplit& u, int e) {
  auto c = u.numerator().constant_value();
  if (!c || *c != 1) throw InternalError("unit_power on a split with nontrivial numerator");
  std::vector<int> lam(u.lambda());
  for (auto& l : lam) l *= e;
  return RationalSplit::trusted(u.dist(), u.numerator(), std::move(lam));
}

}  // namespace

AmbientMap AmbientMap::create(VarTablePtr source, VarTablePtr target, std::vector<DistinguishedEntry> h_entries,
                              std::vector<CoordinateImage> images, DistSetPtr target_g) {
  if (!source || !target || !target_g) throw StructuralError("map needs source, target and G set");
  if (!same_table(target_g->vars(), target)) throw StructuralError("G set does not live on the target");
  if (images.size() != target->arity())
    throw StructuralError("map needs exactly one image per target coordinate");
  for (const auto& h : h_entries)
    if (h.kind != DistKind::H) throw StructuralError("map denominators must be H-type");
  for (const auto& g : target_g->entries())
    if (g.kind != DistKind::G) throw StructuralError("target distinguished polynomials must be G-type");
  AmbientMap map;
  map.source_ = source;
  map.target_ = target;
  map.target_g_ = target_g;
  map.h_set_ = make_dist_set(source, h_entries);
  const std::size_t nh = map.h_set_->size();

  std::vector<std::optional<RationalSplit>> over_h;
  for (auto& img : images) {
    if (!same_table(img.numerator.vars(), source)) throw StructuralError("image numerator not over the source");
    if (img.kappa.size() != nh) throw StructuralError("kappa length does not match H");
    if (img.numerator.is_zero()) throw StructuralError("map image is zero; the map is not dominant");
    over_h.emplace_back(RationalSplit::normalize(map.h_set_, img.numerator, img.kappa));
  }
  for (std::size_t y = 0; y < images.size(); ++y)
    images[y] = CoordinateImage{over_h[y]->numerator(), over_h[y]->lambda()};
  map.raw_ = images;

  std::vector<DistinguishedEntry> k_entries;
  std::vector<std::vector<int>> g_kappa;
  for (const auto& g : target_g->entries()) {
    RationalSplit pulled = subst_pullback(g.poly, over_h, map.h_set_);
    if (pulled.numerator().is_constant())
      throw StructuralError("pullback of '" + g.label + "' is a unit; it cannot be distinguished");
    k_entries.push_back({g.label, DistKind::G, pulled.numerator()});
    g_kappa.push_back(pulled.lambda());
  }
  for (const auto& h : map.h_set_->entries()) k_entries.push_back(h);
  map.k_set_ = make_dist_set(source, std::move(k_entries));
  const std::size_t ng = target_g->size();

  for (const auto& img : map.raw_) {
    std::vector<int> lam(ng, 0);
    lam.insert(lam.end(), img.kappa.begin(), img.kappa.end());
    map.images_k_.emplace_back(RationalSplit::normalize(map.k_set_, img.numerator, std::move(lam)));
  }
  for (std::size_t i = 0; i < ng; ++i) {
    std::vector<int> lam(ng, 0);
    lam[i] = -1;
    lam.insert(lam.end(), g_kappa[i].begin(), g_kappa[i].end());
    map.g_images_.push_back(RationalSplit::trusted(map.k_set_, Poly::constant(source, 1), std::move(lam)));
  }
  return map;
}

AmbientMap AmbientMap::identity(VarTablePtr table, DistSetPtr target_g) {
  std::vector<CoordinateImage> images;
  for (std::size_t i = 0; i < table->arity(); ++i) images.push_back({Poly::variable(table, i), {}});
  return create(table, table, {}, std::move(images), std::move(target_g));
}

RationalSplit pull_variable(const RationalSplit& f, const AmbientMap& map) {
  if (!same_dist(f.dist(), map.target_g())) throw StructuralError("variable is not split over the map's G set");
  RationalSplit out = subst_pullback(f.numerator(), std::vector<std::optional<RationalSplit>>(
                                                        [&] {
                                                          std::vector<std::optional<RationalSplit>> v;
                                                          for (std::size_t y = 0; y < map.target()->arity(); ++y)
                                                            v.emplace_back(map.image(y));
                                                          return v;
                                                        }()),
                                     map.k_set());
  for (std::size_t i = 0; i < map.g_count(); ++i)
    if (int l = f.lambda(i); l != 0) out = out * unit_power(map.g_image(i), -l);
  return out;
}

PullbackSeed::PullbackSeed(MultiQuiver base, std::vector<RationalSplit> vars, ExchangeStrings strings,
                           DistSetPtr dist, std::vector<int> vertex_of_k, std::size_t original_size,
                           ArrowConvention convention)
    : base_(std::move(base)),
      hat_(base_),
      vars_(std::move(vars)),
      strings_(std::move(strings)),
      dist_(std::move(dist)),
      vertex_of_k_(std::move(vertex_of_k)),
      original_size_(original_size),
      convention_(convention) {
  base_.validate();
  if (static_cast<int>(vars_.size()) != base_.size()) throw StructuralError("one variable per vertex required");
  if (vertex_of_k_.size() != dist_->size()) throw StructuralError("one vertex per distinguished polynomial required");
  for (const auto& v : vars_)
    if (!same_dist(v.dist(), dist_)) throw StructuralError("pullback variable over a different set");
  if (static_cast<int>(strings_.size()) != base_.mutable_count()) throw StructuralError("string count mismatch");
  for (std::size_t k = 0; k < vertex_of_k_.size(); ++k) {
    int v = vertex_of_k_[k];
    if (v < base_.mutable_count() || v >= base_.size())
      throw StructuralError("distinguished polynomial must sit on a frozen vertex");
    if (!vars_[static_cast<std::size_t>(v)].numerator().is_constant())
      throw StructuralError("distinguished vertex must carry q_k");
  }
  rebuild_hat();
}

void PullbackSeed::rebuild_hat() {
  hat_ = base_;
  pairs_.assign(dist_->size(), {});
  for (std::size_t k = 0; k < dist_->size(); ++k) {
    const int v = vertex_of_k_[k];
    std::vector<int> vertex_lambda;
    for (int l = 0; l < base_.size(); ++l) vertex_lambda.push_back(lambda(k, l));
    for (int m = 0; m < base_.mutable_count(); ++m) {
      std::vector<int> string_lambda;
      for (const auto& p : string(m)) string_lambda.push_back(p.lambda(k));
      MuPair pair = natural_pair(compute_profile(base_, vertex_lambda, string_lambda, k, m));
      if (!pair.is_arrow_data()) throw InternalError("non-integral arrow data from integral lambda");
      if (base_.multiplicity(m) == 1) {
        int net = base_.arrows(v, m) - base_.arrows(m, v) - discrepancy(*this, k, m);
        MuPair by_discrepancy{std::max(net, 0), std::max(-net, 0)};
        if (!(by_discrepancy == pair)) throw InternalError("discrepancy and hull arrow counts disagree");
      }
      const int mu0 = static_cast<int>(pair.mu0.get_num().get_si());
      const int mud = static_cast<int>(pair.mud.get_num().get_si());
      if (convention_ == ArrowConvention::kStandard) {
        hat_.set_arrows(v, m, mu0);
        hat_.set_arrows(m, v, mud);
      } else {
        hat_.set_arrows(v, m, mud);
        hat_.set_arrows(m, v, mu0);
      }
      pairs_[k].push_back(pair);
    }
  }
}

Poly PullbackSeed::cluster_poly(int v) const {
  if (auto k = dist_index(v)) return dist_->poly(*k);
  return hat(v);
}

std::optional<std::size_t> PullbackSeed::dist_index(int v) const {
  for (std::size_t k = 0; k < vertex_of_k_.size(); ++k)
    if (vertex_of_k_[k] == v) return k;
  return std::nullopt;
}

PullbackSeed PullbackSeed::with_convention(ArrowConvention c) const {
  return PullbackSeed(base_, vars_, strings_, dist_, vertex_of_k_, original_size_, c);
}

MuPair PullbackSeed::arrow_pair(std::size_t k, int m) const {
  if (!base_.is_mutable(m)) throw DomainError("arrow pair at frozen vertex");
  return pairs_.at(k).at(static_cast<std::size_t>(m));
}

Seed PullbackSeed::to_seed() const {
  auto empty = empty_dist_set(ambient());
  std::vector<RationalSplit> vars;
  for (int v = 0; v < base_.size(); ++v) vars.push_back(RationalSplit::trusted(empty, cluster_poly(v), {}));
  ExchangeStrings strings;
  for (const auto& s : strings_) {
    std::vector<RationalSplit> row;
    for (const auto& p : s) row.push_back(RationalSplit::trusted(empty, p.numerator(), {}));
    strings.push_back(std::move(row));
  }
  return Seed(hat_, std::move(vars), std::move(strings), empty);
}

bool operator==(const PullbackSeed& a, const PullbackSeed& b) {
  return a.base_ == b.base_ && a.hat_ == b.hat_ && a.vars_ == b.vars_ && a.strings_ == b.strings_ &&
         same_dist(a.dist_, b.dist_) && a.vertex_of_k_ == b.vertex_of_k_ && a.convention_ == b.convention_;
}

int discrepancy(const PullbackSeed& ps, std::size_t k, int m) {
  const auto& q = ps.base_quiver();
  if (!q.is_mutable(m)) throw DomainError("discrepancy at frozen vertex");
  const int kv = ps.vertex_of(k);
  const int d = q.multiplicity(m);
  int delta = 0;
  for (int l = 0; l < q.size(); ++l) {
    if (l == m || l == kv) continue;
    const int lam = ps.lambda(k, l);
    const int w = q.is_mutable(l) ? d : 1;
    delta += w * (q.arrows(l, m) - q.arrows(m, l)) * lam;
  }
  return delta;
}

PullbackSeed build_pullback_seed(const Seed& seed, const AmbientMap& map, ArrowConvention convention) {
  if (!same_table(seed.ambient(), map.target())) throw StructuralError("seed does not live on the map's target");
  if (!same_dist(seed.dist(), map.target_g()))
    throw StructuralError("seed's distinguished polynomials are not covered by the map's G images");
  const auto& K = map.k_set();
  const int s = seed.quiver().size();
  const int nh = static_cast<int>(map.h_count());
  std::vector<RationalSplit> vars;
  for (const auto& f : seed.vars()) vars.push_back(pull_variable(f, map));
  std::vector<int> vertex_of_k;
  for (std::size_t i = 0; i < map.g_count(); ++i) vertex_of_k.push_back(seed.vertex_of(i));
  for (int j = 0; j < nh; ++j) {
    vars.push_back(RationalSplit::q_power(K, map.g_count() + static_cast<std::size_t>(j), 1));
    vertex_of_k.push_back(s + j);
  }
  ExchangeStrings strings;
  for (const auto& row : seed.strings()) {
    std::vector<RationalSplit> pulled;
    for (const auto& p : row) pulled.push_back(pull_variable(p, map));
    strings.push_back(std::move(pulled));
  }
  return PullbackSeed(seed.quiver().with_frozen(nh), std::move(vars), std::move(strings), K,
                      std::move(vertex_of_k), static_cast<std::size_t>(s), convention);
}

bool CoherenceReport::coherent() const {
  return std::all_of(entries.begin(), entries.end(), [](const CoherenceEntry& e) { return e.coherent; });
}

std::vector<RationalSplit> lifted_terms(const PullbackSeed& ps, int m) {
  const auto& q = ps.base_quiver();
  if (!q.is_mutable(m)) throw DomainError("exchange relation at frozen vertex " + std::to_string(m + 1));
  std::vector<RationalSplit> terms;
  for (int r = 0; r <= q.multiplicity(m); ++r) {
    auto e = exchange_exponents(q, m, r);
    RationalSplit t = ps.string(m)[static_cast<std::size_t>(r)];
    for (int l = 0; l < q.size(); ++l)
      if (int x = e[static_cast<std::size_t>(l)]; x > 0) t = t * ps.var(l).pow(static_cast<unsigned>(x));
    terms.push_back(std::move(t));
  }
  return terms;
}

CoherenceEntry coherence_check(const PullbackSeed& ps, int m) {
  auto terms = lifted_terms(ps, m);
  const auto& D = *ps.dist();
  const std::size_t nk = D.size();
  CoherenceEntry entry;
  entry.m = m;
  entry.top.assign(nk, 0);
  for (std::size_t k = 0; k < nk; ++k) {
    int top = terms.front().lambda(k);
    for (const auto& t : terms) top = std::max(top, t.lambda(k));
    entry.top[k] = top;
  }
  Poly sum(ps.ambient());
  for (const auto& t : terms) {
    Poly num = t.numerator();
    for (std::size_t k = 0; k < nk; ++k)
      if (int s = entry.top[k] - t.lambda(k); s > 0) num *= D.power(k, static_cast<unsigned>(s));
    sum += num;
  }
  if (sum.is_zero()) throw InternalError("lifted exchange polynomial vanishes");
  entry.exponents.assign(nk, 0);
  for (std::size_t k = 0; k < nk; ++k) {
    entry.exponents[k] = -static_cast<int>(valuation(sum, D.poly(k)).k);
    if (entry.exponents[k] != 0) entry.coherent = false;
  }
  entry.monomial = entry.exponents;
  entry.evaluation = std::move(sum);
  return entry;
}

CoherenceReport coherence_report(const PullbackSeed& ps) {
  CoherenceReport report;
  for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) report.entries.push_back(coherence_check(ps, m));
  return report;
}

namespace {

std::string incoherent_message(const CoherenceEntry& e, const DistinguishedSet& D) {
  std::ostringstream os;
  os << "lifted relation at vertex " << e.m + 1 << " is not coherent: M =";
  for (std::size_t k = 0; k < e.exponents.size(); ++k)
    if (e.exponents[k] != 0) os << ' ' << D.entry(k).label << '^' << e.exponents[k];
  return os.str();
}

}  // namespace

std::vector<LiftedTerm> pullback_exchange(const PullbackSeed& ps, int m) {
  auto entry = coherence_check(ps, m);
  if (!entry.coherent) throw CoherenceError(incoherent_message(entry, *ps.dist()), entry);
  std::vector<LiftedTerm> out;
  for (const auto& t : lifted_terms(ps, m)) {
    LiftedTerm lt{t.numerator(), {}};
    for (std::size_t k = 0; k < entry.top.size(); ++k) lt.mu.push_back(entry.top[k] - t.lambda(k));
    out.push_back(std::move(lt));
  }
  return out;
}

PullbackSeed mutate_pullback(const PullbackSeed& ps, int m) {
  const auto& q = ps.base_quiver();
  if (!q.is_mutable(m)) throw DomainError("cannot mutate at frozen or out-of-range vertex " + std::to_string(m + 1));
  auto entry = coherence_check(ps, m);
  if (!entry.coherent) throw CoherenceError(incoherent_message(entry, *ps.dist()), entry);
  auto quotient = try_div_exact(*entry.evaluation, ps.hat(m));
  if (!quotient) throw InternalError("coherent lifted relation does not divide by the hat variable");
  for (std::size_t k = 0; k < ps.dist()->size(); ++k)
    if (try_div_exact(*quotient, ps.dist()->poly(k)))
      throw InternalError("mutated hat variable is divisible by a distinguished polynomial");
  std::vector<int> lam;
  for (std::size_t k = 0; k < entry.top.size(); ++k) lam.push_back(entry.top[k] - ps.lambda(k, m));
  std::vector<RationalSplit> vars = ps.vars();
  vars[static_cast<std::size_t>(m)] = RationalSplit::trusted(ps.dist(), std::move(*quotient), std::move(lam));
  ExchangeStrings strings = ps.strings();
  auto& s = strings[static_cast<std::size_t>(m)];
  std::reverse(s.begin(), s.end());
  return PullbackSeed(quiver_mutate(q, m), std::move(vars), std::move(strings), ps.dist(),
                      ps.distinguished_vertices(), ps.original_size(), ps.convention());
}

std::string pullback_key(const PullbackSeed& ps) {
  std::ostringstream os;
  for (const auto& v : ps.vars()) os << v.to_string() << '|';
  os << quiver_key(ps.base_quiver()) << '|';
  for (const auto& s : ps.strings())
    for (const auto& p : s) os << p.to_string() << ';';
  return os.str();
}

PullbackGraph explore_pullback(const PullbackSeed& ps, int max_depth, std::size_t max_seeds) {
  if (max_depth < 0 || max_seeds == 0) throw DomainError("exploration bounds must be positive");
  return explore_states<PullbackSeed>(ps, max_depth, max_seeds, ps.base_quiver().mutable_count(), mutate_pullback,
                                      pullback_key);
}

}  // namespace gcluster
