#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcluster/cluster.hpp"
#include "gcluster/hull.hpp"

namespace gcluster {

// Psi^* y = numerator * prod_j h_j^(-kappa_j).
struct CoordinateImage {
  Poly numerator;
  std::vector<int> kappa;
};

// Dominant rational map Psi from the source space to the target space.
class AmbientMap {
 public:
  // h_entries are the H-type polynomials over the source; target_g the G-type set of the target
  // seed. The full set K lists the G images (numerators of Psi^* g_i) first, then H.
  static AmbientMap create(VarTablePtr source, VarTablePtr target, std::vector<DistinguishedEntry> h_entries,
                           std::vector<CoordinateImage> images, DistSetPtr target_g);
  // Psi = id on a table shared by source and target.
  static AmbientMap identity(VarTablePtr table, DistSetPtr target_g);

  const VarTablePtr& source() const noexcept { return source_; }
  const VarTablePtr& target() const noexcept { return target_; }
  const DistSetPtr& target_g() const noexcept { return target_g_; }
  const DistSetPtr& h_set() const noexcept { return h_set_; }
  const DistSetPtr& k_set() const noexcept { return k_set_; }
  std::size_t g_count() const noexcept { return target_g_->size(); }
  std::size_t h_count() const noexcept { return h_set_->size(); }
  const CoordinateImage& raw_image(std::size_t y) const { return raw_.at(y); }
  const std::vector<CoordinateImage>& raw_images() const noexcept { return raw_; }
  // Psi^* y over K.
  const RationalSplit& image(std::size_t y) const { return *images_k_.at(y); }
  // Psi^* g_i over K: (1, lambda_i = -1, lambda_j = kappa_j(g_i)).
  const RationalSplit& g_image(std::size_t i) const { return g_images_.at(i); }

 private:
  AmbientMap() = default;

  VarTablePtr source_;
  VarTablePtr target_;
  DistSetPtr target_g_;
  DistSetPtr h_set_;
  DistSetPtr k_set_;
  std::vector<CoordinateImage> raw_;
  std::vector<std::optional<RationalSplit>> images_k_;
  std::vector<RationalSplit> g_images_;
};

// Psi^* f as a split over K.
RationalSplit pull_variable(const RationalSplit& f, const AmbientMap& map);

// Default follows "mu(0) arrows from k to m and mu(d) arrows from m to k";
// kMirrored swaps the two bundles, matching the direction labels of the worked examples.
enum class ArrowConvention { kStandard, kMirrored };

class PullbackSeed {
 public:
  // base: plain quiver extended by the new frozen vertices; vars: Psi^* f_l over K;
  // vertex_of_k: vertex carrying q_k.
  PullbackSeed(MultiQuiver base, std::vector<RationalSplit> vars, ExchangeStrings strings, DistSetPtr dist,
               std::vector<int> vertex_of_k, std::size_t original_size,
               ArrowConvention convention = ArrowConvention::kStandard);

  const MultiQuiver& base_quiver() const noexcept { return base_; }
  // Pullback quiver: base arrows with the k<->m bundles recomputed.
  const MultiQuiver& quiver() const noexcept { return hat_; }
  const RationalSplit& var(int v) const { return vars_.at(static_cast<std::size_t>(v)); }
  const std::vector<RationalSplit>& vars() const noexcept { return vars_; }
  const Poly& hat(int v) const { return var(v).numerator(); }
  // q_k at distinguished vertices, the hat variable elsewhere.
  Poly cluster_poly(int v) const;
  int lambda(std::size_t k, int v) const { return var(v).lambda(k); }
  const std::vector<RationalSplit>& string(int m) const { return strings_.at(static_cast<std::size_t>(m)); }
  const ExchangeStrings& strings() const noexcept { return strings_; }
  const DistSetPtr& dist() const noexcept { return dist_; }
  const VarTablePtr& ambient() const { return dist_->vars(); }
  int vertex_of(std::size_t k) const { return vertex_of_k_.at(k); }
  const std::vector<int>& distinguished_vertices() const noexcept { return vertex_of_k_; }
  std::optional<std::size_t> dist_index(int v) const;
  std::size_t original_size() const noexcept { return original_size_; }
  ArrowConvention convention() const noexcept { return convention_; }
  PullbackSeed with_convention(ArrowConvention c) const;
  // (mu(0), mu(d)) carried by the k<->m bundles.
  MuPair arrow_pair(std::size_t k, int m) const;

  // Forgets lambda: plain seed over the source with the hat variables and pullback quiver.
  Seed to_seed() const;

  friend bool operator==(const PullbackSeed& a, const PullbackSeed& b);

 private:
  void rebuild_hat();

  MultiQuiver base_;
  MultiQuiver hat_;
  std::vector<RationalSplit> vars_;
  ExchangeStrings strings_;
  DistSetPtr dist_;
  std::vector<int> vertex_of_k_;
  std::size_t original_size_;
  ArrowConvention convention_;
  std::vector<std::vector<MuPair>> pairs_;
};

int discrepancy(const PullbackSeed& ps, std::size_t k, int m);

PullbackSeed build_pullback_seed(const Seed& seed, const AmbientMap& map,
                                 ArrowConvention convention = ArrowConvention::kStandard);

struct CoherenceEntry {
  int m = 0;
  // lambda_k of the evaluated lifted right-hand side; coherent iff all zero.
  std::vector<int> exponents;
  // Laurent monomial M = prod q_k^(m_k) of the coherence condition, as exponents.
  std::vector<int> monomial;
  // Lambda_k(P_m) = max_r lambda_k(T_r).
  std::vector<int> top;
  std::optional<Poly> evaluation;
  bool coherent = true;
};

struct CoherenceReport {
  std::vector<CoherenceEntry> entries;
  bool coherent() const;
};

class CoherenceError : public std::runtime_error {
 public:
  CoherenceError(const std::string& what, CoherenceEntry entry)
      : std::runtime_error(what), entry_(std::move(entry)) {}
  const CoherenceEntry& entry() const noexcept { return entry_; }

 private:
  CoherenceEntry entry_;
};

// T_r = p_{mr} * prod Psi^*f_l^e as splits over K.
std::vector<RationalSplit> lifted_terms(const PullbackSeed& ps, int m);

CoherenceEntry coherence_check(const PullbackSeed& ps, int m);
CoherenceReport coherence_report(const PullbackSeed& ps);

struct LiftedTerm {
  Poly hat;
  std::vector<int> mu;
};

// f^_m f^'_m = sum_r hat T_r prod q_k^mu_k(r). Throws CoherenceError when incoherent at m.
std::vector<LiftedTerm> pullback_exchange(const PullbackSeed& ps, int m);

PullbackSeed mutate_pullback(const PullbackSeed& ps, int m);

std::string pullback_key(const PullbackSeed& ps);

using PullbackGraph = Graph<PullbackSeed>;
PullbackGraph explore_pullback(const PullbackSeed& ps, int max_depth, std::size_t max_seeds);

}  // namespace gcluster
