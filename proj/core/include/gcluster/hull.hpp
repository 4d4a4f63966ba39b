#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gcluster/polyring.hpp"

namespace gcluster {

class MultiQuiver;
class PullbackSeed;

// lambda_k(T_r) = chi(r) + tau*r + sigma for r = 0..d.
struct HullProfile {
  int d = 1;
  std::vector<Rational> chi;
  Rational tau;
  Rational sigma;
  std::size_t k = 0;
  int m = 0;
};

struct MuPair {
  Rational mu0;
  Rational mud;

  // Both ordinates non-negative integers, i.e. usable as arrow counts.
  bool is_arrow_data() const;
  friend bool operator==(const MuPair& a, const MuPair& b) { return a.mu0 == b.mu0 && a.mud == b.mud; }
};

// Profile from raw data: lambda_k of every vertex variable and of the string at m.
HullProfile compute_profile(const MultiQuiver& q, const std::vector<int>& vertex_lambda,
                            const std::vector<int>& string_lambda, std::size_t k, int m);
HullProfile compute_profile(const PullbackSeed& ps, std::size_t k, int m);
// Profile with explicit chi (chi(0) = chi(d) = 0 enforced).
HullProfile make_profile(std::vector<Rational> chi, Rational tau = 0, Rational sigma = 0);

// lambda_k(T_r) reconstructed from the profile.
std::vector<Rational> term_lambdas(const HullProfile& p);

std::vector<Rational> mu_vector(const HullProfile& p, const MuPair& pair);

// Ordinates at r = 0 and r = d of the support line with the given slope.
MuPair support_arrows(const HullProfile& p, const Rational& slope);
// Pair realised by the profile's own data: slope -tau.
MuPair natural_pair(const HullProfile& p);

std::vector<std::pair<int, Rational>> upper_hull(const HullProfile& p);
// Indices r where the support line of the given slope meets (r, chi(r)).
std::vector<int> touch_points(const HullProfile& p, const Rational& slope);

// Arrows between m and a mutable neighbour i: out = b[m][i], in = b[i][m].
struct NeighborArrows {
  int out = 0;
  int in = 0;
};

// Pair at (k, m) after mutating at a neighbour i != m, predicted from the pair at (k, i).
MuPair mutate_mu(const HullProfile& at_m, const MuPair& current, NeighborArrows link, const MuPair& neighbor);

// Shortcut valid when tau is integral and every integer-slope support line passes
// through an endpoint except the horizontal one at height h. Throws NotApplicable otherwise.
MuPair delta_update(const HullProfile& at_m, const MuPair& current, NeighborArrows link, const MuPair& neighbor,
                    const Rational& h);

bool delta_hypothesis_holds(const HullProfile& p, const Rational& h);

}  // namespace gcluster
