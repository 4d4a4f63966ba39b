#include "gcluster/hull.hpp"

#include <algorithm>

#include "gcluster/cluster.hpp"
#include "gcluster/pullback.hpp"

namespace gcluster {

namespace {

Rational frac(const Rational& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace

bool MuPair::is_arrow_data() const { return is_integer(mu0) && is_integer(mud) && mu0 >= 0 && mud >= 0; }

HullProfile compute_profile(const MultiQuiver& q, const std::vector<int>& vertex_lambda,
                            const std::vector<int>& string_lambda, std::size_t k, int m) {
  if (!q.is_mutable(m)) throw DomainError("hull profile at frozen vertex " + std::to_string(m + 1));
  const int d = q.multiplicity(m);
  if (static_cast<int>(string_lambda.size()) != d + 1) throw StructuralError("string length mismatch");
  HullProfile p;
  p.d = d;
  p.k = k;
  p.m = m;
  p.tau = 0;
  p.sigma = 0;
  p.chi.assign(static_cast<std::size_t>(d + 1), Rational(0));
  for (int r = 0; r <= d; ++r) p.chi[static_cast<std::size_t>(r)] = string_lambda[static_cast<std::size_t>(r)];
  for (int l = 0; l < q.size(); ++l) {
    if (l == m) continue;
    const int lam = vertex_lambda.at(static_cast<std::size_t>(l));
    if (lam == 0) continue;
    const int out = q.arrows(m, l), in = q.arrows(l, m);
    if (q.is_mutable(l)) {
      p.tau += (out - in) * lam;
      p.sigma += d * in * lam;
    } else {
      p.tau += Rational(out - in, d) * lam;
      p.sigma += in * lam;
      for (int r = 0; r <= d; ++r)
        p.chi[static_cast<std::size_t>(r)] -=
            (frac(Rational(r * out, d)) + frac(Rational((d - r) * in, d))) * lam;
    }
  }
  for (auto& c : p.chi) c.canonicalize();
  p.tau.canonicalize();
  return p;
}

HullProfile make_profile(std::vector<Rational> chi, Rational tau, Rational sigma) {
  if (chi.size() < 2) throw DomainError("profile needs d >= 1");
  if (chi.front() != 0 || chi.back() != 0) throw DomainError("chi must vanish at both endpoints");
  HullProfile p;
  p.d = static_cast<int>(chi.size()) - 1;
  p.chi = std::move(chi);
  p.tau = std::move(tau);
  p.sigma = std::move(sigma);
  return p;
}

std::vector<Rational> term_lambdas(const HullProfile& p) {
  std::vector<Rational> out;
  for (int r = 0; r <= p.d; ++r) out.push_back(p.chi[static_cast<std::size_t>(r)] + p.tau * r + p.sigma);
  return out;
}

std::vector<Rational> mu_vector(const HullProfile& p, const MuPair& pair) {
  std::vector<Rational> out;
  for (int r = 0; r <= p.d; ++r) {
    Rational v = -p.chi[static_cast<std::size_t>(r)] + Rational(r) * (pair.mud - pair.mu0) / p.d + pair.mu0;
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

MuPair support_arrows(const HullProfile& p, const Rational& slope) {
  Rational best = p.chi[0];
  for (int r = 1; r <= p.d; ++r) best = std::max(best, Rational(p.chi[static_cast<std::size_t>(r)] - slope * r));
  MuPair out{best, best + slope * p.d};
  out.mu0.canonicalize();
  out.mud.canonicalize();
  return out;
}

MuPair natural_pair(const HullProfile& p) { return support_arrows(p, -p.tau); }

std::vector<std::pair<int, Rational>> upper_hull(const HullProfile& p) {
  std::vector<std::pair<int, Rational>> hull;
  for (int r = 0; r <= p.d; ++r) {
    const Rational& y = p.chi[static_cast<std::size_t>(r)];
    while (hull.size() >= 2) {
      const auto& [x0, y0] = hull[hull.size() - 2];
      const auto& [x1, y1] = hull.back();
      Rational cross = Rational(x1 - x0) * (y - y0) - (y1 - y0) * Rational(r - x0);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.emplace_back(r, y);
  }
  return hull;
}

std::vector<int> touch_points(const HullProfile& p, const Rational& slope) {
  MuPair pair = support_arrows(p, slope);
  std::vector<int> out;
  for (int r = 0; r <= p.d; ++r)
    if (p.chi[static_cast<std::size_t>(r)] - slope * r == pair.mu0) out.push_back(r);
  return out;
}

namespace {

Rational updated_difference(const HullProfile& at_m, const MuPair& current, NeighborArrows link,
                            const MuPair& neighbor) {
  if (link.out > 0 && link.in > 0) throw DomainError("arrows in both directions between mutable vertices");
  Rational diff = current.mud - current.mu0;
  if (link.out > 0) diff += Rational(at_m.d * link.out) * neighbor.mud;
  else if (link.in > 0) diff -= Rational(at_m.d * link.in) * neighbor.mu0;
  return diff;
}

}  // namespace

MuPair mutate_mu(const HullProfile& at_m, const MuPair& current, NeighborArrows link, const MuPair& neighbor) {
  Rational diff = updated_difference(at_m, current, link, neighbor);
  return support_arrows(at_m, diff / at_m.d);
}

bool delta_hypothesis_holds(const HullProfile& p, const Rational& h) {
  if (!is_integer(p.tau)) return false;
  Rational top = 0;
  for (const auto& c : p.chi) top = std::max(top, c);
  if (top != h) return false;
  Rational bound = 0;
  for (const auto& c : p.chi) bound = std::max(bound, Rational(abs(c)));
  mpz_class b;
  mpz_cdiv_q(b.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  const long lim = b.get_si() + 1;
  for (long s = -lim; s <= lim; ++s) {
    if (s == 0) continue;
    auto t = touch_points(p, Rational(s));
    if (std::find(t.begin(), t.end(), 0) == t.end() && std::find(t.begin(), t.end(), p.d) == t.end()) return false;
  }
  return true;
}

MuPair delta_update(const HullProfile& at_m, const MuPair& current, NeighborArrows link, const MuPair& neighbor,
                    const Rational& h) {
  if (!delta_hypothesis_holds(at_m, h))
    throw NotApplicable("endpoint-line hypothesis fails for this profile; use mutate_mu");
  Rational delta = -updated_difference(at_m, current, link, neighbor);
  if (delta == 0) return {h, h};
  if (delta > 0) return {delta, 0};
  return {0, -delta};
}

HullProfile compute_profile(const PullbackSeed& ps, std::size_t k, int m) {
  std::vector<int> vertex_lambda;
  for (int l = 0; l < ps.base_quiver().size(); ++l) vertex_lambda.push_back(ps.lambda(k, l));
  std::vector<int> string_lambda;
  for (const auto& p : ps.string(m)) string_lambda.push_back(p.lambda(k));
  return compute_profile(ps.base_quiver(), vertex_lambda, string_lambda, k, m);
}

}  // namespace gcluster
