#include "gcluster/verify.hpp"

#include <algorithm>
#include <random>

namespace gcluster {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kIndependent: return "independent";
    case Verdict::kDependentSuspected: return "dependent-suspected";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kPaper: return "PAPER";
    case Provenance::kDerived: return "DERIVED";
    case Provenance::kTrivial: return "TRIVIAL";
  }
  return "?";
}

namespace {

// Restriction t -> p(base + t*dir) as a dense univariate polynomial.
modp::UPoly restrict_to_line(const modp::Field& F, const Poly& p, const std::vector<std::uint64_t>& base,
                             const std::vector<std::uint64_t>& dir) {
  const std::uint32_t deg = p.total_degree();
  std::vector<std::uint64_t> xs, ys;
  std::vector<std::uint64_t> pt(base.size());
  for (std::uint32_t t = 0; t <= deg; ++t) {
    for (std::size_t i = 0; i < base.size(); ++i) pt[i] = F.add(base[i], F.mul(t, dir[i]));
    xs.push_back(t);
    ys.push_back(eval_mod_p(p, pt, F.p()));
  }
  return modp::interpolate(F, xs, ys);
}

}  // namespace

IndependenceReport independence_on_hypersurface(const std::vector<Poly>& family, const Poly& q,
                                                const IndependenceOptions& opt) {
  if (family.empty()) throw DomainError("independence test needs a nonempty family");
  if (q.is_constant()) throw DomainError("hypersurface polynomial must be nonconstant");
  for (const auto& f : family)
    if (!same_table(f.vars(), q.vars())) throw StructuralError("family and hypersurface over different tables");
  if (!modp::is_prime(opt.prime)) throw DomainError("modulus is not prime");
  modp::Field F(opt.prime);
  std::mt19937_64 rng(opt.rng_seed);
  const std::size_t n = q.vars()->arity();
  IndependenceReport report;
  report.family_size = family.size();
  report.prime = opt.prime;

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i)
    if (q.degree_in(i) > 0) candidates.push_back(i);
  std::vector<Poly> all(family);
  all.push_back(q);
  std::vector<std::vector<Poly>> grads;
  for (const auto& f : all) {
    std::vector<Poly> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(partial_derivative(f, i));
    grads.push_back(std::move(g));
  }

  const int max_attempts = std::max(1, opt.trials) * 32;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(report.samples) < opt.trials; ++attempt) {
    std::size_t v = candidates[rng() % candidates.size()];
    std::vector<std::uint64_t> pt(n);
    for (auto& x : pt) x = F.random(rng);
    std::vector<std::uint64_t> dir(n, 0);
    dir[v] = 1;
    pt[v] = 0;
    modp::UPoly u = restrict_to_line(F, q, pt, dir);
    if (u.empty()) {
      pt[v] = F.random(rng);
    } else {
      auto rts = modp::roots(F, u, rng);
      if (rts.empty()) continue;
      pt[v] = rts[rng() % rts.size()];
    }
    ++report.samples;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& g : grads) {
      std::vector<std::uint64_t> row;
      for (const auto& d : g) row.push_back(eval_mod_p(d, pt, F.p()));
      rows.push_back(std::move(row));
    }
    report.rank = std::max(report.rank, modp::rank(F, std::move(rows)));
    if (report.rank == all.size()) {
      report.verdict = Verdict::kIndependent;
      return report;
    }
  }
  report.verdict = report.samples == 0 ? Verdict::kInconclusive : Verdict::kDependentSuspected;
  return report;
}

IndependenceReport independence_for_pullback(const PullbackSeed& ps, std::size_t k, const IndependenceOptions& opt) {
  if (k >= ps.dist()->size()) throw DomainError("distinguished index out of range");
  std::vector<Poly> family;
  for (int v = 0; v < ps.quiver().size(); ++v)
    if (v != ps.vertex_of(k)) family.push_back(ps.cluster_poly(v));
  auto report = independence_on_hypersurface(family, ps.dist()->poly(k), opt);
  report.k = k;
  return report;
}

bool CoprimeReport::coprime() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const CoprimePair& p) { return p.coprime; });
}

CoprimeReport coprime_check(const std::vector<Poly>& polys, int lines, const IndependenceOptions& opt) {
  CoprimeReport report;
  if (polys.empty()) return report;
  modp::Field F(opt.prime);
  std::mt19937_64 rng(opt.rng_seed);
  const std::size_t n = polys.front().vars()->arity();
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = a + 1; b < polys.size(); ++b) {
      bool coprime = false;
      for (int l = 0; l < lines && !coprime; ++l) {
        std::vector<std::uint64_t> base(n), dir(n);
        for (auto& x : base) x = F.random(rng);
        for (auto& x : dir) x = F.random(rng);
        auto g = modp::gcd(F, restrict_to_line(F, polys[a], base, dir), restrict_to_line(F, polys[b], base, dir));
        coprime = modp::degree(g) == 0;
      }
      report.pairs.push_back({static_cast<int>(a), static_cast<int>(b), coprime});
    }
  return report;
}

std::vector<Poly> formal_exchange_polynomials(const Seed& seed) {
  const auto& q = seed.quiver();
  std::vector<std::string> names;
  for (int v = 0; v < q.size(); ++v) names.push_back("f" + std::to_string(v + 1));
  std::vector<std::pair<int, int>> symbolic;
  for (int m = 0; m < q.mutable_count(); ++m)
    for (int r = 0; r <= q.multiplicity(m); ++r) {
      const auto& p = seed.string(m)[static_cast<std::size_t>(r)];
      if (!p.numerator().is_constant() || std::any_of(p.lambda().begin(), p.lambda().end(), [](int l) { return l; })) {
        names.push_back("p" + std::to_string(m + 1) + "_" + std::to_string(r));
        symbolic.emplace_back(m, r);
      }
    }
  auto table = make_var_table(names);
  std::vector<Poly> out;
  for (int m = 0; m < q.mutable_count(); ++m) {
    Poly P(table);
    for (int r = 0; r <= q.multiplicity(m); ++r) {
      auto e = exchange_exponents(q, m, r);
      std::vector<std::uint32_t> exps(names.size(), 0);
      for (int l = 0; l < q.size(); ++l) exps[static_cast<std::size_t>(l)] = static_cast<std::uint32_t>(e[static_cast<std::size_t>(l)]);
      Rational c = 1;
      auto it = std::find(symbolic.begin(), symbolic.end(), std::make_pair(m, r));
      if (it != symbolic.end())
        exps[static_cast<std::size_t>(q.size()) + static_cast<std::size_t>(it - symbolic.begin())] = 1;
      else
        c = *seed.string(m)[static_cast<std::size_t>(r)].numerator().constant_value();
      P += Poly::monomial(table, Monomial(exps), c);
    }
    out.push_back(std::move(P));
  }
  return out;
}

CoprimeReport coprime_seed_check(const Seed& seed, int lines, const IndependenceOptions& opt) {
  return coprime_check(formal_exchange_polynomials(seed), lines, opt);
}

bool verify_laurent_certificate(const LaurentCertificate& cert) {
  const Seed& seed = cert.seed;
  const auto& q = seed.quiver();
  const std::size_t s = static_cast<std::size_t>(q.size());
  if (!same_table(cert.target.vars(), seed.ambient())) return false;
  std::vector<Poly> A, B;
  for (const auto& v : seed.vars()) {
    A.push_back(v.value_numerator());
    B.push_back(v.value_denominator());
  }
  std::vector<unsigned> pos(s, 0), neg(s, 0);
  for (const auto& t : cert.terms) {
    if (t.exponents.size() != s) return false;
    for (std::size_t l = 0; l < s; ++l) {
      int e = t.exponents[l];
      if (cert.frozen_nonneg && !q.is_mutable(static_cast<int>(l)) && e < 0) return false;
      if (e > 0) pos[l] = std::max(pos[l], static_cast<unsigned>(e));
      if (e < 0) neg[l] = std::max(neg[l], static_cast<unsigned>(-e));
    }
  }
  Poly common = Poly::constant(seed.ambient(), 1);
  for (std::size_t l = 0; l < s; ++l) common *= B[l].pow(pos[l]) * A[l].pow(neg[l]);
  Poly lhs(seed.ambient());
  for (const auto& t : cert.terms) {
    Poly term = Poly::constant(seed.ambient(), t.coeff);
    for (std::size_t l = 0; l < s; ++l) {
      int e = t.exponents[l];
      unsigned ep = e > 0 ? static_cast<unsigned>(e) : 0u, en = e < 0 ? static_cast<unsigned>(-e) : 0u;
      unsigned a_exp = ep + neg[l] - en, b_exp = en + pos[l] - ep;
      if (a_exp) term *= A[l].pow(a_exp);
      if (b_exp) term *= B[l].pow(b_exp);
    }
    lhs += term;
  }
  return lhs == cert.target * common;
}

bool FixtureReport::pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const AssertionResult& a) { return a.pass; });
}

}  // namespace gcluster
