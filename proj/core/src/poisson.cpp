#include "gcluster/poisson.hpp"

#include <random>

#include "gcluster/modp.hpp"

namespace gcluster {

PoissonStructure::PoissonStructure(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw StructuralError("bracket without variable table");
}

void PoissonStructure::set(std::size_t i, std::size_t j, const Poly& value) {
  if (i >= dim() || j >= dim() || i == j) throw DomainError("bracket index out of range");
  if (!same_table(value.vars(), vars_)) throw StructuralError("bracket entry over a different table");
  Poly v = i < j ? value : -value;
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  if (v.is_zero())
    omega_.erase(key);
  else
    omega_.insert_or_assign(key, std::move(v));
}

Poly PoissonStructure::omega(std::size_t i, std::size_t j) const {
  if (i == j) return Poly(vars_);
  auto it = omega_.find({std::min(i, j), std::max(i, j)});
  if (it == omega_.end()) return Poly(vars_);
  return i < j ? it->second : -it->second;
}

Poly bracket(const PoissonStructure& p, const Poly& f, const Poly& g) {
  if (!same_table(f.vars(), p.vars()) || !same_table(g.vars(), p.vars()))
    throw StructuralError("bracket arguments over a different table");
  Poly out(p.vars());
  if (f.is_constant() || g.is_constant()) return out;
  std::vector<std::optional<Poly>> df(p.dim()), dg(p.dim());
  auto d = [](std::vector<std::optional<Poly>>& cache, const Poly& h, std::size_t i) -> const Poly& {
    if (!cache[i]) cache[i] = partial_derivative(h, i);
    return *cache[i];
  };
  for (const auto& [ij, w] : p.entries()) {
    auto [i, j] = ij;
    Poly term = d(df, f, i) * d(dg, g, j) - d(df, f, j) * d(dg, g, i);
    if (!term.is_zero()) out += w * term;
  }
  return out;
}

RatFunc RatFunc::of(const Poly& p) { return {p, Poly::constant(p.vars(), 1)}; }

RatFunc RatFunc::of(const RationalSplit& s) { return {s.value_numerator(), s.value_denominator()}; }

RatFunc RatFunc::inverse() const {
  if (num.is_zero()) throw DivisionByZero("inverse of zero");
  return {den, num};
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num.pow(static_cast<unsigned>(e)), den.pow(static_cast<unsigned>(e))};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }

RatFunc bracket_rational(const PoissonStructure& p, const RatFunc& a, const RatFunc& b) {
  const Poly &A = a.num, &B = a.den, &C = b.num, &D = b.den;
  Poly num = bracket(p, A, C) * B * D - A * bracket(p, B, C) * D - C * bracket(p, A, D) * B +
             A * C * bracket(p, B, D);
  return {std::move(num), (B * D).pow(2)};
}

std::optional<Rational> constant_ratio(const RatFunc& a, const RatFunc& b) {
  Poly x = a.num * b.den;
  Poly y = b.num * a.den;
  if (y.is_zero()) return std::nullopt;
  if (x.is_zero()) return Rational(0);
  auto q = try_div_exact(x, y);
  if (!q) return std::nullopt;
  return q->constant_value();
}

std::optional<std::vector<std::vector<Rational>>> is_log_canonical_family(const PoissonStructure& p,
                                                                          const std::vector<Poly>& funcs) {
  const std::size_t n = funcs.size();
  for (const auto& f : funcs)
    if (f.is_zero()) throw DomainError("log-canonical test on a zero function");
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = constant_ratio(RatFunc::of(bracket(p, funcs[i], funcs[j])), RatFunc::of(funcs[i] * funcs[j]));
      if (!c) return std::nullopt;
      w[i][j] = *c;
      w[j][i] = -*c;
    }
  return w;
}

bool is_casimir(const PoissonStructure& p, const RatFunc& f) {
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (!bracket_rational(p, f, RatFunc::of(Poly::variable(p.vars(), i))).num.is_zero()) return false;
  return true;
}

RatFunc pstar(const Seed& seed, int m, int r) {
  const auto& q = seed.quiver();
  if (!q.is_mutable(m)) throw DomainError("p* at frozen vertex");
  const int d = q.multiplicity(m);
  if (r < 0 || r > d) throw DomainError("p* index out of range");
  RatFunc out = RatFunc::of(Poly::constant(seed.ambient(), 1));
  if (d == 1) return out;
  out = RatFunc::of(seed.string(m)[static_cast<std::size_t>(r)]).pow(d);
  for (int l = q.mutable_count(); l < q.size(); ++l) {
    int e = -((r * q.arrows(m, l)) % d) - (((d - r) * q.arrows(l, m)) % d);
    if (e != 0) out = out * RatFunc::of(seed.var(l)).pow(e);
  }
  return out;
}

bool CompatibilityReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

bool CompatibilityReport::pass(char label) const {
  for (const auto& c : conditions)
    if (c.label == label && !c.pass) return false;
  return true;
}

namespace {

RatFunc y_value(const Seed& seed, int m) {
  auto y = y_variable(seed, m);
  RatFunc t = RatFunc::of(Poly::constant(seed.ambient(), 1));
  for (int l = 0; l < seed.quiver().size(); ++l)
    if (int e = y[static_cast<std::size_t>(l)]) t = t * RatFunc::of(seed.var(l)).pow(e);
  return t;
}

std::string vname(int v) { return "f" + std::to_string(v + 1); }

}  // namespace

CompatibilityReport check_compatibility(const Seed& seed, const PoissonStructure& p) {
  if (!same_table(seed.ambient(), p.vars())) throw StructuralError("seed and bracket live on different spaces");
  CompatibilityReport report;
  const auto& q = seed.quiver();
  for (int m = 0; m < q.mutable_count(); ++m)
    for (int r = 1; r < q.multiplicity(m); ++r)
      report.conditions.push_back({'a', "p*_" + std::to_string(m + 1) + "," + std::to_string(r) + " Casimir",
                                   is_casimir(p, pstar(seed, m, r)), std::nullopt});
  for (int m = 0; m < q.mutable_count(); ++m) {
    RatFunc t = y_value(seed, m);
    RatFunc f = RatFunc::of(seed.var(m));
    auto w = constant_ratio(bracket_rational(p, f, t), f * t);
    report.conditions.push_back({'b', "{" + vname(m) + ", t" + std::to_string(m + 1) + "}", w && *w != 0, w});
    report.omega_m.push_back(w);
    for (int l = 0; l < q.size(); ++l) {
      if (l == m) continue;
      bool zero = bracket_rational(p, RatFunc::of(seed.var(l)), t).num.is_zero();
      report.conditions.push_back({'c', "{" + vname(l) + ", t" + std::to_string(m + 1) + "}", zero, std::nullopt});
    }
  }
  return report;
}

CompatibilityReport check_compatibility(const PullbackSeed& ps, const PoissonStructure& p) {
  Seed plain = ps.to_seed();
  CompatibilityReport report = check_compatibility(plain, p);
  const auto& hs = ps.dist();
  for (std::size_t k = 0; k < hs->size(); ++k) {
    if (hs->entry(k).kind != DistKind::H) continue;
    RatFunc h = RatFunc::of(hs->poly(k));
    for (int m = 0; m < plain.quiver().mutable_count(); ++m) {
      bool zero = bracket_rational(p, h, y_value(plain, m)).num.is_zero();
      report.conditions.push_back(
          {'d', "{" + hs->entry(k).label + ", t~" + std::to_string(m + 1) + "}", zero, std::nullopt});
    }
  }
  std::vector<Poly> family;
  for (int v = 0; v < plain.quiver().size(); ++v) family.push_back(plain.var(v).numerator());
  report.log_canonical = is_log_canonical_family(p, family);
  report.conditions.push_back({'e', "hat variables with H log-canonical", report.log_canonical.has_value(),
                               std::nullopt});
  return report;
}

bool jacobi_spot_check(const PoissonStructure& p, int points, std::uint64_t prime, std::uint64_t rng_seed) {
  const std::size_t n = p.dim();
  modp::Field F(prime == 0 ? modp::kDefaultPrime : prime);
  std::mt19937_64 rng(rng_seed);
  std::vector<std::vector<Poly>> w(n, std::vector<Poly>(n, Poly(p.vars())));
  std::vector<std::vector<std::vector<Poly>>> dw(n);
  for (std::size_t i = 0; i < n; ++i) {
    dw[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      w[i][j] = p.omega(i, j);
      for (std::size_t l = 0; l < n; ++l) dw[i][j].push_back(partial_derivative(w[i][j], l));
    }
  }
  for (int t = 0; t < points; ++t) {
    std::vector<std::uint64_t> pt(n);
    for (auto& x : pt) x = F.random(rng);
    auto ev = [&](const Poly& h) { return eval_mod_p(h, pt, F.p()); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          std::uint64_t s = 0;
          for (std::size_t l = 0; l < n; ++l) {
            s = F.add(s, F.mul(ev(w[i][l]), ev(dw[j][k][l])));
            s = F.add(s, F.mul(ev(w[j][l]), ev(dw[k][i][l])));
            s = F.add(s, F.mul(ev(w[k][l]), ev(dw[i][j][l])));
          }
          if (s != 0) return false;
        }
  }
  return true;
}

}  // namespace gcluster
