#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace gcluster::props {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return "(" + os.str() + ")";
}

// prod v_l^e_l in the field; nullopt when a negative power meets a zero value.
std::optional<std::uint64_t> monomial_mod(const modp::Field& F, const std::vector<std::uint64_t>& v,
                                          const std::vector<int>& e) {
  std::uint64_t out = 1;
  for (std::size_t l = 0; l < e.size(); ++l) {
    if (e[l] == 0) continue;
    if (e[l] < 0 && v[l] == 0) return std::nullopt;
    std::uint64_t b = e[l] < 0 ? F.inv(v[l]) : v[l];
    out = F.mul(out, F.pow(b, static_cast<std::uint64_t>(std::abs(e[l]))));
  }
  return out;
}

std::uint64_t split_mod(const modp::Field& F, const RationalSplit& s, const std::vector<std::uint64_t>& pt,
                        const std::vector<std::uint64_t>& q) {
  std::vector<int> neg;
  for (int l : s.lambda()) neg.push_back(-l);
  auto v = monomial_mod(F, q, neg);
  return F.mul(eval_mod_p(s.numerator(), pt, F.p()), v ? *v : 0);
}

std::vector<int> extreme_ratio(const MultiQuiver& q, int m) {
  auto top = exchange_exponents(q, m, q.multiplicity(m));
  auto bottom = exchange_exponents(q, m, 0);
  for (std::size_t l = 0; l < top.size(); ++l) top[l] -= bottom[l];
  return top;
}

// gc3 variables grow exponentially (4,5,3 already reaches 7366 terms); walks stop at seeds
// carrying a polynomial larger than this.
constexpr std::size_t kTermBudget = 100;

bool within_budget(const PullbackSeed& ps) {
  for (int v = 0; v < ps.base_quiver().size(); ++v)
    if (ps.hat(v).size() > kTermBudget) return false;
  return true;
}

// Upper bound on the term count of the largest expanded exchange term at m.
double relation_cost(const PullbackSeed& ps, int m) {
  const auto& q = ps.base_quiver();
  double worst = 1;
  for (int r = 0; r <= q.multiplicity(m); ++r) {
    double cost = 1;
    auto e = exchange_exponents(q, m, r);
    for (int l = 0; l < q.size(); ++l) cost *= std::pow(static_cast<double>(ps.hat(l).size()), e[static_cast<std::size_t>(l)]);
    worst = std::max(worst, cost);
  }
  return worst;
}

constexpr double kRelationBudget = 2e4;

std::optional<PullbackSeed> try_mutate(const PullbackSeed& ps, int m) {
  if (!within_budget(ps) || relation_cost(ps, m) > kRelationBudget || !coherence_check(ps, m).coherent)
    return std::nullopt;
  try {
    return mutate_pullback(ps, m);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

PullbackSeed random_walk(const PullbackSeed& root, std::mt19937_64& rng, int steps) {
  PullbackSeed cur = root;
  const int n = root.base_quiver().mutable_count();
  for (int s = 0; s < steps; ++s) {
    int m = uniform(rng, 0, n - 1);
    if (auto next = try_mutate(cur, m)) cur = std::move(*next);
  }
  return cur;
}

// Every coherent seed reachable within depth, with the path that reached it.
void for_each_path(const PullbackSeed& root, int depth,
                   const std::function<void(const PullbackSeed&, const std::vector<int>&)>& visit) {
  std::function<void(const PullbackSeed&, std::vector<int>&)> rec = [&](const PullbackSeed& ps, std::vector<int>& path) {
    visit(ps, path);
    if (static_cast<int>(path.size()) == depth) return;
    for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) {
      if (!path.empty() && path.back() == m) continue;
      auto next = try_mutate(ps, m);
      if (!next) continue;
      path.push_back(m);
      rec(*next, path);
      path.pop_back();
    }
  };
  std::vector<int> path;
  rec(root, path);
}

}  // namespace

std::vector<std::pair<std::string, PullbackSeed>> pullback_roots() {
  std::vector<std::pair<std::string, PullbackSeed>> out;
  for (const auto& n : fixture_names()) out.emplace_back(n, fixture(n).pullback());
  Seed second = gl3_second_seed();
  out.emplace_back("gl3_second", build_pullback_seed(second, gl3_second_map(second)));
  out.emplace_back("gc3_standard", fixture("gc3").pullback().with_convention(ArrowConvention::kStandard));
  return out;
}

Poly random_poly(std::mt19937_64& rng, const VarTablePtr& t, int terms, int max_degree) {
  std::vector<Poly::Term> out;
  for (int i = 0; i < terms; ++i) {
    std::vector<std::uint32_t> e(t->arity(), 0);
    int deg = uniform(rng, 0, max_degree);
    for (int j = 0; j < deg; ++j) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(t->arity()) - 1))];
    int c = uniform(rng, -4, 4);
    Rational coeff(c == 0 ? 1 : c, uniform(rng, 1, 3));
    coeff.canonicalize();
    out.push_back({Monomial(e), coeff});
  }
  return Poly::from_terms(t, std::move(out));
}

PropertyResult seed_involution(std::uint64_t rng_seed, std::size_t cases) {
  PropertyResult res{"seed mutation is an involution", 0, 0, {}, cases};
  std::mt19937_64 rng(rng_seed);
  while (res.cases < cases) {
    const int n = uniform(rng, 1, 4), s = n + uniform(rng, 0, 3);
    std::vector<int> d;
    for (int i = 0; i < n; ++i) d.push_back(std::vector<int>{1, 1, 2, 3}[static_cast<std::size_t>(uniform(rng, 0, 3))]);
    MultiQuiver q(n, s, d);
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) {
        if (i >= n) {
          q.set_arrows(i, j, uniform(rng, 0, 1));
          q.set_arrows(j, i, uniform(rng, 0, 1));
        } else if (int c = uniform(rng, -2, 2); c > 0) {
          q.set_arrows(i, j, c);
        } else if (c < 0) {
          q.set_arrows(j, i, -c);
        }
      }
    std::vector<std::string> names;
    for (int i = 0; i < s; ++i) names.push_back("x" + std::to_string(i + 1));
    auto t = make_var_table(names);
    auto dist = empty_dist_set(t);
    std::vector<RationalSplit> vars;
    for (int i = 0; i < s; ++i) vars.push_back(split(Poly::variable(t, static_cast<std::size_t>(i)), dist));
    ExchangeStrings strings = trivial_strings(q, dist);
    for (int m = 0; m < n; ++m)
      for (int r = 1; r < d[static_cast<std::size_t>(m)]; ++r)
        strings[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)] =
            RationalSplit::constant(dist, Rational(uniform(rng, 1, 5)) / uniform(rng, 1, 2));
    const int m = uniform(rng, 0, n - 1);
    vars[static_cast<std::size_t>(m)] = exchange_polynomial(Seed(q, vars, strings, dist), m);
    Seed seed(q, vars, strings, dist);
    ++res.cases;
    try {
      Seed once = mutate_seed(seed, m);
      Seed twice = mutate_seed(once, m);
      if (!once.var(m).is_one() || !(twice == seed))
        res.fail("quiver " + quiver_key(q) + " at " + std::to_string(m + 1) + ": f'' = " + twice.var(m).to_string());
    } catch (const std::exception& e) {
      res.fail("quiver " + quiver_key(q) + " at " + std::to_string(m + 1) + ": " + e.what());
    }
  }
  return res;
}

PropertyResult pullback_involution(std::uint64_t rng_seed, std::size_t cases) {
  PropertyResult res{"pullback seed mutation is an involution", 0, 0, {}, cases};
  std::mt19937_64 rng(rng_seed);
  auto roots = pullback_roots();
  while (res.cases < cases) {
    const auto& [name, root] = roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(roots.size()) - 1))];
    PullbackSeed cur = random_walk(root, rng, uniform(rng, 0, 2));
    const int m = uniform(rng, 0, cur.base_quiver().mutable_count() - 1);
    auto once = try_mutate(cur, m);
    if (!once) continue;
    ++res.cases;
    try {
      if (!(mutate_pullback(*once, m) == cur))
        res.fail(name + ": mutating twice at " + std::to_string(m + 1) + " changed the seed");
    } catch (const std::exception& e) {
      res.fail(name + ": mutation back at " + std::to_string(m + 1) + " failed: " + e.what());
    }
  }
  return res;
}

PropertyResult split_round_trip(std::uint64_t rng_seed, std::size_t cases) {
  PropertyResult res{"split round trip", 0, 0, {}, cases};
  std::mt19937_64 rng(rng_seed);
  auto t = make_var_table({"x1", "x2", "x3", "x4"});
  auto dist = make_dist_set(t, {{"a", DistKind::G, parse_poly("x1 + x2", t)},
                                {"b", DistKind::H, parse_poly("x3 - 2*x4 + 1", t)}});
  while (res.cases < cases) {
    Poly p = random_poly(rng, t, uniform(rng, 1, 4), 3);
    if (p.is_zero() || try_div_exact(p, dist->poly(0)) || try_div_exact(p, dist->poly(1))) continue;
    ++res.cases;
    std::vector<int> e = {uniform(rng, 0, 2), uniform(rng, 0, 2)};
    std::vector<int> l = {uniform(rng, -2, 2), uniform(rng, -2, 2)};
    Poly padded = p * dist->power(0, static_cast<unsigned>(e[0])) * dist->power(1, static_cast<unsigned>(e[1]));
    auto s = RationalSplit::normalize(dist, padded, l);
    std::vector<int> want = {l[0] - e[0], l[1] - e[1]};
    Poly num = p, den = Poly::constant(t, 1);
    for (std::size_t k = 0; k < 2; ++k) {
      if (want[k] < 0) num *= dist->power(k, static_cast<unsigned>(-want[k]));
      else den *= dist->power(k, static_cast<unsigned>(want[k]));
    }
    if (!(s.numerator() == p) || s.lambda() != want)
      res.fail(p.to_string() + ": split gave " + s.to_string());
    else if (!(s.value_numerator() == num) || !(s.value_denominator() == den))
      res.fail(p.to_string() + ": value does not reassemble");
    else if (!(RationalSplit::normalize(dist, s.value_numerator() * s.value_denominator(), {0, 0}) ==
               split(num * den, dist)))
      res.fail(p.to_string() + ": normalize and split disagree");
  }
  return res;
}

PropertyResult exact_division(std::uint64_t rng_seed, std::size_t cases) {
  PropertyResult res{"exact division matches multiplication", 0, 0, {}, cases};
  std::mt19937_64 rng(rng_seed);
  auto t = make_var_table({"x", "y", "z"});
  while (res.cases < cases) {
    Poly a = random_poly(rng, t, uniform(rng, 1, 5), 4);
    Poly b = random_poly(rng, t, uniform(rng, 1, 4), 3);
    if (a.is_zero() || b.is_zero()) continue;
    ++res.cases;
    Poly c = a * b;
    auto q = try_div_exact(c, b);
    if (!q || !(*q == a)) {
      res.fail("(" + c.to_string() + ") / (" + b.to_string() + ") did not return " + a.to_string());
      continue;
    }
    if (!b.is_constant() && try_div_exact(c + Poly::constant(t, 1), b))
      res.fail("(" + c.to_string() + ") + 1 reported divisible by " + b.to_string());
    std::vector<Rational> pt = {Rational(uniform(rng, -5, 5)) / 3, Rational(uniform(rng, -5, 5)) / 2, Rational(uniform(rng, 1, 7))};
    if (evaluate(c, pt) != evaluate(a, pt) * evaluate(b, pt)) res.fail("evaluation of the product disagrees");
  }
  return res;
}

PropertyResult y_variable_pullback(int depth) {
  PropertyResult res{"y-variable pulls back to the pullback quiver's y-variable", 0, 0, {}, 0};
  const modp::Field F(modp::kDefaultPrime);
  std::mt19937_64 rng(7);
  for (const auto& [name, root] : pullback_roots()) {
    for_each_path(root, depth, [&](const PullbackSeed& ps, const std::vector<int>& path) {
      const int size = ps.base_quiver().size();
      const PullbackSeed standard = ps.with_convention(ArrowConvention::kStandard);
      // Two random points; equality of the two sides at both is the check.
      std::vector<std::vector<std::uint64_t>> pulled, hats;
      for (int trial = 0; trial < 2; ++trial) {
        std::vector<std::uint64_t> pt;
        for (std::size_t i = 0; i < ps.ambient()->arity(); ++i) pt.push_back(F.random(rng));
        std::vector<std::uint64_t> q;
        for (std::size_t k = 0; k < ps.dist()->size(); ++k) q.push_back(eval_mod_p(ps.dist()->poly(k), pt, F.p()));
        pulled.emplace_back();
        hats.emplace_back();
        for (int l = 0; l < size; ++l) {
          pulled.back().push_back(split_mod(F, ps.var(l), pt, q));
          hats.back().push_back(eval_mod_p(ps.cluster_poly(l), pt, F.p()));
        }
      }
      for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) {
        ++res.cases;
        auto e = extreme_ratio(ps.base_quiver(), m);
        if (ps.base_quiver().multiplicity(m) == 1 && e != y_variable(ps.base_quiver(), m))
          res.fail(name + ": extreme-term ratio is not the y-variable at " + std::to_string(m + 1));
        // The identity is a statement about the standard arrow convention; mirrored seeds swap the bundles.
        auto eh = extreme_ratio(standard.quiver(), m);
        for (std::size_t trial = 0; trial < pulled.size(); ++trial)
          if (monomial_mod(F, pulled[trial], e) != monomial_mod(F, hats[trial], eh)) {
            res.fail(name + " after " + str(path) + ": mismatch at vertex " + std::to_string(m + 1));
            break;
          }
      }
    });
  }
  return res;
}

PropertyResult chi_parity(int depth) {
  PropertyResult res{"chi is invariant, reversed by each mutation at its own vertex", 0, 0, {}, 0};
  for (const auto& [name, root] : pullback_roots()) {
    std::vector<std::vector<std::vector<Rational>>> initial;
    for (std::size_t k = 0; k < root.dist()->size(); ++k) {
      initial.emplace_back();
      for (int m = 0; m < root.base_quiver().mutable_count(); ++m) initial[k].push_back(compute_profile(root, k, m).chi);
    }
    for_each_path(root, depth, [&](const PullbackSeed& ps, const std::vector<int>& path) {
      for (std::size_t k = 0; k < ps.dist()->size(); ++k)
        for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) {
          ++res.cases;
          auto want = initial[k][static_cast<std::size_t>(m)];
          if (std::count(path.begin(), path.end(), m) % 2) std::reverse(want.begin(), want.end());
          if (compute_profile(ps, k, m).chi != want)
            res.fail(name + " after " + str(path) + ": chi at (" + std::to_string(k) + ", " + std::to_string(m + 1) + ")");
        }
    });
  }
  return res;
}

PropertyResult mu_min_zero(int depth) {
  PropertyResult res{"mu exponents of every coherent relation have minimum zero", 0, 0, {}, 0};
  for (const auto& [name, root] : pullback_roots()) {
    for_each_path(root, depth, [&](const PullbackSeed& ps, const std::vector<int>& path) {
      if (!within_budget(ps)) return;
      for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) {
        if (relation_cost(ps, m) > kRelationBudget || !coherence_check(ps, m).coherent) continue;
        ++res.cases;
        auto terms = pullback_exchange(ps, m);
        for (std::size_t k = 0; k < ps.dist()->size(); ++k) {
          int lo = terms.front().mu[k];
          for (const auto& t : terms) lo = std::min(lo, t.mu[k]);
          if (lo != 0) res.fail(name + " after " + str(path) + ": min mu = " + std::to_string(lo));
        }
      }
    });
  }
  return res;
}

PropertyResult mu_mutation_rule(std::uint64_t rng_seed, std::size_t walks) {
  PropertyResult res{"predicted arrow pairs match recomputation", 0, 0, {}, 200};
  auto check_step = [&](const PullbackSeed& cur, const PullbackSeed& next, int i, const std::string& where) {
    const auto& q = cur.base_quiver();
    for (std::size_t k = 0; k < cur.dist()->size(); ++k)
      for (int m = 0; m < q.mutable_count(); ++m) {
        if (m == i) continue;
        ++res.cases;
        MuPair want = next.arrow_pair(k, m);
        MuPair got = mutate_mu(compute_profile(cur, k, m), cur.arrow_pair(k, m), {q.arrows(m, i), q.arrows(i, m)},
                               cur.arrow_pair(k, i));
        if (!(got == want))
          res.fail(where + ": (" + std::to_string(m + 1) + ") predicted (" + got.mu0.get_str() + ", " +
                   got.mud.get_str() + "), recomputed (" + want.mu0.get_str() + ", " + want.mud.get_str() + ")");
      }
  };
  PullbackSeed cur = fixture("gc3").pullback();
  for (int i : {1, 0, 3, 1}) {
    PullbackSeed next = mutate_pullback(cur, i);
    check_step(cur, next, i, "gc3 walkthrough at " + std::to_string(i + 1));
    cur = next;
  }
  std::mt19937_64 rng(rng_seed);
  const PullbackSeed root = fixture("gc3").pullback();
  for (std::size_t w = 0; w < walks; ++w) {
    cur = root;
    for (int s = 0; s < 4; ++s) {
      int i = uniform(rng, 0, cur.base_quiver().mutable_count() - 1);
      auto next = try_mutate(cur, i);
      if (!next) continue;
      check_step(cur, *next, i, "gc3 walk " + std::to_string(w));
      cur = std::move(*next);
    }
  }
  return res;
}

PropertyResult poisson_identities(std::uint64_t rng_seed, std::size_t cases) {
  PropertyResult res{"bracket is skew and satisfies Leibniz", 0, 0, {}, cases};
  std::mt19937_64 rng(rng_seed);
  auto t = make_var_table({"x1", "x2", "x3", "x4"});
  while (res.cases < cases) {
    PoissonStructure p(t);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (uniform(rng, 0, 2)) p.set(i, j, random_poly(rng, t, uniform(rng, 1, 2), 2));
    Poly f = random_poly(rng, t, 3, 3), g = random_poly(rng, t, 3, 2), h = random_poly(rng, t, 2, 2);
    ++res.cases;
    if (!(bracket(p, f, g) == -bracket(p, g, f))) res.fail("skew fails for " + f.to_string() + ", " + g.to_string());
    if (!(bracket(p, f, g * h) == bracket(p, f, g) * h + g * bracket(p, f, h)))
      res.fail("Leibniz fails for " + f.to_string() + ", " + g.to_string() + ", " + h.to_string());
    if (!bracket(p, f, f).is_zero()) res.fail("{f, f} != 0 for " + f.to_string());
  }
  return res;
}

PropertyResult pullback_commutes(std::uint64_t rng_seed, std::size_t cases) {
  PropertyResult res{"pullback commutes with mutation at multiplicity one", 0, 0, {}, cases};
  struct Start {
    std::string name;
    Seed seed;
    AmbientMap map;
  };
  std::vector<Start> starts;
  for (const auto& n : fixture_names()) {
    const auto& fx = fixture(n);
    Seed s = fx.seed();
    bool ordinary = true;
    for (int m = 0; m < s.quiver().mutable_count(); ++m) ordinary = ordinary && s.quiver().multiplicity(m) == 1;
    if (!ordinary) continue;
    auto map = fx.map(s);
    starts.push_back({n, s, map ? *map : AmbientMap::identity(s.ambient(), s.dist())});
  }
  Seed second = gl3_second_seed();
  starts.push_back({"gl3_second", second, gl3_second_map(second)});
  std::mt19937_64 rng(rng_seed);
  std::size_t attempts = 0;
  while (res.cases < cases && attempts++ < 50 * cases) {
    const auto& st = starts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(starts.size()) - 1))];
    Seed s = st.seed;
    PullbackSeed ps = build_pullback_seed(s, st.map);
    std::vector<int> path;
    bool ok = true;
    for (int steps = uniform(rng, 1, 4); ok && steps > 0; --steps) {
      int m = uniform(rng, 0, s.quiver().mutable_count() - 1);
      if (!coherence_check(ps, m).coherent) break;
      ++res.cases;
      path.push_back(m + 1);
      try {
        s = mutate_seed(s, m);
        ps = mutate_pullback(ps, m);
        if (!(build_pullback_seed(s, st.map) == ps)) {
          res.fail(st.name + " along " + str(path));
          ok = false;
        }
      } catch (const std::exception& e) {
        res.fail(st.name + " along " + str(path) + ": " + e.what());
        ok = false;
      }
    }
  }
  return res;
}

std::vector<PropertyResult> all_properties(std::uint64_t rng_seed) {
  return {seed_involution(rng_seed),      pullback_involution(rng_seed + 1), split_round_trip(rng_seed + 2),
          exact_division(rng_seed + 3),   y_variable_pullback(),             chi_parity(),
          mu_min_zero(),                  mu_mutation_rule(rng_seed + 4),    poisson_identities(rng_seed + 5),
          pullback_commutes(rng_seed + 6)};
}

}  // namespace gcluster::props
