#include <algorithm>
#include <array>
#include <functional>

#include "gcluster/fixtures.hpp"

namespace gcluster {

namespace {

class Recorder {
 public:
  explicit Recorder(FixtureReport& r) : report_(r) {}

  void check(const std::string& description, Provenance tag, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
      pass = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report_.assertions.push_back({description, tag, pass, detail});
  }

 private:
  FixtureReport& report_;
};

Poly P(const std::string& text, const VarTablePtr& t) { return parse_poly(text, t); }

bool equal_text(const Poly& got, const Poly& want, std::string& detail) {
  if (got == want) return true;
  detail = "got " + got.to_string() + ", want " + want.to_string();
  return false;
}

void run_ex2_1(Recorder& rec) {
  const auto& fx = fixture("ex2_1");
  auto ps = fx.pullback();
  auto x = ps.ambient();
  rec.check("f^4 = x1*x4 - x2*x3*x5 with lambda_h = 1", Provenance::kPaper, [&](std::string& d) {
    return equal_text(ps.hat(3), P("x1*x4 - x2*x3*x5", x), d) && ps.lambda(0, 3) == 1;
  });
  rec.check("coherence report all zero", Provenance::kPaper, [&](std::string&) { return coherence_report(ps).coherent(); });
  rec.check("lifted relation f^1 f^1' = f^2 f^3 h + f^4", Provenance::kPaper, [&](std::string& d) {
    auto t = pullback_exchange(ps, 0);
    d = "T0 = " + t[0].hat.to_string() + ", T1 = " + t[1].hat.to_string();
    return t.size() == 2 && t[0].hat == P("x2*x3", x) && t[0].mu == std::vector<int>{1} &&
           t[1].hat == P("x1*x4 - x2*x3*x5", x) && t[1].mu == std::vector<int>{0};
  });
  rec.check("f^1' = x4 after mutation at 1", Provenance::kPaper, [&](std::string& d) {
    auto next = mutate_pullback(ps, 0);
    return equal_text(next.hat(0), P("x4", x), d) && next.lambda(0, 0) == 0;
  });
  rec.check("discrepancy at (h, 1) is -1", Provenance::kDerived, [&](std::string&) { return discrepancy(ps, 0, 0) == -1; });
  rec.check("y-variable at 1 is (0, -1, -1, 1)", Provenance::kDerived, [&](std::string&) {
    return y_variable(fx.seed(), 0) == std::vector<int>{0, -1, -1, 1};
  });
  rec.check("explore yields exactly 2 seeds", Provenance::kPaper, [&](std::string& d) {
    auto g = explore(fx.seed(), 6, 64);
    d = std::to_string(g.nodes.size()) + " seeds";
    return g.nodes.size() == 2 && !g.truncated;
  });
  rec.check("certificate x4 = f^1' verifies", Provenance::kPaper, [&](std::string&) {
    return verify_laurent_certificate(positive_certificates().front());
  });
  rec.check("2x2 bracket compatible with omega = -2", Provenance::kDerived, [&](std::string&) {
    Seed s = fx.seed();
    auto r = check_compatibility(s, ex2_1_target_bracket(s.ambient()));
    return r.pass() && r.omega_m.at(0) == Rational(-2);
  });
  rec.check("lifted bracket compatible with the pullback seed", Provenance::kDerived, [&](std::string&) {
    return check_compatibility(ps, ex2_1_source_bracket(x)).pass();
  });
}

void run_ex2_2(Recorder& rec) {
  const auto& fx = fixture("ex2_2");
  auto ps = fx.pullback();
  auto x = ps.ambient();
  rec.check("f^4 = x1*x4*x5 - x2*x3 with lambda_h = 1", Provenance::kPaper, [&](std::string& d) {
    return equal_text(ps.hat(3), P("x1*x4*x5 - x2*x3", x), d) && ps.lambda(0, 3) == 1;
  });
  rec.check("relation at 1 is incoherent with M = 1/h", Provenance::kPaper, [&](std::string&) {
    auto e = coherence_check(ps, 0);
    return !e.coherent && e.exponents == std::vector<int>{-1};
  });
  auto generators = [&] {
    auto t = make_var_table({"x1", "x2", "x3", "x4", "x5"});
    auto dist = empty_dist_set(t);
    std::vector<RationalSplit> vars;
    for (const char* g : {"x1", "x2", "x3", "x5", "x4*x5"}) vars.push_back(split(P(g, t), dist));
    MultiQuiver q(1, 5, {1});
    return Seed(q, vars, trivial_strings(q, dist), dist);
  };
  rec.check("x4 = (x4*x5)*x5^-1 is rejected with non-negative frozen exponents", Provenance::kPaper, [&](std::string&) {
    Seed s = generators();
    return !verify_laurent_certificate({s, P("x4", s.ambient()), {{1, {0, 0, 0, -1, 1}}}, true});
  });
  rec.check("the same candidate is an identity once frozen inverses are allowed", Provenance::kDerived, [&](std::string&) {
    Seed s = generators();
    return verify_laurent_certificate({s, P("x4", s.ambient()), {{1, {0, 0, 0, -1, 1}}}, false});
  });
}

void run_ex2_3(Recorder& rec) {
  const auto& fx = fixture("ex2_3");
  Seed s = fx.seed();
  auto y = s.ambient();
  auto ps = fx.pullback();
  rec.check("initial seed coherent", Provenance::kPaper, [&](std::string&) { return coherence_report(ps).coherent(); });
  rec.check("f1' = y1 + y2 and f2' = y1*y3*f2 - 1", Provenance::kPaper, [&](std::string& d) {
    return equal_text(mutate_seed(s, 0).var(0).numerator(), P("y1 + y2", y), d) &&
           equal_text(mutate_seed(s, 1).var(1).numerator(), P("y1*y3*(y1^2 + y1*y2 - 1) - 1", y), d);
  });
  rec.check("f2'' = y3*f2", Provenance::kPaper, [&](std::string& d) {
    return equal_text(mutate_seed(mutate_seed(s, 0), 1).var(1).numerator(), P("y3*(y1^2 + y1*y2 - 1)", y), d);
  });
  rec.check("after mutation at 1 the relation at 2 has M exponent -1 at h", Provenance::kPaper, [&](std::string&) {
    auto e = coherence_check(mutate_pullback(ps, 0), 1);
    return !e.coherent && e.exponents == std::vector<int>{-1};
  });
  rec.check("exactly six distinct cluster variables", Provenance::kPaper, [&](std::string& d) {
    auto g = explore(s, 12, 256);
    auto n = distinct_variables(g).size();
    d = std::to_string(n) + " variables";
    return n == 6 && !g.truncated;
  });
  rec.check("initial seed is coprime", Provenance::kDerived, [&](std::string&) { return coprime_seed_check(s).coprime(); });
}

void run_ex3_1(Recorder& rec) {
  const auto& fx = fixture("ex3_1");
  auto ps = fx.pullback();
  auto x = ps.ambient();
  rec.check("tilde P = x1^2 + x1*x2*x4", Provenance::kPaper, [&](std::string& d) {
    auto e = coherence_check(ps, 0);
    return equal_text(*e.evaluation, P("x1^2 + x1*x2*x4", x), d);
  });
  rec.check("family dependent on {x4 = 0}", Provenance::kPaper, [&](std::string& d) {
    auto r = independence_for_pullback(ps, 0);
    d = to_string(r.verdict) + ", rank " + std::to_string(r.rank);
    return r.verdict == Verdict::kDependentSuspected;
  });
}

void run_gc3(Recorder& rec) {
  const auto& fx = fixture("gc3");
  Seed s = fx.seed();
  auto x = s.ambient();
  auto ps = fx.pullback();
  auto f = [&](int i) { return s.var(i - 1); };
  rec.check("vertex-1 relation f2^2 f7 + (f9/f8) f2 f8 f5 + f8^2 f5^2 f6", Provenance::kPaper, [&](std::string&) {
    auto p = s.string(0)[1];
    RationalSplit want = f(2).pow(2) * f(7) + p * f(2) * f(8) * f(5) + f(8).pow(2) * f(5).pow(2) * f(6);
    return exchange_polynomial(s, 0) == want;
  });
  auto after2 = mutate_pullback(ps, 1);
  auto after21 = mutate_pullback(after2, 0);
  Poly det = s.dist()->poly(0);
  auto h = [&](const PullbackSeed& q, int i) { return q.hat(i - 1); };
  rec.check("f^2' is the stated quartic", Provenance::kPaper, [&](std::string& d) {
    return equal_text(after2.hat(1), P("x13*x32*x33 + x22*x23*x33 - x12*x33^2 - x23^2*x32", x), d);
  });
  rec.check("f^1 f^1'' = f^3^2 f8 + f^9 f^3 f^2' + f^2'^2 f^6 f^7 f8 as stated", Provenance::kPaper, [&](std::string&) {
    return h(after2, 1) * h(after21, 1) == h(ps, 3).pow(2) * det + h(ps, 9) * h(ps, 3) * h(after2, 2) +
                                               h(after2, 2).pow(2) * h(ps, 6) * h(ps, 7) * det;
  });
  rec.check("f^1 f^1'' = f^3^2 f^7 f8 + f^9 f^3 f^2' + f^2'^2 f^6 f8", Provenance::kDerived, [&](std::string&) {
    return h(after2, 1) * h(after21, 1) == h(ps, 3).pow(2) * h(ps, 7) * det + h(ps, 9) * h(ps, 3) * h(after2, 2) +
                                               h(after2, 2).pow(2) * h(ps, 6) * det;
  });
  rec.check("lambda_det(f1'') = 1", Provenance::kPaper, [&](std::string&) { return after21.lambda(0, 0) == 1; });
  rec.check("hull at (8, 1) is the triangle with tau = 1 and pair (2, 0)", Provenance::kPaper, [&](std::string&) {
    auto p = compute_profile(ps, 0, 0);
    auto hull = upper_hull(p);
    return p.tau == 1 && hull == std::vector<std::pair<int, Rational>>{{0, 0}, {1, 1}, {2, 0}} &&
           ps.arrow_pair(0, 0) == MuPair{2, 0};
  });
  rec.check("pair (1, 1) after mutation at 2", Provenance::kPaper, [&](std::string&) {
    return after2.arrow_pair(0, 0) == MuPair{1, 1} && compute_profile(after2, 0, 0).tau == 0;
  });
  rec.check("arrows between 1 and 8 along 2, 1, 4, 2", Provenance::kPaper, [&](std::string& d) {
    const std::vector<std::pair<int, int>> want = {{2, 0}, {1, 1}, {1, 1}, {1, 1}, {0, 2}};
    auto cur = ps;
    std::vector<int> seq = {1, 0, 3, 1};
    for (std::size_t i = 0; i < want.size(); ++i) {
      std::pair<int, int> got{cur.quiver().arrows(0, 7), cur.quiver().arrows(7, 0)};
      if (got != want[i]) {
        d = "step " + std::to_string(i) + ": 1->8 x" + std::to_string(got.first) + ", 8->1 x" + std::to_string(got.second);
        return false;
      }
      if (i < seq.size()) cur = mutate_pullback(cur, seq[i]);
    }
    return true;
  });
  rec.check("after 2, 1, 4, 2: lambda_8(f1) = lambda_8(f2) = 1", Provenance::kPaper, [&](std::string&) {
    auto cur = ps;
    for (int m : {1, 0, 3, 1}) cur = mutate_pullback(cur, m);
    for (int v = 0; v < cur.quiver().size(); ++v)
      if (v != 7 && cur.lambda(0, v) != (v < 2 ? 1 : 0)) return false;
    return true;
  });
}

void run_gl3(Recorder& rec) {
  auto ps = fixture("gl3_lift").pullback();
  auto edges = [](const MultiQuiver& q) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < q.size(); ++i)
      for (int j = 0; j < q.size(); ++j)
        if (q.arrows(i, j)) out.push_back({i + 1, j + 1, q.arrows(i, j)});
    return out;
  };
  rec.check("first lift discrepancy (0, -1, -1, 1)", Provenance::kPaper, [&](std::string&) {
    std::vector<int> got;
    for (int m = 0; m < 4; ++m) got.push_back(discrepancy(ps, 0, m));
    return got == std::vector<int>{0, -1, -1, 1};
  });
  rec.check("first lift quiver: 2->9 removed, 9->3 and 4->9 added", Provenance::kPaper, [&](std::string&) {
    std::vector<std::array<int, 3>> want = {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {2, 8, 1}, {3, 4, 1}, {3, 5, 1},
                                            {4, 1, 1}, {4, 7, 1}, {4, 9, 1}, {6, 4, 1}, {7, 2, 1}, {9, 3, 1}};
    return edges(ps.quiver()) == want;
  });
  rec.check("first lift independent on {g = 0}", Provenance::kPaper, [&](std::string&) {
    return independence_for_pullback(ps, 0).verdict == Verdict::kIndependent;
  });
  Seed second = gl3_second_seed();
  auto ps2 = build_pullback_seed(second, gl3_second_map(second));
  rec.check("second lift discrepancy (1, 0, 0, 0)", Provenance::kPaper, [&](std::string&) {
    std::vector<int> got;
    for (int m = 0; m < 4; ++m) got.push_back(discrepancy(ps2, 0, m));
    return got == std::vector<int>{1, 0, 0, 0};
  });
  rec.check("second lift quiver adds 1->10", Provenance::kPaper, [&](std::string&) {
    auto want = edges(ps.quiver().with_frozen(1));
    want.push_back({1, 10, 1});
    std::sort(want.begin(), want.end());
    return edges(ps2.quiver()) == want;
  });
  rec.check("second lift independent on {z = 0}", Provenance::kPaper, [&](std::string&) {
    return independence_for_pullback(ps2, 0).verdict == Verdict::kIndependent;
  });
}

void run_hulls(Recorder& rec) {
  for (const auto& c : hull_cases())
    rec.check(c.label + " -> (" + c.expected.mu0.get_str() + ", " + c.expected.mud.get_str() + ")", c.tag,
              [&](std::string& d) {
                auto got = support_arrows(c.profile, c.slope);
                d = "(" + got.mu0.get_str() + ", " + got.mud.get_str() + ")";
                return got == c.expected;
              });
}

}  // namespace

FixtureReport run_fixture(const std::string& name) {
  FixtureReport report{name, {}};
  Recorder rec(report);
  if (name == "ex2_1") run_ex2_1(rec);
  else if (name == "ex2_2") run_ex2_2(rec);
  else if (name == "ex2_3") run_ex2_3(rec);
  else if (name == "ex3_1") run_ex3_1(rec);
  else if (name == "gc3") run_gc3(rec);
  else if (name == "gl3_lift") run_gl3(rec);
  else if (name == "hulls_4_3") run_hulls(rec);
  else throw LookupError("unknown fixture '" + name + "'");
  return report;
}

}  // namespace gcluster
