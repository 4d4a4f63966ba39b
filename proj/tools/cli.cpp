#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "gcluster/fixtures.hpp"
#include "gcluster/io.hpp"
#include "gcluster/poisson.hpp"
#include "gcluster/session.hpp"
#include "gcluster/verify.hpp"
#include "server.hpp"

namespace gcluster::tools {

namespace {

using nlohmann::json;

// Input problems that are not mathematical failures.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string seed;
  std::string map;
  std::string bracket;
  std::string fixture;
  std::string out;
  std::string convention = "standard";
  std::string certificate;
  std::vector<std::string> independence;
  std::vector<int> vertices;
  std::string chi;
  std::string slope;
  int depth = 0;
  int max_seeds = 10000;
  int k = 0;
  int m = 0;
  int port = 8080;
  int trials = 16;
  bool as_json = false;
  std::uint64_t rng_seed = 1;
  std::uint64_t prime = modp::kDefaultPrime;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

ArrowConvention convention_of(const Options& o) {
  if (o.convention == "standard") return ArrowConvention::kStandard;
  if (o.convention == "mirrored") return ArrowConvention::kMirrored;
  throw InputError("convention must be 'standard' or 'mirrored'");
}

// Loaded input: a plain seed, or a pullback seed (from a file or seed + map).
struct Loaded {
  std::optional<Seed> seed;
  std::optional<PullbackSeed> pullback;

  PullbackSeed as_pullback(ArrowConvention c = ArrowConvention::kStandard) const {
    if (pullback) return *pullback;
    return build_pullback_seed(*seed, AmbientMap::identity(seed->ambient(), seed->dist()), c);
  }
};

Loaded load(const Options& o, bool pull_back_if_map = true) {
  Loaded l;
  if (!o.fixture.empty()) {
    const auto& fx = fixture(o.fixture);
    if (fx.map_json.empty() && fx.convention == ArrowConvention::kStandard)
      l.seed = fx.seed();
    else
      l.pullback = fx.pullback();
    return l;
  }
  if (o.seed.empty()) throw InputError("--seed or --fixture is required");
  std::string text = read_file(o.seed);
  if (document_kind(text) == "pullback_seed") {
    if (!o.map.empty()) throw InputError("a pullback seed file cannot be combined with --map");
    l.pullback = pullback_seed_from_json(text);
    return l;
  }
  Seed s = seed_from_json(text);
  if (!o.map.empty() && pull_back_if_map) {
    auto map = map_from_json(read_file(o.map), s.dist());
    l.pullback = build_pullback_seed(s, map, convention_of(o));
  } else {
    l.seed = std::move(s);
  }
  return l;
}

std::string fname(int v) { return "f" + std::to_string(v + 1); }

std::string monomial_text(const std::vector<std::string>& factors) {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : "*") + f;
  return s;
}

std::string power(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

std::string plain_relation(const Seed& seed, int m) {
  const auto& q = seed.quiver();
  std::string rhs;
  for (int r = 0; r <= q.multiplicity(m); ++r) {
    auto e = exchange_exponents(q, m, r);
    std::vector<std::string> f;
    const auto& p = seed.string(m)[static_cast<std::size_t>(r)];
    if (!p.is_one()) f.push_back("(" + p.to_string() + ")");
    for (int l = 0; l < q.size(); ++l)
      if (int x = e[static_cast<std::size_t>(l)]) f.push_back(power(fname(l), x));
    rhs += (rhs.empty() ? "" : " + ") + monomial_text(f);
  }
  return fname(m) + "*" + fname(m) + "' = " + rhs;
}

std::string lifted_relation(const PullbackSeed& ps, int m, const std::vector<LiftedTerm>& terms) {
  const auto& q = ps.base_quiver();
  std::string rhs;
  for (int r = 0; r <= q.multiplicity(m); ++r) {
    auto e = exchange_exponents(q, m, r);
    std::vector<std::string> f;
    const auto& p = ps.string(m)[static_cast<std::size_t>(r)];
    if (!p.is_one()) f.push_back("(" + p.to_string() + ")");
    for (int l = 0; l < q.size(); ++l)
      if (int x = e[static_cast<std::size_t>(l)]) f.push_back(power(fname(l), x));
    const auto& mu = terms[static_cast<std::size_t>(r)].mu;
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (mu[k]) f.push_back(power(ps.dist()->entry(k).label, mu[k]));
    rhs += (rhs.empty() ? "" : " + ") + monomial_text(f);
  }
  return fname(m) + "*" + fname(m) + "' = " + rhs;
}

std::string vec_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_mutate(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  json log = json::array();
  for (int v : o.vertices) {
    int m = v - 1;
    if (l.pullback) {
      auto& ps = *l.pullback;
      if (!ps.base_quiver().is_mutable(m)) throw DomainError("vertex " + std::to_string(v) + " is not mutable");
      auto entry = coherence_check(ps, m);
      if (!entry.coherent) {
        out << "incoherent relation at vertex " << v << ": M exponents " << vec_text(entry.exponents) << "\n";
        return kExitMathFailure;
      }
      std::string rel = lifted_relation(ps, m, pullback_exchange(ps, m));
      ps = mutate_pullback(ps, m);
      std::string fresh = fname(m) + "' = " + ps.var(m).to_string();
      if (!o.as_json) out << rel << "\n" << fresh << "\n";
      log.push_back({{"vertex", v}, {"relation", rel}, {"variable", ps.var(m).to_string()}});
    } else {
      auto& s = *l.seed;
      if (!s.quiver().is_mutable(m)) throw DomainError("vertex " + std::to_string(v) + " is not mutable");
      std::string rel = plain_relation(s, m);
      s = mutate_seed(s, m);
      if (!o.as_json) out << rel << "\n" << fname(m) << "' = " << s.var(m).to_string() << "\n";
      log.push_back({{"vertex", v}, {"relation", rel}, {"variable", s.var(m).to_string()}});
    }
  }
  std::string result = l.pullback ? pullback_seed_to_json(*l.pullback) : seed_to_json(*l.seed);
  if (!o.out.empty()) write_file(o.out, result);
  if (o.as_json) out << json{{"v", kFormatVersion}, {"log", log}, {"result", json::parse(result)}}.dump(2) << "\n";
  else if (o.out.empty()) out << result;
  return kExitOk;
}

json coherence_json(const PullbackSeed& ps) {
  json entries = json::array();
  for (const auto& e : coherence_report(ps).entries) {
    json m = json::object();
    for (std::size_t k = 0; k < e.exponents.size(); ++k) m[ps.dist()->entry(k).label] = e.exponents[k];
    entries.push_back({{"vertex", e.m + 1}, {"coherent", e.coherent}, {"monomial", m}});
  }
  return entries;
}

void print_coherence(const PullbackSeed& ps, std::ostream& out) {
  for (const auto& e : coherence_report(ps).entries)
    out << "vertex " << e.m + 1 << ": " << (e.coherent ? "coherent" : "INCOHERENT") << " M exponents "
        << vec_text(e.exponents) << "\n";
}

std::vector<std::vector<int>> discrepancy_table(const PullbackSeed& ps) {
  std::vector<std::vector<int>> t;
  for (std::size_t k = 0; k < ps.dist()->size(); ++k) {
    std::vector<int> row;
    for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) row.push_back(discrepancy(ps, k, m));
    t.push_back(row);
  }
  return t;
}

void print_discrepancy(const PullbackSeed& ps, std::ostream& out) {
  auto t = discrepancy_table(ps);
  for (std::size_t k = 0; k < t.size(); ++k)
    out << "delta[" << ps.dist()->entry(k).label << " @ " << ps.vertex_of(k) + 1 << "] = " << vec_text(t[k]) << "\n";
}

int cmd_pullback(const Options& o, std::ostream& out) {
  if (o.map.empty() && o.fixture.empty()) throw InputError("--map is required");
  PullbackSeed ps = load(o).as_pullback(convention_of(o));
  bool coherent = coherence_report(ps).coherent();
  json violations = json::array();
  if (o.depth > 0) {
    auto g = explore_pullback(ps, o.depth, static_cast<std::size_t>(o.max_seeds));
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      for (const auto& e : coherence_report(g.nodes[i]).entries)
        if (!e.coherent) violations.push_back({{"seed", i}, {"depth", g.depth[i]}, {"vertex", e.m + 1}, {"monomial", e.exponents}});
  }
  if (!o.out.empty()) write_file(o.out, pullback_seed_to_json(ps));
  if (o.as_json) {
    out << json{{"v", kFormatVersion}, {"discrepancy", discrepancy_table(ps)}, {"coherence", coherence_json(ps)},
                {"violations", violations}, {"coherent", coherent && violations.empty()}}
               .dump(2)
        << "\n";
  } else {
    print_discrepancy(ps, out);
    print_coherence(ps, out);
    for (const auto& v : violations)
      out << "depth " << v["depth"] << " seed " << v["seed"] << ": relation at vertex " << v["vertex"]
          << " incoherent, M exponents " << vec_text(v["monomial"].get<std::vector<int>>()) << "\n";
    if (o.out.empty()) out << pullback_seed_to_json(ps);
  }
  return coherent && violations.empty() ? kExitOk : kExitMathFailure;
}

int cmd_coherence(const Options& o, std::ostream& out) {
  PullbackSeed ps = load(o).as_pullback(convention_of(o));
  if (o.as_json)
    out << json{{"v", kFormatVersion}, {"coherence", coherence_json(ps)}}.dump(2) << "\n";
  else
    print_coherence(ps, out);
  return coherence_report(ps).coherent() ? kExitOk : kExitMathFailure;
}

int cmd_discrepancy(const Options& o, std::ostream& out) {
  PullbackSeed ps = load(o).as_pullback(convention_of(o));
  if (o.as_json)
    out << json{{"v", kFormatVersion}, {"discrepancy", discrepancy_table(ps)}}.dump(2) << "\n";
  else
    print_discrepancy(ps, out);
  return kExitOk;
}

Rational parse_slope(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw InputError("bad slope '" + s + "'");
  }
}

int cmd_hull(const Options& o, std::ostream& out) {
  HullProfile p;
  std::optional<MuPair> pair;
  if (!o.chi.empty()) {
    std::vector<Rational> chi;
    std::stringstream ss(o.chi);
    for (std::string item; std::getline(ss, item, ',');) chi.push_back(parse_slope(item));
    p = make_profile(std::move(chi));
  } else {
    PullbackSeed ps = load(o).as_pullback(convention_of(o));
    auto k = ps.dist_index(o.k - 1);
    if (!k) throw InputError("--k must name a vertex carrying a distinguished polynomial");
    if (!ps.base_quiver().is_mutable(o.m - 1)) throw InputError("--m must be a mutable vertex");
    p = compute_profile(ps, *k, o.m - 1);
    pair = ps.arrow_pair(*k, o.m - 1);
  }
  std::optional<MuPair> at_slope;
  if (!o.slope.empty()) at_slope = support_arrows(p, parse_slope(o.slope));
  auto hull = upper_hull(p);
  if (o.as_json) {
    json h = json::array();
    for (const auto& [r, c] : hull) h.push_back({r, c.get_str()});
    json j = {{"v", kFormatVersion}, {"d", p.d}, {"tau", p.tau.get_str()}, {"hull", h}};
    if (pair) j["pair"] = {pair->mu0.get_str(), pair->mud.get_str()};
    if (at_slope) j["support"] = {at_slope->mu0.get_str(), at_slope->mud.get_str()};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "d = " << p.d << ", tau = " << p.tau.get_str() << ", sigma = " << p.sigma.get_str() << "\nchi =";
  for (const auto& c : p.chi) out << " " << c.get_str();
  out << "\nhull:";
  for (const auto& [r, c] : hull) out << " (" << r << ", " << c.get_str() << ")";
  out << "\n";
  if (pair) out << "pair (" << pair->mu0.get_str() << ", " << pair->mud.get_str() << ")\n";
  if (at_slope)
    out << "slope " << o.slope << ": (" << at_slope->mu0.get_str() << ", " << at_slope->mud.get_str() << ")\n";
  return kExitOk;
}

int cmd_poisson(const Options& o, std::ostream& out) {
  if (o.bracket.empty()) throw InputError("--bracket is required");
  PoissonStructure p = bracket_from_json(read_file(o.bracket));
  Loaded l = load(o);
  CompatibilityReport r = l.pullback ? check_compatibility(*l.pullback, p) : check_compatibility(*l.seed, p);
  bool jacobi = jacobi_spot_check(p, 20, o.prime, o.rng_seed);
  if (o.as_json) {
    json conds = json::array();
    for (const auto& c : r.conditions) {
      json e = {{"condition", std::string(1, c.label)}, {"subject", c.subject}, {"pass", c.pass}};
      if (c.omega) e["omega"] = c.omega->get_str();
      conds.push_back(e);
    }
    out << json{{"v", kFormatVersion}, {"conditions", conds}, {"jacobi", jacobi}, {"pass", r.pass()}}.dump(2) << "\n";
  } else {
    for (const auto& c : r.conditions)
      out << "(" << c.label << ") " << c.subject << ": " << (c.pass ? "pass" : "FAIL")
          << (c.omega ? " omega = " + c.omega->get_str() : "") << "\n";
    out << "jacobi spot check: " << (jacobi ? "pass" : "FAIL") << "\n";
  }
  return r.pass() && jacobi ? kExitOk : kExitMathFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  IndependenceOptions opt{o.trials, o.prime, o.rng_seed};
  if (!o.fixture.empty()) {
    std::vector<std::string> names = o.fixture == "all" ? runnable_fixture_names() : std::vector<std::string>{o.fixture};
    bool pass = true;
    json reports = json::array();
    for (const auto& n : names) {
      auto r = run_fixture(n);
      pass = pass && r.pass();
      json a = json::array();
      for (const auto& x : r.assertions) {
        a.push_back({{"description", x.description}, {"tag", to_string(x.tag)}, {"pass", x.pass}, {"detail", x.detail}});
        if (!o.as_json)
          out << (x.pass ? "PASS " : "FAIL ") << n << ": " << x.description << " [" << to_string(x.tag) << "]"
              << (x.detail.empty() ? "" : " " + x.detail) << "\n";
      }
      reports.push_back({{"fixture", n}, {"pass", r.pass()}, {"assertions", a}});
    }
    if (o.as_json) out << json{{"v", kFormatVersion}, {"reports", reports}}.dump(2) << "\n";
    return pass ? kExitOk : kExitMathFailure;
  }
  if (!o.independence.empty()) {
    if (o.independence.size() != 2) throw InputError("--independence takes <seedfile> <k>");
    Options inner = o;
    inner.seed = o.independence[0];
    PullbackSeed ps = load(inner).as_pullback(convention_of(o));
    auto k = ps.dist_index(std::stoi(o.independence[1]) - 1);
    if (!k) throw InputError("k must name a vertex carrying a distinguished polynomial");
    auto r = independence_for_pullback(ps, *k, opt);
    if (o.as_json)
      out << json{{"v", kFormatVersion}, {"k", ps.vertex_of(*k) + 1}, {"family_size", r.family_size}, {"rank", r.rank},
                  {"samples", r.samples}, {"prime", r.prime}, {"verdict", to_string(r.verdict)}}
                 .dump(2)
          << "\n";
    else
      out << "independence on {" << ps.dist()->entry(*k).label << " = 0}: " << to_string(r.verdict) << " (rank "
          << r.rank << " of " << r.family_size + 1 << ", " << r.samples << " samples, p = " << r.prime << ")\n";
    return r.verdict == Verdict::kIndependent ? kExitOk : kExitMathFailure;
  }
  if (!o.certificate.empty()) {
    bool ok = verify_laurent_certificate(certificate_from_json(read_file(o.certificate)));
    if (o.as_json)
      out << json{{"v", kFormatVersion}, {"verified", ok}}.dump(2) << "\n";
    else
      out << "certificate " << (ok ? "verified" : "REJECTED") << "\n";
    return ok ? kExitOk : kExitMathFailure;
  }
  throw InputError("verify needs --fixture, --independence or --certificate");
}

int cmd_explore(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  const auto max_seeds = static_cast<std::size_t>(o.max_seeds);
  std::size_t nodes, edges, failures;
  bool truncated;
  std::vector<std::string> vars;
  if (l.pullback) {
    auto g = explore_pullback(*l.pullback, o.depth, max_seeds);
    nodes = g.nodes.size(), edges = g.edges.size(), failures = g.failures.size(), truncated = g.truncated;
    std::set<std::string> seen;
    for (const auto& s : g.nodes)
      for (const auto& v : s.vars()) seen.insert(v.to_string());
    vars.assign(seen.begin(), seen.end());
  } else {
    auto g = explore(*l.seed, o.depth, max_seeds);
    nodes = g.nodes.size(), edges = g.edges.size(), failures = g.failures.size(), truncated = g.truncated;
    vars = distinct_variables(g);
  }
  if (o.as_json) {
    out << json{{"v", kFormatVersion}, {"seeds", nodes}, {"edges", edges}, {"failures", failures},
                {"truncated", truncated}, {"variables", vars}}
               .dump(2)
        << "\n";
  } else {
    out << nodes << " seeds, " << edges << " edges, " << vars.size() << " distinct variables"
        << (truncated ? " (truncated)" : "") << (failures ? ", " + std::to_string(failures) + " failed mutations" : "")
        << "\n";
    for (const auto& v : vars) out << "  " << v << "\n";
  }
  return failures ? kExitMathFailure : kExitOk;
}

int cmd_serve(const Options& o, std::ostream& out) {
  Session session(load(o).as_pullback(convention_of(o)), o.fixture.empty() ? "session" : o.fixture);
  httplib::Server server;
  register_routes(server, session);
  out << "serving on http://127.0.0.1:" << o.port << std::endl;
  if (!server.listen("127.0.0.1", o.port)) throw InputError("cannot listen on port " + std::to_string(o.port));
  return kExitOk;
}

int cmd_fixture(const Options& o, std::ostream& out) {
  std::vector<std::string> names = o.fixture.empty() || o.fixture == "all" ? fixture_names()
                                                                           : std::vector<std::string>{o.fixture};
  std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  for (const auto& n : names) {
    const auto& fx = fixture(n);
    Seed s = fx.seed();
    write_file((dir / (n + ".seed.json")).string(), seed_to_json(s));
    if (auto map = fx.map(s)) write_file((dir / (n + ".map.json")).string(), map_to_json(*map));
    out << "wrote " << n << "\n";
  }
  if (o.fixture.empty() || o.fixture == "all") {
    Seed s = fixture("ex2_1").seed();
    write_file((dir / "ex2_1.bracket.json").string(), bracket_to_json(ex2_1_target_bracket(s.ambient())));
    auto ps = fixture("ex2_1").pullback();
    write_file((dir / "ex2_1.source_bracket.json").string(), bracket_to_json(ex2_1_source_bracket(ps.ambient())));
    Seed second = gl3_second_seed();
    write_file((dir / "gl3_second.seed.json").string(), seed_to_json(second));
    write_file((dir / "gl3_second.map.json").string(), map_to_json(gl3_second_map(second)));
    auto certs = positive_certificates();
    for (std::size_t i = 0; i < certs.size(); ++i)
      write_file((dir / ("certificate" + std::to_string(i + 1) + ".json")).string(), certificate_to_json(certs[i]));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized cluster structures: mutation, pullback, coherence and verification", "gcluster"};
  app.require_subcommand(1);
  Options o;
  auto input = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "seed or pullback seed file (JSON)");
    c->add_option("--map", o.map, "map file (JSON) to pull the seed back along");
    c->add_option("--fixture", o.fixture, "built-in fixture instead of files");
    c->add_option("--convention", o.convention, "arrow convention: standard or mirrored");
    c->add_flag("--json", o.as_json, "machine-readable output");
  };
  auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence and log exchange relations");
  input(mutate);
  mutate->add_option("vertices", o.vertices, "1-based vertices");
  mutate->add_option("--out", o.out, "write the resulting seed here");
  auto* pullback = app.add_subcommand("pullback", "pull a seed back along a map");
  input(pullback);
  pullback->add_option("--depth", o.depth, "also check coherence in seeds up to this distance");
  pullback->add_option("--max-seeds", o.max_seeds);
  pullback->add_option("--out", o.out, "write the pullback seed here");
  auto* coherence = app.add_subcommand("coherence", "coherence report of a pullback seed");
  input(coherence);
  auto* disc = app.add_subcommand("discrepancy", "discrepancy table of a pullback seed");
  input(disc);
  auto* hull = app.add_subcommand("hull", "hull profile at a distinguished vertex and a mutable vertex");
  input(hull);
  hull->add_option("--k", o.k, "vertex carrying the distinguished polynomial");
  hull->add_option("--m", o.m, "mutable vertex");
  hull->add_option("--chi", o.chi, "explicit profile chi(0),...,chi(d)");
  hull->add_option("--slope", o.slope, "support line slope");
  auto* poisson = app.add_subcommand("poisson-check", "compatibility of a seed with a Poisson bracket");
  input(poisson);
  poisson->add_option("--bracket", o.bracket, "bracket file (JSON)")->required();
  poisson->add_option("--rng-seed", o.rng_seed, "seed for the random evaluation points");
  poisson->add_option("--prime", o.prime, "field characteristic for modular checks");
  auto* verify = app.add_subcommand("verify", "fixture assertions, independence tests and certificates");
  verify->add_option("--fixture", o.fixture, "fixture name or 'all'");
  verify->add_option("--independence", o.independence, "<seedfile> <k>")->expected(2);
  verify->add_option("--certificate", o.certificate, "certificate file (JSON)");
  verify->add_option("--map", o.map, "map file for --independence");
  verify->add_option("--trials", o.trials, "random points per independence test");
  verify->add_option("--rng-seed", o.rng_seed, "seed for the random evaluation points");
  verify->add_option("--prime", o.prime, "field characteristic for modular checks");
  verify->add_option("--convention", o.convention, "arrow convention: standard or mirrored");
  verify->add_flag("--json", o.as_json);
  auto* exp = app.add_subcommand("explore", "breadth-first enumeration of seeds");
  input(exp);
  exp->add_option("--depth", o.depth)->required();
  exp->add_option("--max-seeds", o.max_seeds);
  auto* serve = app.add_subcommand("serve", "serve a mutation session over HTTP");
  input(serve);
  serve->add_option("--port", o.port);
  auto* fx = app.add_subcommand("fixture", "export built-in fixtures as files");
  fx->add_option("name", o.fixture, "fixture name (default: all)");
  fx->add_option("--out", o.out, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
  try {
    if (*mutate) return cmd_mutate(o, out);
    if (*pullback) return cmd_pullback(o, out);
    if (*coherence) return cmd_coherence(o, out);
    if (*disc) return cmd_discrepancy(o, out);
    if (*hull) return cmd_hull(o, out);
    if (*poisson) return cmd_poisson(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*exp) return cmd_explore(o, out);
    if (*serve) return cmd_serve(o, out);
    if (*fx) return cmd_fixture(o, out);
  } catch (const NonRegularError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const CoherenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gcluster::tools
