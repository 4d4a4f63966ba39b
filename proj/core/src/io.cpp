#include "gcluster/io.hpp"

#include "gcluster/poisson.hpp"
#include "gcluster/verify.hpp"
#include "json_detail.hpp"

namespace gcluster {

namespace detail {

json parse_document(std::string_view text, std::string_view kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.value("v", 0) != kFormatVersion) throw ParseError("unsupported format version");
  if (j.value("kind", std::string()) != kind)
    throw ParseError("expected a '" + std::string(kind) + "' document, got '" + j.value("kind", std::string()) + "'");
  return j;
}

json header(std::string_view kind) {
  json j = json::object();
  j["v"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

json table_to_json(const VarTable& t) { return t.names(); }

VarTablePtr table_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("variable list must be an array of names");
  return make_var_table(j.get<std::vector<std::string>>());
}

json split_to_json(const RationalSplit& s) {
  bool trivial = true;
  for (int l : s.lambda()) trivial = trivial && l == 0;
  if (trivial) return s.numerator().to_string();
  json lam = json::object();
  for (std::size_t k = 0; k < s.lambda().size(); ++k)
    if (s.lambda(k) != 0) lam[s.dist()->entry(k).label] = s.lambda(k);
  return {{"num", s.numerator().to_string()}, {"lambda", lam}};
}

RationalSplit split_from_json(const json& j, const DistSetPtr& dist) {
  std::vector<int> lam(dist->size(), 0);
  if (j.is_string()) return RationalSplit::normalize(dist, parse_poly(j.get<std::string>(), dist->vars()), lam);
  if (!j.is_object() || !j.contains("num")) throw ParseError("split must be a string or {num, lambda}");
  Poly num = parse_poly(j.at("num").get<std::string>(), dist->vars());
  if (j.contains("lambda")) {
    for (const auto& [label, value] : j.at("lambda").items()) {
      auto k = dist->find(label);
      if (!k) throw StructuralError("unknown distinguished label '" + label + "'");
      lam[*k] = value.get<int>();
    }
  }
  return RationalSplit::normalize(dist, std::move(num), std::move(lam));
}

json dist_to_json(const DistinguishedSet& d) {
  json out = json::array();
  for (const auto& e : d.entries())
    out.push_back({{"label", e.label}, {"kind", e.kind == DistKind::G ? "G" : "H"}, {"poly", e.poly.to_string()}});
  return out;
}

DistSetPtr dist_from_json(const json& j, const VarTablePtr& vars) {
  std::vector<DistinguishedEntry> entries;
  if (!j.is_null()) {
    if (!j.is_array()) throw ParseError("distinguished polynomials must be an array");
    for (const auto& e : j) {
      std::string kind = e.value("kind", std::string("G"));
      if (kind != "G" && kind != "H") throw ParseError("distinguished kind must be G or H");
      entries.push_back({e.at("label").get<std::string>(), kind == "G" ? DistKind::G : DistKind::H,
                         parse_poly(e.at("poly").get<std::string>(), vars)});
    }
  }
  return make_dist_set(vars, std::move(entries));
}

json arrows_to_json(const MultiQuiver& q) {
  json out = json::array();
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (int a = q.arrows(i, j)) out.push_back({i + 1, j + 1, a});
  return out;
}

json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

json coherence_entry_to_json(const CoherenceEntry& e, const DistinguishedSet& d) {
  json m = json::object();
  for (std::size_t k = 0; k < e.exponents.size(); ++k) m[d.entry(k).label] = e.exponents[k];
  json out = {{"vertex", e.m + 1}, {"coherent", e.coherent}, {"monomial", m}, {"top", e.top}};
  if (e.evaluation) out["evaluation"] = e.evaluation->to_string();
  return out;
}

json mu_pair_to_json(const MuPair& p) { return {rational_to_json(p.mu0), rational_to_json(p.mud)}; }

json profile_to_json(const HullProfile& p) {
  json chi = json::array();
  for (const auto& c : p.chi) chi.push_back(rational_to_json(c));
  json hull = json::array();
  for (const auto& [r, c] : upper_hull(p)) hull.push_back({r, rational_to_json(c)});
  return {{"d", p.d}, {"chi", chi}, {"tau", rational_to_json(p.tau)}, {"sigma", rational_to_json(p.sigma)},
          {"hull", hull}};
}

}  // namespace detail

using detail::json;

namespace {

MultiQuiver quiver_from_json(const json& j, int total) {
  int n = j.at("mutable").get<int>();
  std::vector<int> d = j.contains("multiplicities") ? j.at("multiplicities").get<std::vector<int>>()
                                                     : std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1);
  MultiQuiver q(n, total, std::move(d));
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() < 2 || a.size() > 3) throw ParseError("arrow must be [from, to] or [from, to, count]");
    int from = a[0].get<int>() - 1, to = a[1].get<int>() - 1;
    int count = a.size() == 3 ? a[2].get<int>() : 1;
    if (from < 0 || from >= total || to < 0 || to >= total)
      throw StructuralError("arrow endpoint out of range");
    q.add_arrows(from, to, count);
  }
  return q;
}

ExchangeStrings strings_from_json(const json& j, const MultiQuiver& q, const DistSetPtr& dist) {
  if (!j.contains("strings")) return trivial_strings(q, dist);
  ExchangeStrings out;
  for (const auto& row : j.at("strings")) {
    std::vector<RationalSplit> s;
    for (const auto& p : row) s.push_back(detail::split_from_json(p, dist));
    out.push_back(std::move(s));
  }
  return out;
}

json strings_to_json(const ExchangeStrings& strings) {
  json out = json::array();
  for (const auto& row : strings) {
    json r = json::array();
    for (const auto& p : row) r.push_back(detail::split_to_json(p));
    out.push_back(r);
  }
  return out;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

Seed seed_from_object(const json& j) {
  auto vars = detail::table_from_json(j.at("ambient"));
  auto dist = detail::dist_from_json(j.value("distinguished", json()), vars);
  const auto& vj = j.at("variables");
  MultiQuiver q = quiver_from_json(j, static_cast<int>(vj.size()));
  std::vector<RationalSplit> cluster;
  for (const auto& v : vj) cluster.push_back(detail::split_from_json(v, dist));
  auto strings = strings_from_json(j, q, dist);
  return Seed(std::move(q), std::move(cluster), std::move(strings), dist);
}

json seed_object(const Seed& seed) {
  json j = detail::header("seed");
  j["ambient"] = detail::table_to_json(*seed.ambient());
  j["distinguished"] = detail::dist_to_json(*seed.dist());
  j["mutable"] = seed.quiver().mutable_count();
  std::vector<int> d;
  for (int m = 0; m < seed.quiver().mutable_count(); ++m) d.push_back(seed.quiver().multiplicity(m));
  j["multiplicities"] = d;
  json vars = json::array();
  for (const auto& v : seed.vars()) vars.push_back(detail::split_to_json(v));
  j["variables"] = vars;
  j["arrows"] = detail::arrows_to_json(seed.quiver());
  j["strings"] = strings_to_json(seed.strings());
  return j;
}

json pullback_object(const PullbackSeed& ps) {
  json j = detail::header("pullback_seed");
  j["ambient"] = detail::table_to_json(*ps.ambient());
  j["distinguished"] = detail::dist_to_json(*ps.dist());
  j["mutable"] = ps.base_quiver().mutable_count();
  std::vector<int> d;
  for (int m = 0; m < ps.base_quiver().mutable_count(); ++m) d.push_back(ps.base_quiver().multiplicity(m));
  j["multiplicities"] = d;
  j["original_size"] = ps.original_size();
  json vars = json::array();
  for (const auto& v : ps.vars()) vars.push_back(detail::split_to_json(v));
  j["variables"] = vars;
  std::vector<int> dv;
  for (int v : ps.distinguished_vertices()) dv.push_back(v + 1);
  j["distinguished_vertices"] = dv;
  j["arrows"] = detail::arrows_to_json(ps.base_quiver());
  j["pullback_arrows"] = detail::arrows_to_json(ps.quiver());
  j["strings"] = strings_to_json(ps.strings());
  j["convention"] = ps.convention() == ArrowConvention::kStandard ? "standard" : "mirrored";
  return j;
}

}  // namespace

std::string document_kind(std::string_view text) {
  try {
    auto j = json::parse(text);
    if (!j.is_object() || !j.contains("kind")) throw ParseError("document has no kind");
    return j.at("kind").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string seed_to_json(const Seed& seed) { return seed_object(seed).dump(2) + "\n"; }

Seed seed_from_json(std::string_view text) {
  return guarded([&] { return seed_from_object(detail::parse_document(text, "seed")); });
}

std::string map_to_json(const AmbientMap& map) {
  json j = detail::header("map");
  j["source"] = detail::table_to_json(*map.source());
  j["target"] = detail::table_to_json(*map.target());
  json h = json::array();
  for (const auto& e : map.h_set()->entries()) h.push_back({{"label", e.label}, {"poly", e.poly.to_string()}});
  j["h"] = h;
  json images = json::array();
  for (const auto& img : map.raw_images()) {
    bool trivial = true;
    for (int x : img.kappa) trivial = trivial && x == 0;
    if (trivial) {
      images.push_back(img.numerator.to_string());
      continue;
    }
    json kappa = json::object();
    for (std::size_t k = 0; k < img.kappa.size(); ++k)
      if (img.kappa[k] != 0) kappa[map.h_set()->entry(k).label] = img.kappa[k];
    images.push_back({{"num", img.numerator.to_string()}, {"kappa", kappa}});
  }
  j["images"] = images;
  return j.dump(2) + "\n";
}

AmbientMap map_from_json(std::string_view text, const DistSetPtr& target_g) {
  return guarded([&] {
    json j = detail::parse_document(text, "map");
    auto source = detail::table_from_json(j.at("source"));
    auto target = detail::table_from_json(j.at("target"));
    if (!(*target == *target_g->vars())) throw StructuralError("map target does not match the seed's ambient space");
    target = target_g->vars();
    std::vector<DistinguishedEntry> h;
    for (const auto& e : j.value("h", json::array()))
      h.push_back({e.at("label").get<std::string>(), DistKind::H, parse_poly(e.at("poly").get<std::string>(), source)});
    std::vector<CoordinateImage> images;
    for (const auto& img : j.at("images")) {
      std::vector<int> kappa(h.size(), 0);
      if (img.is_string()) {
        images.push_back({parse_poly(img.get<std::string>(), source), kappa});
        continue;
      }
      const json kappa_j = img.value("kappa", json::object());
      for (const auto& [label, value] : kappa_j.items()) {
        auto it = std::find_if(h.begin(), h.end(), [&](const auto& e) { return e.label == label; });
        if (it == h.end()) throw StructuralError("unknown denominator label '" + label + "'");
        kappa[static_cast<std::size_t>(it - h.begin())] = value.get<int>();
      }
      images.push_back({parse_poly(img.at("num").get<std::string>(), source), kappa});
    }
    return AmbientMap::create(source, target, std::move(h), std::move(images), target_g);
  });
}

std::string pullback_seed_to_json(const PullbackSeed& ps) { return pullback_object(ps).dump(2) + "\n"; }

PullbackSeed pullback_seed_from_json(std::string_view text) {
  return guarded([&] {
    json j = detail::parse_document(text, "pullback_seed");
    auto vars = detail::table_from_json(j.at("ambient"));
    auto dist = detail::dist_from_json(j.at("distinguished"), vars);
    const auto& vj = j.at("variables");
    MultiQuiver q = quiver_from_json(j, static_cast<int>(vj.size()));
    std::vector<RationalSplit> cluster;
    for (const auto& v : vj) cluster.push_back(detail::split_from_json(v, dist));
    auto strings = strings_from_json(j, q, dist);
    std::vector<int> dv;
    for (int v : j.at("distinguished_vertices").get<std::vector<int>>()) dv.push_back(v - 1);
    std::string conv = j.value("convention", std::string("standard"));
    if (conv != "standard" && conv != "mirrored") throw ParseError("convention must be standard or mirrored");
    auto original = j.value("original_size", static_cast<std::size_t>(q.size()));
    return PullbackSeed(std::move(q), std::move(cluster), std::move(strings), dist, std::move(dv), original,
                        conv == "standard" ? ArrowConvention::kStandard : ArrowConvention::kMirrored);
  });
}

std::string bracket_to_json(const PoissonStructure& p) {
  json j = detail::header("bracket");
  j["variables"] = detail::table_to_json(*p.vars());
  json entries = json::array();
  for (const auto& [ij, value] : p.entries())
    entries.push_back({ij.first + 1, ij.second + 1, value.to_string()});
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

PoissonStructure bracket_from_json(std::string_view text) {
  return guarded([&] {
    json j = detail::parse_document(text, "bracket");
    PoissonStructure p(detail::table_from_json(j.at("variables")));
    for (const auto& e : j.at("entries")) {
      int i = e.at(0).get<int>() - 1, k = e.at(1).get<int>() - 1;
      if (i < 0 || k < 0 || static_cast<std::size_t>(i) >= p.dim() || static_cast<std::size_t>(k) >= p.dim() || i == k)
        throw StructuralError("bracket entry indices out of range");
      p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k), parse_poly(e.at(2).get<std::string>(), p.vars()));
    }
    return p;
  });
}

std::string certificate_to_json(const LaurentCertificate& cert) {
  json j = detail::header("certificate");
  j["seed"] = seed_object(cert.seed);
  j["target"] = cert.target.to_string();
  j["frozen_nonneg"] = cert.frozen_nonneg;
  json terms = json::array();
  for (const auto& t : cert.terms) terms.push_back({{"coeff", t.coeff.get_str()}, {"exponents", t.exponents}});
  j["terms"] = terms;
  return j.dump(2) + "\n";
}

LaurentCertificate certificate_from_json(std::string_view text) {
  return guarded([&] {
    json j = detail::parse_document(text, "certificate");
    const json& sj = j.at("seed");
    std::string kind = sj.value("kind", std::string());
    Seed seed = kind == "pullback_seed" ? pullback_seed_from_json(sj.dump()).to_seed()
                                        : seed_from_object(detail::parse_document(sj.dump(), "seed"));
    Poly target = parse_poly(j.at("target").get<std::string>(), seed.ambient());
    std::vector<CertificateTerm> terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exponents").get<std::vector<int>>();
      if (static_cast<int>(e.size()) != seed.quiver().size())
        throw StructuralError("certificate exponent vector has wrong length");
      terms.push_back({parse_rational(t.value("coeff", std::string("1"))), std::move(e)});
    }
    return LaurentCertificate{std::move(seed), std::move(target), std::move(terms), j.value("frozen_nonneg", true)};
  });
}

}  // namespace gcluster
