#include "gcluster/session.hpp"

#include <cstdio>
#include <mutex>

#include "gcluster/io.hpp"
#include "json_detail.hpp"

namespace gcluster {

using detail::json;

namespace {

SessionResponse reply(int status, json body) {
  body["v"] = kFormatVersion;
  return {status, body.dump()};
}

SessionResponse error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return reply(status, std::move(extra));
}

std::string node_class(const PullbackSeed& ps, int v) {
  if (ps.quiver().is_mutable(v)) return "mutable";
  return ps.dist_index(v) ? "distinguished" : "frozen";
}

json hull_json(const PullbackSeed& ps, std::size_t k, int m) {
  auto profile = compute_profile(ps, k, m);
  auto pair = ps.arrow_pair(k, m);
  json j = detail::profile_to_json(profile);
  j["k"] = ps.vertex_of(k) + 1;
  j["label"] = ps.dist()->entry(k).label;
  j["m"] = m + 1;
  j["pair"] = detail::mu_pair_to_json(pair);
  j["touch"] = touch_points(profile, -profile.tau);
  return j;
}

json state_json(const PullbackSeed& ps, const std::string& id, std::size_t step) {
  const auto& q = ps.quiver();
  const auto& D = *ps.dist();
  json j;
  j["session"] = id;
  j["step"] = step;
  j["key"] = payload_hash(pullback_key(ps));
  j["ambient"] = detail::table_to_json(*ps.ambient());
  j["convention"] = ps.convention() == ArrowConvention::kStandard ? "standard" : "mirrored";
  json dist = detail::dist_to_json(D);
  for (std::size_t k = 0; k < D.size(); ++k) dist[k]["vertex"] = ps.vertex_of(k) + 1;
  j["distinguished"] = dist;
  json nodes = json::array();
  for (int v = 0; v < q.size(); ++v) {
    json lam = json::array();
    for (std::size_t k = 0; k < D.size(); ++k) lam.push_back(ps.lambda(k, v));
    nodes.push_back({{"index", v + 1},
                     {"class", node_class(ps, v)},
                     {"multiplicity", q.multiplicity(v)},
                     {"variable", ps.var(v).to_string()},
                     {"hat", ps.cluster_poly(v).to_string()},
                     {"lambda", lam}});
  }
  j["nodes"] = nodes;
  auto edges = [](const MultiQuiver& mq) {
    json out = json::array();
    for (int a = 0; a < mq.size(); ++a)
      for (int b = 0; b < mq.size(); ++b)
        if (int c = mq.arrows(a, b)) out.push_back({{"from", a + 1}, {"to", b + 1}, {"count", c}});
    return out;
  };
  j["edges"] = edges(q);
  j["base_edges"] = edges(ps.base_quiver());
  json lambda = json::array();
  for (std::size_t k = 0; k < D.size(); ++k) {
    json row = json::array();
    for (int v = 0; v < q.size(); ++v) row.push_back(ps.lambda(k, v));
    lambda.push_back(row);
  }
  j["lambda"] = lambda;
  json strings = json::array();
  for (const auto& s : ps.strings()) {
    json row = json::array();
    for (const auto& p : s) row.push_back(p.to_string());
    strings.push_back(row);
  }
  j["strings"] = strings;
  json coherence = json::array();
  json relations = json::array();
  json disc = json::array();
  for (int m = 0; m < q.mutable_count(); ++m) {
    auto entry = coherence_check(ps, m);
    coherence.push_back(detail::coherence_entry_to_json(entry, D));
    json rel = {{"vertex", m + 1}, {"coherent", entry.coherent}};
    if (entry.coherent) {
      json terms = json::array();
      for (const auto& t : pullback_exchange(ps, m)) terms.push_back({{"hat", t.hat.to_string()}, {"mu", t.mu}});
      rel["terms"] = terms;
    }
    relations.push_back(rel);
  }
  for (std::size_t k = 0; k < D.size(); ++k) {
    json row = json::array();
    for (int m = 0; m < q.mutable_count(); ++m) row.push_back(discrepancy(ps, k, m));
    disc.push_back(row);
  }
  j["coherence"] = coherence;
  j["coherent"] = std::all_of(coherence.begin(), coherence.end(), [](const json& e) { return e["coherent"].get<bool>(); });
  j["relations"] = relations;
  j["discrepancy"] = disc;
  json hulls = json::array();
  for (int m = 0; m < q.mutable_count(); ++m)
    if (q.multiplicity(m) > 1)
      for (std::size_t k = 0; k < D.size(); ++k) hulls.push_back(hull_json(ps, k, m));
  j["hulls"] = hulls;
  return j;
}

}  // namespace

std::string payload_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Session::Session(PullbackSeed initial, std::string id) : id_(std::move(id)) { stack_.push_back(std::move(initial)); }

SessionResponse Session::state() const {
  std::shared_lock lock(mutex_);
  return reply(200, state_json(stack_.back(), id_, vertices_.size()));
}

SessionResponse Session::mutate(int vertex) {
  std::unique_lock lock(mutex_);
  const auto& cur = stack_.back();
  const int m = vertex - 1;
  if (m < 0 || m >= cur.quiver().size()) return error(404, "vertex " + std::to_string(vertex) + " does not exist");
  if (!cur.quiver().is_mutable(m)) return error(400, "vertex " + std::to_string(vertex) + " is frozen");
  try {
    auto next = mutate_pullback(cur, m);
    stack_.push_back(std::move(next));
    vertices_.push_back(vertex);
  } catch (const CoherenceError& e) {
    json report = json::array();
    for (int l = 0; l < cur.quiver().mutable_count(); ++l)
      report.push_back(detail::coherence_entry_to_json(coherence_check(cur, l), *cur.dist()));
    return error(409, e.what(), {{"vertex", vertex}, {"coherence", report}});
  }
  return reply(200, state_json(stack_.back(), id_, vertices_.size()));
}

SessionResponse Session::undo() {
  std::unique_lock lock(mutex_);
  if (vertices_.empty()) return error(409, "nothing to undo");
  stack_.pop_back();
  vertices_.pop_back();
  return reply(200, state_json(stack_.back(), id_, vertices_.size()));
}

SessionResponse Session::hull(int k_vertex, int m) const {
  std::shared_lock lock(mutex_);
  const auto& cur = stack_.back();
  auto k = cur.dist_index(k_vertex - 1);
  if (!k) return error(404, "vertex " + std::to_string(k_vertex) + " carries no distinguished polynomial");
  if (!cur.quiver().is_mutable(m - 1)) return error(404, "vertex " + std::to_string(m) + " is not mutable");
  return reply(200, hull_json(cur, *k, m - 1));
}

SessionResponse Session::history() const {
  std::shared_lock lock(mutex_);
  json h = json::array();
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    h.push_back({{"vertex", vertices_[i]}, {"key", payload_hash(pullback_key(stack_[i + 1]))}});
  return reply(200, {{"session", id_}, {"initial", payload_hash(pullback_key(stack_.front()))}, {"history", h}});
}

PullbackSeed Session::current() const {
  std::shared_lock lock(mutex_);
  return stack_.back();
}

std::size_t Session::steps() const {
  std::shared_lock lock(mutex_);
  return vertices_.size();
}

}  // namespace gcluster
