#include "server.hpp"

#include <json.hpp>

namespace gcluster::tools {

namespace {

void send(httplib::Response& res, const SessionResponse& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

}  // namespace

void register_routes(httplib::Server& server, Session& session) {
  server.Get("/state", [&](const httplib::Request&, httplib::Response& res) { send(res, session.state()); });
  server.Get("/history", [&](const httplib::Request&, httplib::Response& res) { send(res, session.history()); });
  server.Post("/undo", [&](const httplib::Request&, httplib::Response& res) { send(res, session.undo()); });
  server.Post("/mutate", [&](const httplib::Request& req, httplib::Response& res) {
    int vertex = 0;
    try {
      auto body = nlohmann::json::parse(req.body);
      vertex = body.is_object() ? body.at("vertex").get<int>() : body.get<int>();
    } catch (const nlohmann::json::exception&) {
      send(res, {400, R"({"error":"body must be {\"vertex\": n}","v":1})"});
      return;
    }
    send(res, session.mutate(vertex));
  });
  server.Get(R"(/hull/(\d+)/(\d+))", [&](const httplib::Request& req, httplib::Response& res) {
    send(res, session.hull(std::stoi(req.matches[1]), std::stoi(req.matches[2])));
  });
}

}  // namespace gcluster::tools
