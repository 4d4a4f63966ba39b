#pragma once

#include <httplib.h>

#include "gcluster/session.hpp"

namespace gcluster::tools {

// GET /state, POST /mutate {"vertex": n}, POST /undo, GET /hull/<k>/<m>, GET /history.
void register_routes(httplib::Server& server, Session& session);

}  // namespace gcluster::tools
