#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <vector>

#include "gcluster/pullback.hpp"

namespace gcluster {

// JSON response with an HTTP-style status code. Every body carries "v": 1.
struct SessionResponse {
  int status = 200;
  std::string body;
};

// Mutation session over a pullback seed (plain seeds enter through the identity map).
// Commands are serialized; reads may run concurrently.
class Session {
 public:
  explicit Session(PullbackSeed initial, std::string id = "default");

  SessionResponse state() const;
  // Vertices are 1-based as in every external format.
  SessionResponse mutate(int vertex);
  SessionResponse undo();
  // k is the vertex carrying the distinguished polynomial.
  SessionResponse hull(int k_vertex, int m) const;
  SessionResponse history() const;

  PullbackSeed current() const;
  std::size_t steps() const;

 private:
  std::string id_;
  mutable std::shared_mutex mutex_;
  std::vector<PullbackSeed> stack_;
  std::vector<int> vertices_;
};

// 64-bit FNV-1a of the text, as 16 hex digits.
std::string payload_hash(const std::string& text);

}  // namespace gcluster
