#pragma once

#include <string>
#include <string_view>

#include "gcluster/cluster.hpp"
#include "gcluster/pullback.hpp"

namespace gcluster {

class PoissonStructure;
struct LaurentCertificate;

// JSON file formats. Polynomials travel as canonical text, vertices are 1-based and every
// document carries "v": 1 and a "kind" tag. Parse errors throw ParseError, inconsistent
// content throws StructuralError.
inline constexpr int kFormatVersion = 1;

std::string seed_to_json(const Seed& seed);
Seed seed_from_json(std::string_view text);

// The target G set comes from the seed the map is applied to.
std::string map_to_json(const AmbientMap& map);
AmbientMap map_from_json(std::string_view text, const DistSetPtr& target_g);

std::string pullback_seed_to_json(const PullbackSeed& ps);
PullbackSeed pullback_seed_from_json(std::string_view text);

std::string bracket_to_json(const PoissonStructure& p);
PoissonStructure bracket_from_json(std::string_view text);

std::string certificate_to_json(const LaurentCertificate& cert);
LaurentCertificate certificate_from_json(std::string_view text);

// "seed" or "pullback_seed" etc.; throws ParseError on malformed documents.
std::string document_kind(std::string_view text);

}  // namespace gcluster
