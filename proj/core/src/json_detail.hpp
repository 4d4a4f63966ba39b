#pragma once

#include <json.hpp>

#include "gcluster/cluster.hpp"
#include "gcluster/hull.hpp"
#include "gcluster/pullback.hpp"

namespace gcluster::detail {

using nlohmann::json;

json parse_document(std::string_view text, std::string_view kind);
json header(std::string_view kind);

json table_to_json(const VarTable& t);
VarTablePtr table_from_json(const json& j);

json split_to_json(const RationalSplit& s);
RationalSplit split_from_json(const json& j, const DistSetPtr& dist);

json dist_to_json(const DistinguishedSet& d);
DistSetPtr dist_from_json(const json& j, const VarTablePtr& vars);

json arrows_to_json(const MultiQuiver& q);
json rational_to_json(const Rational& r);

json coherence_entry_to_json(const CoherenceEntry& e, const DistinguishedSet& d);
json mu_pair_to_json(const MuPair& p);
json profile_to_json(const HullProfile& p);

}  // namespace gcluster::detail
