#pragma once

#include "json.hpp"
#include "reticular/catalog.hpp"
#include "reticular/classifier.hpp"
#include "reticular/discriminant.hpp"
#include "reticular/local_algebra.hpp"
#include "reticular/unfoldings.hpp"

namespace reticular {

using Json = nlohmann::ordered_json;

Json to_json(const QuotientReport& q);
Json to_json(const ClassifyResult& c);
Json to_json(const VersalityReport& v);
Json to_json(const StabilityReport& s);
Json to_json(const CatalogEntry& e);
// Summary only: counts per stratum and the run parameters.
Json mesh_summary(const DiscriminantMesh& m);

}  // namespace reticular
