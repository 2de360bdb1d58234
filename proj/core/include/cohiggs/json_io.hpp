#pragma once

#include <nlohmann/json.hpp>

#include "cohiggs/catalog.hpp"
#include "cohiggs/higgs.hpp"

namespace cohiggs {

using Json = nlohmann::ordered_json;

Json ratToJson(const Rat& r);
Rat ratFromJson(const Json& j);

Json matToJson(const Mat& m);
Json latticeVecToJson(const LatticeVec& v);
LatticeVec latticeVecFromJson(const Json& j, std::size_t rank);

Json fanToJson(const Fan& f);
/// Accepts {"rays": [[x,y],...], "maxCones": optional [[i,j],...]}.
Fan fanFromJson(const Json& j);

Json polytopeToJson(const LatticePolytope& p);
LatticePolytope polytopeFromJson(const Json& j);

Json subspaceToJson(const Subspace& s);

Json rangeToJson(const HiggsRange& r);

/// Field file: {"surface": <id or fan object>, "sheaf": optional DSL,
/// "terms": [{"degree": [...], "map": [[[...],...],...]}]}.
Json fieldToJson(const HiggsField& f, const std::string& surface);
HiggsField fieldFromJson(const Json& j);

Json systemToJson(const IntegrabilitySystem& s);

Json hitchinToJson(const HitchinData& h);

/// Resolves --surface arguments: catalog id or a path to a fan JSON file.
Fan resolveSurface(const std::string& arg);

}  // namespace cohiggs
