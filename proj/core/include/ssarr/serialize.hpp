#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ssarr/algebra.hpp"
#include "ssarr/classify.hpp"
#include "ssarr/projgeo.hpp"
#include "ssarr/wclass.hpp"

namespace ssarr {

using Json = nlohmann::ordered_json;

Json to_json(const CycNumber& x);
CycNumber cycnumber_from_json(const CycField& field, const Json& j);

Json to_json(const Triple& t);

/// {"cyclotomic_order": n, "lines": [[cx, cy, cz], ...]}, each coefficient an
/// array of phi(n) "p/q" strings.
Json to_json(const Arrangement& arrangement);
Arrangement arrangement_from_json(const Json& j);

Arrangement load_arrangement(const std::string& path);
void save_json(const Json& j, const std::string& path);

Json to_json(const Lattice& lattice);
Json to_json(const Census& census);
Json to_json(const ClassifyReport& report);
Json to_json(const WClass& cls);
Json to_json(const RecoveredClass& rec);
Json to_json(const MdrResult& r);
Json to_json(const MultiRestriction& r);
Json to_json(const MultiExponents& r);
Json to_json(const NodalResult& r);

}  // namespace ssarr
