#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sawlab/bounds.hpp"
#include "sawlab/height.hpp"
#include "sawlab/locality.hpp"
#include "sawlab/saw.hpp"

namespace sawlab {

using Json = nlohmann::json;

Json label_to_json(const VertexLabel& v);
VertexLabel label_from_json(const Json& j);

Json to_json(const CountTable& t);
CountTable table_from_json(const Json& j);

Json to_json(const BoundsReport& r);
Json to_json(const HeightValidationReport& r);
Json to_json(const SimilarityResult& r);
Json to_json(const LocalityReport& r);
Json to_json(const BridgeDecomposition& d);

/// Every stored invariant of a table that fails, as readable messages.
std::vector<std::string> verify_table(const CountTable& t);

/// Deterministic serialisation (two-space indent, trailing newline).
std::string dump(const Json& j);

std::string render_human(const CountTable& t);
std::string render_csv(const CountTable& t);

}  // namespace sawlab
