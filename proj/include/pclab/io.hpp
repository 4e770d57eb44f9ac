#pragma once
// JSON instance files, schema_version "1".
//
// Every file is an object {"schema_version": "1", "kind": K, ...payload}. Point and cell
// references inside a payload may be indices or names.

#include <string>
#include <variant>

#include <json.hpp>

#include "pclab/adjacency.hpp"
#include "pclab/duality.hpp"
#include "pclab/precontact.hpp"
#include "pclab/report.hpp"
#include "pclab/structures.hpp"
#include "pclab/topology.hpp"

namespace pclab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

using Instance = std::variant<BooleanAlgebra, PrecontactAlgebra, FiniteSpace, TopologicalPair, TwoPrecontactSpace,
                              TwoContactSpace, MereotopologicalPair, PcaMorphism, PcsMorphism, AdjacencySpace>;

/// "algebra", "pca", "space", "pair", "pcs", "cs", "mereo", "morphism", "adjacency"
const char* kind_name(const Instance& instance);

/// Throws ParseError with the JSON location on malformed text, a missing or unknown kind,
/// a wrong schema_version or a payload that does not fit its kind.
Instance parse_instance(const std::string& text);
Instance read_instance(const std::string& path);

Json to_json(const Instance& instance);
std::string dump(const Json& j);

// Payload encoders, also used for nested objects.
Json algebra_json(const BooleanAlgebra& b);
Json pca_json(const PrecontactAlgebra& a);
Json space_json(const FiniteSpace& x);
Json pcs_json(const TwoPrecontactSpace& s);
Json adjacency_json(const AdjacencySpace& a);
Json report_json(const DualityReport& r, bool timing = true);

}  // namespace pclab::io
