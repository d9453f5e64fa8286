#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "setdirect/catalog.hpp"
#include "setdirect/central.hpp"
#include "setdirect/factorization.hpp"
#include "setdirect/oracle.hpp"

namespace setdirect {

using Json = nlohmann::ordered_json;

/// Group from a JSON object of kind "permutations", "table", "catalog" or
/// "central_product". Throws ParseError on malformed input and
/// OrderLimitExceeded past opts.max_order.
NamedGroup parse_group(const Json& spec, const GroupOptions& opts = {});

/// A catalog name, or a path to a JSON group file (anything ending in
/// ".json" or naming an existing file).
NamedGroup load_group(std::string_view spec, const GroupOptions& opts = {});

/// Comma-separated tokens: decimal element indices, element labels, or the
/// keywords "G"/"all", "center", "identity", the group's own name (the whole
/// group) and any named subset of the construction ("left", "right", ...).
/// Digits always mean indices, so a label such as "1" must be written as
/// "identity". Throws ParseError.
Subset parse_subset(const NamedGroup& g, std::string_view text);

Json to_json(const Subset& s);
Json to_json(const GroupTable& g, const CentralDecomposition& cp);
Json to_json(const GroupTable& g, const ZActionData& action);
Json to_json(const ClassCountReport& r);
Json to_json(const DirectnessReport& r);
Json to_json(const SetDirectFactorization& f);
Json to_json(const MainTheoremReport& r);
Json to_json(const SystemReport& r);
Json to_json(const EnumerationResult& r);
Json to_json(const SuiteReport& r);

/// One row per factorization: |X|, |Y|, normalized flag, and the
/// space-separated class indices of X and of Y.
std::string enumeration_csv(const GroupTable& g, const EnumerationResult& r);

}  // namespace setdirect
