#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperfix/monoid.hpp"
#include "hyperfix/poset.hpp"
#include "hyperfix/relsys.hpp"
#include "hyperfix/vspace.hpp"
#include "hyperfix/zigzag.hpp"

namespace hyperfix::io {

using json = nlohmann::json;

/// Parses text; parse errors become InputError carrying nlohmann's line/column message.
json parse_json(const std::string& text, const std::string& origin = "<input>");
json read_json_file(const std::string& path);

UpSet upset_from_json(const json& j);
json upset_to_json(const UpSet& u);

TableMonoid monoid_from_json(const json& j);
json monoid_to_json(const TableMonoid& m);

using AnySpace = std::variant<VSpace<TableMonoid>, VSpace<WordMonoid>>;
/// `monoid_override` (if nonempty) replaces the document's "monoid" field.
AnySpace vspace_from_json(const json& j, const std::string& monoid_override = "");
json vspace_to_json(const VSpace<TableMonoid>& s);
json vspace_to_json(const VSpace<WordMonoid>& s);

Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

Digraph digraph_from_json(const json& j);
json digraph_to_json(const Digraph& g);

RelSys relsys_from_json(const json& j);
json relsys_to_json(const RelSys& r);

/// A map given as an object {element: image} over the named carrier; {"map": {...}} is also accepted.
SelfMap map_from_json(const json& j, const std::vector<std::string>& elements);
json map_to_json(const VMap& f, const std::vector<std::string>& from, const std::vector<std::string>& to);

Subset subset_from_json(const json& j, const std::vector<std::string>& elements);
json subset_to_json(Subset a, const std::vector<std::string>& elements);

enum class InputKind { vspace, poset, digraph, relsys };
/// Decided by the keys present: distance, covers, arcs or relations.
InputKind detect_kind(const json& j);

}  // namespace hyperfix::io
