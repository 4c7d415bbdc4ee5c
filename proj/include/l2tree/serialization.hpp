#pragma once

#include <string>

#include <json.hpp>

#include "l2tree/coset_enumeration.hpp"
#include "l2tree/criteria.hpp"
#include "l2tree/descriptors.hpp"
#include "l2tree/graph_of_groups.hpp"
#include "l2tree/rational.hpp"

// JSON forms of the library's values. Rationals are always strings "p/q" (or
// "p"); orders are positive integers or "inf". Readers throw
// InvalidInputError on schema violations.
namespace l2tree {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const GroupOrder& o);
GroupOrder order_from_json(const Json& j);

Json to_json(const GroupDescriptor& d);
/// Besides the explicit object form, accepts a catalog name such as "C6" or "F2".
GroupDescriptor descriptor_from_json(const Json& j);

Json to_json(const GraphOfGroups& g);
GraphOfGroups graph_from_json(const Json& j);
GraphOfGroups graph_from_text(const std::string& text);

Json to_json(const Verdict& v);
Json to_json(const CosetTable& t);

}  // namespace l2tree
