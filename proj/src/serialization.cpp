#include "l2tree/serialization.hpp"

#include "l2tree/catalog.hpp"
#include "l2tree/errors.hpp"

namespace l2tree {

namespace {

[[noreturn]] void schema(const std::string& what) { throw InvalidInputError("schema violation: " + what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) schema(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) schema("rational must be a \"p/q\" string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    schema(e.what());
  }
}

Json to_json(const GroupOrder& o) {
  if (o.is_infinite()) return "inf";
  return o.value();
}

GroupOrder order_from_json(const Json& j) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() >= 1) return GroupOrder::finite(j.get<std::uint64_t>());
  if (j.is_string() && j.get<std::string>() == "inf") return GroupOrder::infinite();
  schema("order must be a positive integer or \"inf\"");
}

Json to_json(const GroupDescriptor& d) {
  Json j;
  j["name"] = d.name;
  j["order"] = to_json(d.order);
  if (d.b1) j["b1"] = to_json(*d.b1);
  if (d.b2) j["b2"] = to_json(*d.b2);
  if (d.chi) j["chi"] = to_json(*d.chi);
  if (d.two_dim_model) j["two_dim_model"] = true;
  return j;
}

GroupDescriptor descriptor_from_json(const Json& j) {
  if (j.is_string()) {
    if (auto d = catalog::lookup(j.get<std::string>())) return *d;
    schema("unknown catalog group \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) schema("group descriptor must be an object or a catalog name");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "order" && key != "b1" && key != "b2" && key != "chi" && key != "two_dim_model")
      schema("group descriptor: unknown field \"" + key + "\"");
  GroupDescriptor d;
  d.name = string_field(j, "name", "group descriptor");
  d.order = order_from_json(field(j, "order", "group '" + d.name + "'"));
  if (j.contains("b1")) d.b1 = rat_from_json(j["b1"]);
  if (j.contains("b2")) d.b2 = rat_from_json(j["b2"]);
  if (j.contains("chi")) d.chi = rat_from_json(j["chi"]);
  if (j.contains("two_dim_model")) {
    if (!j["two_dim_model"].is_boolean()) schema("group '" + d.name + "': two_dim_model must be a boolean");
    d.two_dim_model = j["two_dim_model"].get<bool>();
  }
  return d;
}

Json to_json(const GraphOfGroups& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"id", v.id}, {"group", to_json(v.group)}});
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"id", e.id}, {"ends", Json::array({e.source, e.target})}, {"group", to_json(e.group)}});
  return {{"vertices", vertices}, {"edges", edges}};
}

GraphOfGroups graph_from_json(const Json& j) {
  if (!j.is_object()) schema("graph of groups must be an object");
  GraphOfGroups g;
  const auto& vs = field(j, "vertices", "graph");
  if (!vs.is_array()) schema("\"vertices\" must be an array");
  for (const auto& v : vs) {
    const auto id = string_field(v, "id", "vertex");
    g.vertices.push_back({id, descriptor_from_json(field(v, "group", "vertex '" + id + "'"))});
  }
  const auto edges = j.contains("edges") ? j.at("edges") : Json::array();
  if (!edges.is_array()) schema("\"edges\" must be an array");
  for (const auto& e : edges) {
    const auto id = string_field(e, "id", "edge");
    const auto& ends = field(e, "ends", "edge '" + id + "'");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      schema("edge '" + id + "': \"ends\" must be two vertex ids");
    g.edges.push_back({id, ends[0].get<std::string>(), ends[1].get<std::string>(),
                       descriptor_from_json(field(e, "group", "edge '" + id + "'"))});
  }
  return g;
}

GraphOfGroups graph_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Json to_json(const Verdict& v) {
  Json j;
  j["k"] = to_json(v.k);
  j["classification"] = to_string(v.classification);
  j["b1_lower_bound"] = to_json(v.b1_lower_bound);
  if (v.order_lower_bound) j["order_lower_bound"] = to_json(*v.order_lower_bound);
  Json hyps = Json::object();
  for (const auto& [name, status] : v.hypotheses) hyps[name] = to_string(status);
  j["hypotheses"] = hyps;
  j["assumptions"] = v.assumptions;
  j["notes"] = v.notes;
  if (v.engine) {
    j["engine"] = {{"n", v.engine->n},
                   {"m", v.engine->m},
                   {"sum_reciprocal_k", to_json(v.engine->sum_reciprocal_k)},
                   {"n_minus_sum_reciprocal_k", to_json(v.engine->n_minus_sum)}};
  }
  return j;
}

Json to_json(const CosetTable& t) {
  Json columns = Json::object();
  for (std::uint32_t g = 0; g < t.generators().size(); ++g) {
    for (bool inv : {false, true}) {
      Json col = Json::array();
      for (std::uint32_t c = 0; c < t.order(); ++c) col.push_back(t.image(c, {g, inv}) + 1);
      columns[t.generators()[g] + (inv ? "^-1" : "")] = col;
    }
  }
  return {{"order", t.order()}, {"generators", t.generators()}, {"columns", columns}};
}

}  // namespace l2tree
