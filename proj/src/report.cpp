#include "l2tree/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "l2tree/catalog.hpp"
#include "l2tree/errors.hpp"

namespace l2tree {

namespace {

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json envelope(const char* kind) { return {{"tool", kToolName}, {"version", kToolVersion}, {"kind", kind}}; }

Json oracle_section(const TorsionPresentation& tp, const AnalysisOptions& options,
                    std::map<std::string, HypothesisStatus>& statuses, std::optional<CosetTable>& table) {
  Json o;
  o["limit"] = options.limit;
  auto result = enumerate(tp, options.limit);
  if (std::holds_alternative<LimitExceeded>(result)) {
    o["status"] = "inconclusive";
    o["reason"] = "more than " + std::to_string(options.limit) +
                  " cosets needed; this is not evidence that G is infinite";
    return o;
  }
  table = std::get<CosetTable>(std::move(result));
  o["status"] = "completed";
  o["order"] = table->order();
  Json orders = Json::object();
  for (std::size_t i = 0; i < tp.relators.size(); ++i)
    orders["r" + std::to_string(i + 1)] = element_order(*table, tp.relators[i].root);
  o["element_orders"] = orders;
  statuses = verify_torsion_hypothesis(tp, *table);
  Json hyps = Json::object();
  for (const auto& [name, s] : statuses) hyps[name] = to_string(s);
  o["hypotheses"] = hyps;
  return o;
}

}  // namespace

Report analyze_presentation(const std::string& text, const AnalysisOptions& options) {
  const auto parsed = parse_presentation_logged(text);
  const auto& tp = parsed.presentation;

  Report report;
  auto& j = report.json;
  j = envelope("presentation");
  j["input"] = {{"text", text}, {"normalized", to_string(tp)}};
  j["normalization"] = parsed.normalization_log;

  const auto form = to_free_product_form(tp);
  j["invariants"] = {{"chiF", to_json(form.chi)}, {"m", form.normal_generators}};

  std::map<std::string, HypothesisStatus> statuses;
  std::optional<CosetTable> table;
  std::optional<Json> oracle;
  if (options.enumerate) oracle = oracle_section(tp, options, statuses, table);

  const auto verdict = evaluate_torsion_presentation(tp, statuses);
  j["verdict"] = to_json(verdict);

  if (oracle) {
    auto& o = *oracle;
    if (table) {
      const bool verified = std::all_of(statuses.begin(), statuses.end(),
                                        [](const auto& kv) { return kv.second == HypothesisStatus::Verified; });
      const auto n = std::to_string(table->order());
      if (!verified) {
        o["order_bound_check"] = "not applicable: a relator root has smaller order than its exponent";
      } else if (verdict.k.sign() <= 0) {
        o["order_bound_check"] = "CONTRADICTION: k = " + verdict.k.str() + " <= 0 but |G| = " + n;
        report.exit_code = kExitContradiction;
      } else if (Rat(mpz_class(n)) >= *verdict.order_lower_bound) {
        o["order_bound_check"] = "confirmed: |G| = " + n + " >= " + verdict.order_lower_bound->str();
      } else {
        o["order_bound_check"] = "CONTRADICTION: |G| = " + n + " < " + verdict.order_lower_bound->str();
        report.exit_code = kExitContradiction;
      }
      if (options.emit_table) o["table"] = to_json(*table);
    }
    j["oracle"] = o;
  }
  return report;
}

Report analyze_gog(const std::string& contents, const std::string& source, const AnalysisOptions& options) {
  const auto g = graph_from_text(contents);
  require_valid(g);

  Report report;
  auto& j = report.json;
  j = envelope("graph-of-groups");
  j["input"] = {{"file", source}, {"digest", fnv1a64(contents)}};

  Json inv;
  std::optional<Rat> chi;
  try {
    chi = chi_l2_fundamental(g);
    inv["chi"] = to_json(*chi);
  } catch (const std::runtime_error& e) {
    inv["chi"] = nullptr;
    inv["chi_error"] = e.what();
  }
  std::vector<std::string> b1_assumptions;
  try {
    const auto b1 = b1_l2_fundamental(g);
    inv["b1"] = to_json(b1.value);
    b1_assumptions = b1.assumptions;
  } catch (const std::runtime_error& e) {
    inv["b1"] = nullptr;
    inv["b1_error"] = e.what();
  }
  inv["b1_assumptions"] = b1_assumptions;
  inv["stable_letter_rank"] = stable_letter_rank(g);
  const auto fin = fundamental_group_order(g);
  inv["fundamental_group_order"] = fin.kind == Finiteness::Finite   ? fin.order->str()
                                   : fin.kind == Finiteness::Infinite ? std::string("inf")
                                                                      : std::string("unknown");
  inv["fundamental_group_order_reason"] = fin.reason;
  j["invariants"] = inv;

  Json class_c = Json::array();
  bool any_false = false, any_undetermined = false;
  auto record = [&](const char* kind, const std::string& id, const GroupDescriptor& d) {
    const auto r = is_in_class_C(d);
    any_false = any_false || r.status == Truth::False;
    any_undetermined = any_undetermined || r.status == Truth::Undetermined;
    const char* s = r.status == Truth::True ? "true" : r.status == Truth::False ? "false" : "undetermined";
    class_c.push_back({{"kind", kind}, {"id", id}, {"status", s}, {"reason", r.reason}});
  };
  for (const auto& v : g.vertices) record("vertex", v.id, v.group);
  for (const auto& e : g.edges) record("edge", e.id, e.group);
  j["class_C"] = class_c;

  if (options.normal_generators) {
    if (!chi) {
      j["verdict"] = nullptr;
      j["verdict_error"] = "chi of the fundamental group is unavailable";
    } else {
      std::map<std::string, HypothesisStatus> hyps;
      hyps[hypothesis::kStabilizersInClassC] = any_false          ? HypothesisStatus::Violated
                                               : !any_undetermined ? HypothesisStatus::Verified
                                               : options.assume_class_c ? HypothesisStatus::Asserted
                                                                         : HypothesisStatus::Undetermined;
      hyps[hypothesis::kActionCocompact] = HypothesisStatus::Verified;
      auto v = evaluate_quotient(*chi, *options.normal_generators, hyps);
      v.assumptions = b1_assumptions;
      if (options.assume_class_c && any_undetermined && !any_false) v.assumptions.emplace_back("assume-class-C");
      j["verdict"] = to_json(v);
    }
  }
  return report;
}

Report run_census(const std::vector<CensusInput>& inputs, const AnalysisOptions& options) {
  Report report;
  auto& j = report.json;
  j = envelope("census");
  Json rows = Json::array();
  std::map<std::string, std::size_t> counts;
  std::size_t errors = 0;
  for (const auto& in : inputs) {
    Json row{{"name", in.name}};
    try {
      auto r = in.is_graph ? analyze_gog(in.contents, in.name, options) : analyze_presentation(in.contents, options);
      if (r.exit_code == kExitContradiction) report.exit_code = kExitContradiction;
      const auto& v = r.json.contains("verdict") ? r.json["verdict"] : Json();
      ++counts[v.is_object() ? v["classification"].get<std::string>() : std::string("none")];
      row["report"] = std::move(r.json);
    } catch (const std::exception& e) {
      ++errors;
      row["error"] = e.what();
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  Json by_class = Json::object();
  for (const auto& [c, n] : counts) by_class[c] = n;
  j["summary"] = {{"rows", inputs.size()}, {"errors", errors}, {"by_classification", by_class}};
  return report;
}

std::vector<CensusInput> builtin_census() {
  std::vector<CensusInput> out;
  for (auto& e : catalog::triangle_census()) out.push_back({e.name, e.text, false});
  return out;
}

std::vector<CensusInput> directory_census(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidInputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CensusInput> out;
  for (const auto& p : files) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out.push_back({p.filename().string(), ss.str(), p.extension() == ".json"});
  }
  return out;
}

namespace {

std::string str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render_verdict(std::ostream& os, const Json& v) {
  os << "k = " << str(v["k"]) << "\n";
  os << "classification: " << str(v["classification"]) << "\n";
  os << "b1(G) lower bound: " << str(v["b1_lower_bound"]) << "\n";
  if (v.contains("order_lower_bound")) os << "IF G is finite THEN |G| >= " << str(v["order_lower_bound"]) << "\n";
  if (v.contains("engine")) {
    const auto& e = v["engine"];
    os << "n = " << str(e["n"]) << ", m = " << str(e["m"]) << ", sum 1/k_i = " << str(e["sum_reciprocal_k"])
       << ", n - sum 1/k_i = " << str(e["n_minus_sum_reciprocal_k"]) << "\n";
  }
  os << "hypotheses:\n";
  for (const auto& [name, s] : v["hypotheses"].items()) os << "  " << name << ": " << str(s) << "\n";
  if (!v["assumptions"].empty()) {
    os << "assumptions:";
    for (const auto& a : v["assumptions"]) os << " " << str(a);
    os << "\n";
  }
  os << "notes:\n";
  for (const auto& n : v["notes"]) os << "  - " << str(n) << "\n";
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  const auto& j = json;
  os << str(j["tool"]) << " " << str(j["version"]) << "\n";
  const auto kind = str(j["kind"]);
  if (kind == "presentation") {
    os << "presentation: " << str(j["input"]["normalized"]) << "\n";
    for (const auto& n : j["normalization"]) os << "normalization: " << str(n) << "\n";
    os << "chi(F) = " << str(j["invariants"]["chiF"]) << ", m = " << str(j["invariants"]["m"]) << "\n";
    render_verdict(os, j["verdict"]);
    if (j.contains("oracle")) {
      const auto& o = j["oracle"];
      if (str(o["status"]) != "completed") {
        os << "oracle inconclusive: " << str(o["reason"]) << "\n";
      } else {
        os << "oracle: |G| = " << str(o["order"]) << "\n";
        for (const auto& [r, n] : o["element_orders"].items()) os << "  order of root " << r << ": " << str(n) << "\n";
        for (const auto& [h, s] : o["hypotheses"].items()) os << "  " << h << ": " << str(s) << "\n";
        os << "  order bound: " << str(o["order_bound_check"]) << "\n";
      }
    }
  } else if (kind == "graph-of-groups") {
    const auto& inv = j["invariants"];
    os << "input: " << str(j["input"]["file"]) << " (" << str(j["input"]["digest"]) << ")\n";
    os << "chi = " << str(inv["chi"]) << "\n";
    if (inv.contains("chi_error")) os << "  " << str(inv["chi_error"]) << "\n";
    os << "b1 = " << str(inv["b1"]);
    for (const auto& a : inv["b1_assumptions"]) os << " [" << str(a) << "]";
    os << "\n";
    if (inv.contains("b1_error")) os << "  " << str(inv["b1_error"]) << "\n";
    os << "stable letter rank = " << str(inv["stable_letter_rank"]) << "\n";
    os << "fundamental group order: " << str(inv["fundamental_group_order"]) << " ("
       << str(inv["fundamental_group_order_reason"]) << ")\n";
    os << "class C:\n";
    for (const auto& c : j["class_C"])
      os << "  " << str(c["kind"]) << " " << str(c["id"]) << ": " << str(c["status"]) << " (" << str(c["reason"])
         << ")\n";
    if (j.contains("verdict")) {
      if (j["verdict"].is_null())
        os << "verdict unavailable: " << str(j["verdict_error"]) << "\n";
      else
        render_verdict(os, j["verdict"]);
    }
  } else {
    for (const auto& row : j["rows"]) {
      os << str(row["name"]) << ": ";
      if (row.contains("error")) {
        os << "ERROR " << str(row["error"]) << "\n";
        continue;
      }
      const auto& r = row["report"];
      if (!r.contains("verdict") || r["verdict"].is_null()) {
        os << "no verdict\n";
        continue;
      }
      const auto& v = r["verdict"];
      os << str(v["classification"]) << ", k = " << str(v["k"]) << ", b1 >= " << str(v["b1_lower_bound"]);
      if (v.contains("order_lower_bound")) os << ", IF finite THEN |G| >= " << str(v["order_lower_bound"]);
      if (r.contains("oracle")) {
        const auto& o = r["oracle"];
        if (str(o["status"]) == "completed")
          os << ", oracle |G| = " << str(o["order"]) << " (" << str(o["order_bound_check"]) << ")";
        else
          os << ", oracle inconclusive";
      }
      os << "\n";
    }
    const auto& s = j["summary"];
    os << "rows: " << str(s["rows"]) << ", errors: " << str(s["errors"]) << "\n";
    for (const auto& [c, n] : s["by_classification"].items()) os << "  " << c << ": " << str(n) << "\n";
  }
  return os.str();
}

}  // namespace l2tree
