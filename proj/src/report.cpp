#include "hfk11/report.hpp"

#include <cstdio>

namespace hfk11 {

using nlohmann::json;

namespace {

json table_json(const DifferentialTable& t) {
  json rows = json::array();
  for (const auto& e : t.entries) {
    if (t.mode == DifferentialMode::kFull) {
      rows.push_back({e.from, e.to, e.n_w, e.n_z});
    } else {
      rows.push_back({e.from, e.to});
    }
  }
  return rows;
}

std::vector<std::pair<int, int>> read_pairs(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw Error(ErrorCode::kInputFormat, std::string(key) + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw Error(ErrorCode::kInputFormat, std::string(key) + " entries must be integer pairs");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

}  // namespace

json matchings_json(const OneOneDiagram& d) {
  json through = json::array();
  for (const auto& t : d.through_strands()) through.push_back({t.bottom, t.top});
  return json{{"p", d.p()},
              {"bottom", d.bottom_pairs()},
              {"top", d.top_pairs()},
              {"through", through},
              {"z_gap", d.anchors().z_gap},
              {"w_gap", d.anchors().w_gap}};
}

json report_json(const Analysis& a) {
  const InvariantReport& r = a.report;
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["status"] = "ok";
  if (r.params) {
    json params{{"p", r.params->p}, {"q", r.params->q}, {"r", r.params->r}, {"s", r.params->s}};
    if (r.params->family_index) params["family_index"] = *r.params->family_index;
    doc["parameters"] = params;
  } else {
    doc["parameters"] = nullptr;
  }
  doc["diagram"] = matchings_json(a.diagram);
  doc["window"] = a.window;

  json gens = json::array();
  for (const auto& g : a.gradings) {
    gens.push_back({{"index", g.index}, {"alexander", g.alexander}, {"maslov", g.maslov}});
  }
  doc["generators"] = gens;
  doc["differentials"] = {{"hat_knot", table_json(a.hat_knot)},
                          {"hat_s3", table_json(a.hat_s3)},
                          {"full", table_json(a.full)}};

  json hfk = json::array();
  for (auto [am, dim] : r.hfk) hfk.push_back({am.first, am.second, dim});
  doc["hfk"] = hfk;
  json poincare = json::array();
  for (auto [ma, c] : r.poincare) poincare.push_back({ma.first, ma.second, c});
  doc["poincare"] = poincare;
  json alexander = json::array();
  for (auto [e, c] : r.alexander) alexander.push_back({e, c});
  doc["alexander"] = alexander;

  doc["generator_count"] = r.generator_count;
  doc["seifert_genus"] = r.seifert_genus;
  doc["tau"] = r.tau;
  doc["verdicts"] = {{"conway_trivial", r.conway_trivial},
                     {"g4_lower_bound", r.g4_lower_bound},
                     {"topologically_slice_certified", r.topologically_slice_certified},
                     {"smoothly_slice_obstructed", r.smoothly_slice_obstructed}};
  doc["notes"] = r.g4_note ? json::array({*r.g4_note}) : json::array();
  doc["digest"] = digest_of(doc);
  return doc;
}

json failure_json(const Error& error) {
  json doc{{"schema_version", kSchemaVersion},
           {"status", "error"},
           {"error", {{"code", std::string(error_code_name(error.code()))}, {"message", error.what()}}}};
  doc["digest"] = digest_of(doc);
  return doc;
}

std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

std::string digest_of(const json& doc) {
  json body = doc;
  body.erase("digest");
  const std::string text = body.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

OneOneDiagram parse_matchings(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInputFormat, std::string("matchings file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_number_integer()) {
    throw Error(ErrorCode::kInputFormat, "matchings file needs an integer field p");
  }
  std::vector<ThroughStrand> through;
  for (auto [b, t] : read_pairs(doc, "through")) through.push_back({b, t});
  std::optional<Anchors> anchors;
  if (doc.contains("z_gap") || doc.contains("w_gap")) {
    if (!doc.contains("z_gap") || !doc.contains("w_gap") || !doc["z_gap"].is_number_integer() ||
        !doc["w_gap"].is_number_integer()) {
      throw Error(ErrorCode::kInputFormat, "z_gap and w_gap must be given together as integers");
    }
    anchors = Anchors{doc["z_gap"].get<int>(), doc["w_gap"].get<int>()};
  }
  return from_matchings(doc["p"].get<int>(), read_pairs(doc, "bottom"), read_pairs(doc, "top"), through,
                        anchors);
}

}  // namespace hfk11
