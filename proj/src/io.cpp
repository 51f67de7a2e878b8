#include "leavitt/io.hpp"

#include <fstream>
#include <set>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

using nlohmann::json;

void only_fields(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw Error(Errc::kInvalidInput, std::string(what) + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw Error(Errc::kInvalidInput, "unknown field '" + key + "' in " + what);
  for (const char* key : allowed)
    if (!j.contains(key)) throw Error(Errc::kInvalidInput, std::string("missing field '") + key + "' in " + what);
}

std::string string_field(const json& j, const char* key) {
  if (!j.at(key).is_string()) throw Error(Errc::kInvalidInput, std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace

Graph graph_from_json(const json& j) {
  only_fields(j, {"vertices", "edges"}, "graph");
  if (!j["vertices"].is_array() || !j["edges"].is_array())
    throw Error(Errc::kInvalidInput, "'vertices' and 'edges' must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw Error(Errc::kInvalidInput, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : j["edges"]) {
    only_fields(e, {"id", "src", "dst"}, "edge");
    edges.push_back({string_field(e, "id"), string_field(e, "src"), string_field(e, "dst")});
  }
  return Graph::build(std::move(vertices), std::move(edges));
}

json graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (Vertex v : g.vertices()) vertices.push_back(g.name(v));
  json edges = json::array();
  for (const auto& e : g.edge_specs()) edges.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return {{"vertices", vertices}, {"edges", edges}};
}

Graph load_graph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::kInvalidInput, "cannot open graph file '" + file.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(Errc::kInvalidInput, "malformed JSON in '" + file.string() + "': " + e.what());
  }
  return graph_from_json(j);
}

namespace {

json chain_to_json(const SkewRing& ring, const CertificateChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps)
    steps.push_back({{"side", s.side == Side::kLeft ? "L" : "R"}, {"mul", ring.to_string(s.multiplier)}});
  return {{"source", ring.to_string(chain.source)}, {"steps", steps}};
}

CertificateChain chain_from_json(const SkewRing& ring, const json& j) {
  CertificateChain chain;
  chain.source = ring.parse(string_field(j, "source"));
  if (!j.at("steps").is_array()) throw Error(Errc::kInvalidInput, "'steps' must be an array");
  for (const auto& s : j.at("steps")) {
    only_fields(s, {"side", "mul"}, "step");
    std::string side = string_field(s, "side");
    if (side != "L" && side != "R") throw Error(Errc::kInvalidInput, "step side must be \"L\" or \"R\"");
    chain.steps.push_back({side == "L" ? Side::kLeft : Side::kRight, ring.parse(string_field(s, "mul"))});
  }
  return chain;
}

}  // namespace

json certificate_to_json(const SkewRing& ring, const Certificate& cert) {
  json out;
  if (cert.chains.size() == 1) {
    out = chain_to_json(ring, cert.chains.front());
  } else {
    json terms = json::array();
    for (const auto& c : cert.chains) terms.push_back(chain_to_json(ring, c));
    out["terms"] = terms;
  }
  out["result"] = ring.to_string(cert.claimed_result);
  return out;
}

Certificate certificate_from_json(const SkewRing& ring, const json& j) {
  Certificate cert;
  if (j.is_object() && j.contains("terms")) {
    only_fields(j, {"terms", "result"}, "certificate");
    for (const auto& t : j["terms"]) {
      only_fields(t, {"source", "steps"}, "certificate term");
      cert.chains.push_back(chain_from_json(ring, t));
    }
  } else {
    only_fields(j, {"source", "steps", "result"}, "certificate");
    cert.chains.push_back(chain_from_json(ring, j));
  }
  cert.claimed_result = ring.parse(string_field(j, "result"));
  return cert;
}

json report_to_json(const Graph& g, const SimplicityReport& report) {
  json subsets = json::array();
  for (const auto& set : report.hs_subsets) {
    json ids = json::array();
    for (Vertex v : set) ids.push_back(g.name(v));
    subsets.push_back(ids);
  }
  json cond = {{"holds", report.condition_L.holds}};
  cond["witness"] = report.condition_L.exitless_cycle ? json(g.to_string(*report.condition_L.exitless_cycle)) : json();
  return {{"condition_L", cond}, {"hs_subsets", subsets}, {"criteria_met", report.criteria_met}};
}

}  // namespace leavitt
