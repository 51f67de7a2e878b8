#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "leavitt/certificate.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/ideal_tools.hpp"

namespace leavitt {

// {"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}; unknown fields are rejected.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
Graph load_graph(const std::filesystem::path& file);

// Single chain: {"source", "steps": [{"side": "L"|"R", "mul"}], "result"}.
// Sums of chains: {"terms": [{"source", "steps"}, ...], "result"}.
// Elements use the canonical printed form.
nlohmann::json certificate_to_json(const SkewRing& ring, const Certificate& cert);
Certificate certificate_from_json(const SkewRing& ring, const nlohmann::json& j);

nlohmann::json report_to_json(const Graph& g, const SimplicityReport& report);

}  // namespace leavitt
