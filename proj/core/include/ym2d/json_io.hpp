#pragma once

#include <string>

#include <json.hpp>

#include "ym2d/enumerate.hpp"
#include "ym2d/surface.hpp"

namespace ym2d {

nlohmann::json graph_to_json(const SurfaceGraph& g);
SurfaceGraph graph_from_json(const nlohmann::json& j);
SurfaceGraph load_graph(const std::string& path);

nlohmann::json config_to_json(const WeightConfiguration& c);
WeightConfiguration config_from_json(const nlohmann::json& j);
WeightConfiguration load_config(const std::string& path);

}  // namespace ym2d
