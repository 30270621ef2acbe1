#pragma once

#include <json.hpp>

#include "obst/arrangement.hpp"
#include "obst/drawing.hpp"
#include "obst/graphs.hpp"
#include "obst/verify.hpp"

namespace obst {

// Scalars travel as "num/den" strings in lowest terms in every JSON schema.

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);        // {n, edges:[[u,v]...]}
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json drawing_to_json(const BipartiteDrawing& d);  // {m,n,w,epsilon?,P,Q}
BipartiteDrawing drawing_from_json(const nlohmann::json& j);

// {placement:[[x,y]...], obstacles:[{kind,vertices}...], tags:[...]}
nlohmann::json rep_to_json(const ObstacleRepresentation& r);
ObstacleRepresentation rep_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerifyReport& r);

nlohmann::json stats_to_json(const ArrangementStats& s);

}  // namespace obst
