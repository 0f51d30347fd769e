// Copyright 2026 ciugraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ciugraph/spatial.hpp"

#include <cmath>

#include <json.hpp>

#include "ciugraph/defaults.hpp"
#include "ciugraph/errors.hpp"

namespace ciugraph {

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::kTopLeft: return "TL";
    case Quadrant::kTopRight: return "TR";
    case Quadrant::kBottomLeft: return "BL";
    case Quadrant::kBottomRight: return "BR";
  }
  return "??";
}

Point CoordinateTable::at(CiuId id) const {
  auto it = coords.find(id);
  if (it == coords.end())
    throw MissingCoordinate("no coordinate for CIU " + std::to_string(id));
  return it->second;
}

CoordinateTable load_coordinates(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("coordinates: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coords"))
    throw SchemaError("coordinates: expected an object with a \"coords\" map");

  CoordinateTable table;
  try {
    table.width = doc.value("width", 546.0);
    table.height = doc.value("height", 290.0);
    if (doc.contains("center")) {
      const auto& c = doc.at("center");
      if (!c.is_array() || c.size() != 2)
        throw SchemaError("coordinates: center must be [cx, cy]");
      table.center = {c[0].get<double>(), c[1].get<double>()};
    } else {
      table.center = {table.width / 2.0, table.height / 2.0};
    }
    for (auto& [key, val] : doc.at("coords").items()) {
      CiuId id = std::stoi(key);
      if (id < kMinCiuId || id > kMaxCiuId)
        throw UnknownCiuId("coordinates: CIU id " + key + " out of range");
      if (!val.is_array() || val.size() != 2)
        throw SchemaError("coordinates: coords entries must be [x, y]");
      Point p{val[0].get<double>(), val[1].get<double>()};
      if (p.x < 0 || p.x > table.width || p.y < 0 || p.y > table.height)
        throw SchemaError("coordinates: CIU " + key + " outside the image");
      table.coords[id] = p;
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("coordinates: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw SchemaError("coordinates: coords keys must be integer CIU ids");
  }
  for (CiuId id = kMinCiuId; id <= kMaxCiuId; ++id) {
    if (!table.coords.count(id))
      throw SchemaError("coordinates: missing CIU " + std::to_string(id));
  }
  return table;
}

const CoordinateTable& default_coordinates() {
  static const CoordinateTable table =
      load_coordinates(defaults::coordinates_json());
  return table;
}

Quadrant quadrant_of(Point p, const CoordinateTable& table) {
  if (p.x < 0 || p.x > table.width || p.y < 0 || p.y > table.height)
    throw OutOfBounds("point outside the image rectangle");
  bool left = p.x < table.center.x;
  bool top = p.y < table.center.y;
  if (top) return left ? Quadrant::kTopLeft : Quadrant::kTopRight;
  return left ? Quadrant::kBottomLeft : Quadrant::kBottomRight;
}

double distance(Point a, Point b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace ciugraph
