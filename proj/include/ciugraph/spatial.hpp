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

#ifndef CIUGRAPH_SPATIAL_HPP_
#define CIUGRAPH_SPATIAL_HPP_

#include <map>
#include <string>
#include <string_view>

#include "ciugraph/lexicon.hpp"

namespace ciugraph {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

// Image coordinates: x grows rightward, y grows downward (raster
// convention). Quadrant names are defined in that frame.
enum class Quadrant { kTopLeft, kTopRight, kBottomLeft, kBottomRight };

std::string to_string(Quadrant q);

// CIU -> pixel position on the stimulus picture. The shipped table is
// hand-digitized and non-normative; swap it out for a different stimulus.
struct CoordinateTable {
  double width = 546.0;
  double height = 290.0;
  Point center{273.0, 145.0};
  std::map<CiuId, Point> coords;

  bool has(CiuId id) const { return coords.count(id) != 0; }
  Point at(CiuId id) const;  // throws MissingCoordinate
};

// Loads {"width":546,"height":290,"center":[273,145],
//        "coords":{"1":[x,y], ..., "23":[x,y]}}.
// Requires a coordinate for every CIU id in 1..23, all within bounds.
CoordinateTable load_coordinates(std::string_view json_text);

const CoordinateTable& default_coordinates();

// Boundary points go right/bottom: x < cx is left, y < cy is top.
Quadrant quadrant_of(Point p, const CoordinateTable& table);

double distance(Point a, Point b);

}  // namespace ciugraph

#endif  // CIUGRAPH_SPATIAL_HPP_
