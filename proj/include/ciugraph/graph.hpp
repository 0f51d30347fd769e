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

#ifndef CIUGRAPH_GRAPH_HPP_
#define CIUGRAPH_GRAPH_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ciugraph/lexicon.hpp"
#include "ciugraph/spatial.hpp"

namespace ciugraph {

struct GraphEdge {
  CiuId from = 0;
  CiuId to = 0;
  double length = 0.0;
  bool operator==(const GraphEdge&) const = default;
};

// A walk over CIU nodes placed at their picture coordinates. The edge list
// preserves order and multiplicity; self-loops have length 0. Aggregated
// simple-graph views are derived on demand for rendering.
struct SpatioSemanticGraph {
  std::map<CiuId, Point> nodes;   // distinct CIUs of the sequence
  std::vector<GraphEdge> edges;   // one per consecutive pair, in order
  std::vector<CiuId> sequence;    // the originating CIU order

  bool operator==(const SpatioSemanticGraph&) const = default;
};

struct QuadrantGraph {
  std::vector<Quadrant> sequence;  // same length as the CIU sequence
  std::vector<std::pair<Quadrant, Quadrant>> edges;
};

SpatioSemanticGraph build_graph(const CiuSequence& seq,
                                const CoordinateTable& table);
SpatioSemanticGraph build_graph(const std::vector<CiuId>& ids,
                                const CoordinateTable& table);

QuadrantGraph build_quadrant_graph(const CiuSequence& seq,
                                   const CoordinateTable& table);
QuadrantGraph build_quadrant_graph(const std::vector<CiuId>& ids,
                                   const CoordinateTable& table);

// DOT with pinned positions (pos="x,y!", y negated for screen orientation)
// and 1-based sequence labels on edges. Nodes sorted by id; output is
// deterministic.
std::string to_dot(const SpatioSemanticGraph& g,
                   const std::map<CiuId, std::string>& labels = {});

// Lossless graph JSON:
// {"nodes":[{"id":1,"x":..,"y":..}],"edges":[{"from":1,"to":7,"len":..}],
//  "sequence":[1,7,...]}
std::string to_json(const SpatioSemanticGraph& g);
SpatioSemanticGraph graph_from_json(std::string_view json_text);

struct RenderOptions {
  std::map<CiuId, std::string> short_labels;
  std::map<CiuId, std::string> full_labels;  // SVG <title> tooltips
  bool quadrant_grid = false;
  Point grid_center{273.0, 145.0};
  double width = 546.0;
  double height = 290.0;
  std::string background_image;  // file path reference, empty = none
};

// SVG 1.1, one viewBox matching the stimulus picture, nodes at their pixel
// coordinates, directed edges with arrowheads and sequence numbering.
std::string render_svg(const SpatioSemanticGraph& g,
                       const RenderOptions& options = {});

}  // namespace ciugraph

#endif  // CIUGRAPH_GRAPH_HPP_
