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

#include "ciugraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

SpatioSemanticGraph build_graph(const std::vector<CiuId>& ids,
                                const CoordinateTable& table) {
  SpatioSemanticGraph g;
  g.sequence = ids;
  for (CiuId id : ids) g.nodes[id] = table.at(id);
  for (size_t i = 1; i < ids.size(); ++i) {
    GraphEdge e;
    e.from = ids[i - 1];
    e.to = ids[i];
    e.length = distance(table.at(e.from), table.at(e.to));
    g.edges.push_back(e);
  }
  return g;
}

SpatioSemanticGraph build_graph(const CiuSequence& seq,
                                const CoordinateTable& table) {
  return build_graph(seq.ids(), table);
}

QuadrantGraph build_quadrant_graph(const std::vector<CiuId>& ids,
                                   const CoordinateTable& table) {
  QuadrantGraph q;
  for (CiuId id : ids) q.sequence.push_back(quadrant_of(table.at(id), table));
  for (size_t i = 1; i < q.sequence.size(); ++i)
    q.edges.emplace_back(q.sequence[i - 1], q.sequence[i]);
  return q;
}

QuadrantGraph build_quadrant_graph(const CiuSequence& seq,
                                   const CoordinateTable& table) {
  return build_quadrant_graph(seq.ids(), table);
}

std::string to_dot(const SpatioSemanticGraph& g,
                   const std::map<CiuId, std::string>& labels) {
  std::ostringstream out;
  out << "digraph ciu_path {\n";
  out << "  node [shape=circle fontsize=10];\n";
  for (const auto& [id, p] : g.nodes) {  // std::map iterates sorted by id
    std::string label = "CIU" + std::to_string(id);
    auto it = labels.find(id);
    if (it != labels.end()) label = it->second;
    out << "  n" << id << " [label=\"" << dot_escape(label) << "\" pos=\""
        << fmt_num(p.x) << "," << fmt_num(-p.y) << "!\"];\n";
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const GraphEdge& e = g.edges[i];
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << (i + 1)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const SpatioSemanticGraph& g) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (const auto& [id, p] : g.nodes) {
    doc["nodes"].push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : g.edges) {
    doc["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"len", e.length}});
  }
  doc["sequence"] = g.sequence;
  return doc.dump(2) + "\n";
}

SpatioSemanticGraph graph_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("graph: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") ||
      !doc.contains("sequence"))
    throw SchemaError("graph: expected nodes, edges and sequence");

  SpatioSemanticGraph g;
  try {
    for (const auto& n : doc.at("nodes")) {
      CiuId id = n.at("id").get<int>();
      g.nodes[id] = {n.at("x").get<double>(), n.at("y").get<double>()};
    }
    for (const auto& e : doc.at("edges")) {
      GraphEdge edge;
      edge.from = e.at("from").get<int>();
      edge.to = e.at("to").get<int>();
      edge.length = e.at("len").get<double>();
      g.edges.push_back(edge);
    }
    for (const auto& s : doc.at("sequence")) g.sequence.push_back(s.get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("graph: ") + e.what());
  }
  if (g.edges.size() !=
      (g.sequence.empty() ? 0 : g.sequence.size() - 1))
    throw SchemaError("graph: edge count must be sequence length - 1");
  for (CiuId id : g.sequence) {
    if (!g.nodes.count(id))
      throw SchemaError("graph: sequence references node " +
                        std::to_string(id) + " with no coordinates");
  }
  return g;
}

std::string render_svg(const SpatioSemanticGraph& g,
                       const RenderOptions& options) {
  std::ostringstream out;
  double w = options.width;
  double h = options.height;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt_num(w) << "\" height=\"" << fmt_num(h) << "\" viewBox=\"0 0 "
      << fmt_num(w) << " " << fmt_num(h) << "\">\n";
  out << "  <defs>\n"
         "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" "
         "refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto-start-reverse\">\n"
         "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555555\"/>\n"
         "    </marker>\n"
         "  </defs>\n";
  if (!options.background_image.empty()) {
    out << "  <image href=\"" << xml_escape(options.background_image)
        << "\" x=\"0\" y=\"0\" width=\"" << fmt_num(w) << "\" height=\""
        << fmt_num(h) << "\" opacity=\"0.35\"/>\n";
  }
  out << "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << fmt_num(w)
      << "\" height=\"" << fmt_num(h)
      << "\" fill=\"none\" stroke=\"#999999\"/>\n";
  if (options.quadrant_grid) {
    out << "  <line class=\"grid\" x1=\"" << fmt_num(options.grid_center.x)
        << "\" y1=\"0\" x2=\"" << fmt_num(options.grid_center.x) << "\" y2=\""
        << fmt_num(h) << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    out << "  <line class=\"grid\" x1=\"0\" y1=\""
        << fmt_num(options.grid_center.y) << "\" x2=\"" << fmt_num(w)
        << "\" y2=\"" << fmt_num(options.grid_center.y)
        << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
  }

  // Repeated traversals of the same node pair get a growing bow so they
  // stay visible as separate strokes.
  std::map<std::pair<CiuId, CiuId>, int> pair_count;
  out << "  <g class=\"edges\" fill=\"none\" stroke=\"#555555\">\n";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const GraphEdge& e = g.edges[i];
    Point a = g.nodes.at(e.from);
    Point b = g.nodes.at(e.to);
    auto key = std::minmax(e.from, e.to);
    int occurrence = pair_count[{key.first, key.second}]++;
    out << "    <g class=\"edge\">\n";
    if (e.from == e.to) {
      // Self-loop: a small circle beside the node.
      double r = 7.0 + 3.0 * occurrence;
      out << "      <circle cx=\"" << fmt_num(a.x + r) << "\" cy=\""
          << fmt_num(a.y - r) << "\" r=\"" << fmt_num(r) << "\"/>\n";
      out << "      <text x=\"" << fmt_num(a.x + 2 * r + 2) << "\" y=\""
          << fmt_num(a.y - r) << "\" font-size=\"7\" fill=\"#333333\" "
          << "stroke=\"none\">" << (i + 1) << "</text>\n";
    } else {
      double mx = (a.x + b.x) / 2.0;
      double my = (a.y + b.y) / 2.0;
      double dx = b.x - a.x, dy = b.y - a.y;
      double len = std::hypot(dx, dy);
      double nx = len > 0 ? -dy / len : 0.0;
      double ny = len > 0 ? dx / len : 0.0;
      double bow = 6.0 * occurrence;
      double cx = mx + nx * bow, cy = my + ny * bow;
      out << "      <path d=\"M " << fmt_num(a.x) << " " << fmt_num(a.y)
          << " Q " << fmt_num(cx) << " " << fmt_num(cy) << " " << fmt_num(b.x)
          << " " << fmt_num(b.y) << "\" marker-end=\"url(#arrow)\"/>\n";
      out << "      <text x=\"" << fmt_num(cx + 2) << "\" y=\""
          << fmt_num(cy - 2) << "\" font-size=\"7\" fill=\"#333333\" "
          << "stroke=\"none\">" << (i + 1) << "</text>\n";
    }
    out << "    </g>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"nodes\">\n";
  for (const auto& [id, p] : g.nodes) {
    std::string short_label = "CIU" + std::to_string(id);
    if (auto it = options.short_labels.find(id);
        it != options.short_labels.end())
      short_label = it->second;
    std::string full_label = short_label;
    if (auto it = options.full_labels.find(id); it != options.full_labels.end())
      full_label = it->second;
    out << "    <g class=\"node\">\n";
    out << "      <circle cx=\"" << fmt_num(p.x) << "\" cy=\"" << fmt_num(p.y)
        << "\" r=\"4\" fill=\"#d62728\" stroke=\"#7a1010\"/>\n";
    out << "      <title>" << xml_escape(full_label) << "</title>\n";
    out << "      <text x=\"" << fmt_num(p.x + 6) << "\" y=\""
        << fmt_num(p.y + 3)
        << "\" font-size=\"9\" fill=\"#111111\" font-family=\"sans-serif\">"
        << xml_escape(short_label) << "</text>\n";
    out << "    </g>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace ciugraph
