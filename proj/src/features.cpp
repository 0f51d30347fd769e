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

#include "ciugraph/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ciugraph/csv.hpp"
#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string cell_real(const std::optional<double>& v) {
  return v ? fmt_real(*v) : "";
}

std::string cell_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

const std::vector<std::string>& feature_field_names() {
  static const std::vector<std::string> kNames = {
      "avg_x",        "std_x",  "avg_y",
      "std_y",        "total_path", "unique_nodes",
      "path_per_unique", "nodes",  "self_cycles",
      "cycles",       "self_cycles_quad", "cross_ratio_quad"};
  return kNames;
}

std::optional<double> FeatureVector::get(const std::string& field) const {
  auto as_d = [](const std::optional<int>& v) -> std::optional<double> {
    if (!v) return std::nullopt;
    return static_cast<double>(*v);
  };
  if (field == "avg_x") return avg_x;
  if (field == "std_x") return std_x;
  if (field == "avg_y") return avg_y;
  if (field == "std_y") return std_y;
  if (field == "total_path") return total_path;
  if (field == "unique_nodes") return as_d(unique_nodes);
  if (field == "path_per_unique") return path_per_unique;
  if (field == "nodes") return static_cast<double>(nodes);
  if (field == "self_cycles") return as_d(self_cycles);
  if (field == "cycles") return as_d(cycles);
  if (field == "self_cycles_quad") return as_d(self_cycles_quad);
  if (field == "cross_ratio_quad") return cross_ratio_quad;
  throw DomainError("unknown feature field '" + field + "'");
}

FeatureVector compute_features(const SpatioSemanticGraph& g,
                               const QuadrantGraph& q) {
  FeatureVector fv;
  const std::vector<CiuId>& seq = g.sequence;
  fv.nodes = static_cast<int>(seq.size());
  if (seq.empty()) return fv;  // all-null row, nodes = 0

  double sum_x = 0, sum_y = 0;
  for (CiuId id : seq) {
    Point p = g.nodes.at(id);
    sum_x += p.x;
    sum_y += p.y;
  }
  double n = static_cast<double>(seq.size());
  double mean_x = sum_x / n;
  double mean_y = sum_y / n;
  double var_x = 0, var_y = 0;
  for (CiuId id : seq) {
    Point p = g.nodes.at(id);
    var_x += (p.x - mean_x) * (p.x - mean_x);
    var_y += (p.y - mean_y) * (p.y - mean_y);
  }
  fv.avg_x = mean_x;
  fv.avg_y = mean_y;
  fv.std_x = std::sqrt(var_x / n);  // population sd, divisor n
  fv.std_y = std::sqrt(var_y / n);

  double total = 0;
  for (const GraphEdge& e : g.edges) total += e.length;
  fv.total_path = total;

  int unique = static_cast<int>(g.nodes.size());
  fv.unique_nodes = unique;
  fv.path_per_unique =
      unique > 0 ? std::optional<double>(total / unique) : std::nullopt;
  fv.cycles = fv.nodes - unique;

  int self_cycles = 0;
  for (size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == seq[i - 1]) ++self_cycles;
  }
  fv.self_cycles = self_cycles;

  int self_quad = 0;
  for (size_t i = 1; i < q.sequence.size(); ++i) {
    if (q.sequence[i] == q.sequence[i - 1]) ++self_quad;
  }
  fv.self_cycles_quad = self_quad;

  int inter = 0, intra = 0;
  for (const auto& [from, to] : q.edges) {
    if (from == to)
      ++intra;
    else
      ++inter;
  }
  fv.cross_ratio_quad =
      intra > 0 ? std::optional<double>(static_cast<double>(inter) / intra)
                : std::nullopt;
  return fv;
}

std::string features_csv_header() {
  std::string out;
  for (const std::string& name : feature_field_names()) {
    if (!out.empty()) out += ",";
    out += name;
  }
  return out + ",transcript_id";
}

std::string features_csv_row(const FeatureVector& fv) {
  std::vector<std::string> cells = {
      cell_real(fv.avg_x),
      cell_real(fv.std_x),
      cell_real(fv.avg_y),
      cell_real(fv.std_y),
      cell_real(fv.total_path),
      cell_int(fv.unique_nodes),
      cell_real(fv.path_per_unique),
      std::to_string(fv.nodes),
      cell_int(fv.self_cycles),
      cell_int(fv.cycles),
      cell_int(fv.self_cycles_quad),
      cell_real(fv.cross_ratio_quad),
      csv::escape(fv.transcript_id)};
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ",";
    out += cells[i];
  }
  return out;
}

std::string features_csv(const std::vector<FeatureVector>& rows) {
  std::vector<const FeatureVector*> sorted;
  sorted.reserve(rows.size());
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FeatureVector* a, const FeatureVector* b) {
                     return a->transcript_id < b->transcript_id;
                   });
  std::string out = features_csv_header() + "\n";
  for (const FeatureVector* r : sorted) out += features_csv_row(*r) + "\n";
  return out;
}

std::string feature_vector_to_json(const FeatureVector& fv) {
  nlohmann::json doc;
  auto put_real = [&](const char* key, const std::optional<double>& v) {
    doc[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  auto put_int = [&](const char* key, const std::optional<int>& v) {
    doc[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  put_real("avg_x", fv.avg_x);
  put_real("std_x", fv.std_x);
  put_real("avg_y", fv.avg_y);
  put_real("std_y", fv.std_y);
  put_real("total_path", fv.total_path);
  put_int("unique_nodes", fv.unique_nodes);
  put_real("path_per_unique", fv.path_per_unique);
  doc["nodes"] = fv.nodes;
  put_int("self_cycles", fv.self_cycles);
  put_int("cycles", fv.cycles);
  put_int("self_cycles_quad", fv.self_cycles_quad);
  put_real("cross_ratio_quad", fv.cross_ratio_quad);
  doc["transcript_id"] = fv.transcript_id;
  return doc.dump(2) + "\n";
}

FeatureVector feature_vector_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("feature vector: invalid JSON: ") + e.what());
  }
  FeatureVector fv;
  auto get_real = [&](const char* key) -> std::optional<double> {
    if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
    return doc.at(key).get<double>();
  };
  auto get_int = [&](const char* key) -> std::optional<int> {
    if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
    return doc.at(key).get<int>();
  };
  try {
    fv.avg_x = get_real("avg_x");
    fv.std_x = get_real("std_x");
    fv.avg_y = get_real("avg_y");
    fv.std_y = get_real("std_y");
    fv.total_path = get_real("total_path");
    fv.unique_nodes = get_int("unique_nodes");
    fv.path_per_unique = get_real("path_per_unique");
    fv.nodes = doc.value("nodes", 0);
    fv.self_cycles = get_int("self_cycles");
    fv.cycles = get_int("cycles");
    fv.self_cycles_quad = get_int("self_cycles_quad");
    fv.cross_ratio_quad = get_real("cross_ratio_quad");
    fv.transcript_id = doc.value("transcript_id", "");
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("feature vector: ") + e.what());
  }
  return fv;
}

}  // namespace ciugraph
