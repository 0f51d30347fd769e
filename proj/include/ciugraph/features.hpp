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

#ifndef CIUGRAPH_FEATURES_HPP_
#define CIUGRAPH_FEATURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ciugraph/graph.hpp"

namespace ciugraph {

// The 12 per-transcript graph features. An empty sequence produces nodes=0
// with every other field null; such rows are recorded but excluded from
// group statistics. Degenerate ratios (no unique nodes, no intra-quadrant
// edges) are null rather than sentinel numerics.
struct FeatureVector {
  std::optional<double> avg_x;
  std::optional<double> std_x;
  std::optional<double> avg_y;
  std::optional<double> std_y;
  std::optional<double> total_path;
  std::optional<int> unique_nodes;
  std::optional<double> path_per_unique;
  int nodes = 0;
  std::optional<int> self_cycles;
  std::optional<int> cycles;
  std::optional<int> self_cycles_quad;
  std::optional<double> cross_ratio_quad;
  std::string transcript_id;

  std::optional<double> get(const std::string& field) const;
};

// Field names in canonical column order.
const std::vector<std::string>& feature_field_names();

// g and q must come from the same sequence. Averages and population
// standard deviations run over sequence occurrences (with multiplicity);
// cycles = nodes - unique_nodes; cross_ratio_quad counts quadrant self-loops
// from repeated CIUs as intra-quadrant edges.
FeatureVector compute_features(const SpatioSemanticGraph& g,
                               const QuadrantGraph& q);

// Header + one row per vector, rows sorted by transcript_id, nulls as empty
// cells, reals with 6 significant digits.
std::string features_csv(const std::vector<FeatureVector>& rows);

// One CSV data row in canonical column order (no trailing newline).
std::string features_csv_row(const FeatureVector& fv);
std::string features_csv_header();

std::string feature_vector_to_json(const FeatureVector& fv);
FeatureVector feature_vector_from_json(std::string_view json_text);

}  // namespace ciugraph

#endif  // CIUGRAPH_FEATURES_HPP_
