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

// Brute-force re-implementation of the twelve feature definitions, written
// directly from their verbal statements and kept independent of the library
// path (no graph objects, its own distance and quadrant logic).

#ifndef CIUGRAPH_TESTS_SUPPORT_FEATURE_ORACLE_HPP_
#define CIUGRAPH_TESTS_SUPPORT_FEATURE_ORACLE_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

struct XY {
  double x;
  double y;
};

struct Features {
  std::optional<double> avg_x, std_x, avg_y, std_y;
  std::optional<double> total_path, path_per_unique, cross_ratio_quad;
  std::optional<int> unique_nodes, self_cycles, cycles, self_cycles_quad;
  int nodes = 0;
};

// quadrants: 0=TL 1=TR 2=BL 3=BR, boundary goes right/bottom.
inline int quad(XY p, XY center) {
  int col = p.x < center.x ? 0 : 1;
  int row = p.y < center.y ? 0 : 1;
  return row * 2 + col;
}

inline Features features(const std::vector<int>& seq,
                         const std::map<int, XY>& coords, XY center) {
  Features f;
  f.nodes = static_cast<int>(seq.size());
  if (seq.empty()) return f;

  const double n = static_cast<double>(seq.size());

  // Mean/sd of the visited coordinates, occurrence-weighted, divisor n.
  double sx = 0, sy = 0;
  for (int id : seq) {
    sx += coords.at(id).x;
    sy += coords.at(id).y;
  }
  double mx = sx / n, my = sy / n;
  double vx = 0, vy = 0;
  for (int id : seq) {
    vx += std::pow(coords.at(id).x - mx, 2);
    vy += std::pow(coords.at(id).y - my, 2);
  }
  f.avg_x = mx;
  f.avg_y = my;
  f.std_x = std::sqrt(vx / n);
  f.std_y = std::sqrt(vy / n);

  // Sum of all edge lengths in the walk.
  double total = 0;
  for (size_t i = 1; i < seq.size(); ++i) {
    XY a = coords.at(seq[i - 1]);
    XY b = coords.at(seq[i]);
    total += std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
  }
  f.total_path = total;

  std::set<int> distinct(seq.begin(), seq.end());
  f.unique_nodes = static_cast<int>(distinct.size());
  f.path_per_unique = total / static_cast<double>(distinct.size());
  f.cycles = f.nodes - *f.unique_nodes;

  int sc = 0;
  for (size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[i - 1]) ++sc;
  f.self_cycles = sc;

  int scq = 0, inter = 0, intra = 0;
  for (size_t i = 1; i < seq.size(); ++i) {
    int qa = quad(coords.at(seq[i - 1]), center);
    int qb = quad(coords.at(seq[i]), center);
    if (qa == qb) {
      ++scq;
      ++intra;
    } else {
      ++inter;
    }
  }
  f.self_cycles_quad = scq;
  if (intra > 0)
    f.cross_ratio_quad = static_cast<double>(inter) / intra;
  return f;
}

}  // namespace oracle

#endif  // CIUGRAPH_TESTS_SUPPORT_FEATURE_ORACLE_HPP_
