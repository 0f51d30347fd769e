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

#ifndef CIUGRAPH_CSV_HPP_
#define CIUGRAPH_CSV_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace ciugraph::csv {

// Quote-wraps a cell when it holds a comma, quote or newline.
std::string escape(const std::string& cell);

// RFC-4180-ish parse: quoted cells, doubled quotes, CRLF tolerated.
// Returns rows of cells; blank lines are skipped.
std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace ciugraph::csv

#endif  // CIUGRAPH_CSV_HPP_
