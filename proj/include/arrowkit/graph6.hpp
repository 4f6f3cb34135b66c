// Copyright 2026 The arrowkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graph6: one header byte N(n) = n + 63 (n <= 62), then the upper triangle
// x(0,1) x(0,2) x(1,2) x(0,3) ... in column order, packed big-endian into
// 6-bit groups, zero padded, each group offset by 63.

#ifndef ARROWKIT_GRAPH6_HPP_
#define ARROWKIT_GRAPH6_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "arrowkit/graph.hpp"

namespace arrowkit {

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw GraphError("graph6: empty input");
  for (const char c : text) {
    if (c < 63 || c > 126) throw GraphError("graph6: byte outside [63, 126]");
  }
  if (text[0] == 126) throw GraphError("graph6: order above 32 is not supported");
  const int n = text[0] - 63;
  if (n > kMaxOrder) throw GraphError("graph6: order above 32 is not supported");
  const int bits = n * (n - 1) / 2;
  const int groups = (bits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + groups) {
    throw GraphError("graph6: expected " + std::to_string(1 + groups) +
                     " bytes for order " + std::to_string(n) + ", got " +
                     std::to_string(text.size()));
  }
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = text[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge_unchecked(i, j);
    }
  }
  if (groups > 0 && bits % 6 != 0) {
    const int pad = 6 - bits % 6;
    if (((text.back() - 63) & ((1 << pad) - 1)) != 0) {
      throw GraphError("graph6: nonzero padding bits");
    }
  }
  return g;
}

// One graph per non-empty line.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace arrowkit

#endif  // ARROWKIT_GRAPH6_HPP_
