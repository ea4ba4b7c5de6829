// Copyright 2026 The hyperspec Authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Vertex numbering shared by every 2-cycle based family:
//   v1 = 0, v2 = 1,
//   interior of e1 = 2 .. k-1, interior of e2 = k .. 2k-3,
//   eta = first interior vertex of e2 = k,
//   pendant vertices are appended after 2k-3 in attachment order.
namespace anchor {
inline constexpr Vertex kV1 = 0;
inline constexpr Vertex kV2 = 1;
// i-th interior vertex (0-based) of cycle edge e1 / e2.
constexpr Vertex e1_interior(int /*k*/, int i) { return 2 + i; }
constexpr Vertex e2_interior(int k, int i) { return k + i; }
constexpr Vertex eta(int k) { return k; }
}  // namespace anchor

enum class FamilyKind { kLoosePath, kLooseCycle, kTwoCycle, kUStar, kF, kF1, kF2, kF3, kFRst };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kUStar;
  int n = 0;
  int k = 0;
  std::vector<int> R;  // [r1, r2]
  std::vector<int> S;  // pendants at the interior of e1, length k-2
  std::vector<int> T;  // pendants at the interior of e2, length k-2
};

std::string to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(const std::string& name);

// k-uniform 2-hypercycle: edges {v1, a(1,1..k-2), v2} and {v1, a(2,1..k-2), v2}.
Hypergraph two_cycle(int k);

// Loose cycle with q edges on q (k-1) vertices; q == 2 gives two_cycle(k).
Hypergraph loose_cycle(int q, int k);

// Loose path with q edges on q (k-1) + 1 vertices.
Hypergraph loose_path(int q, int k);

// Adds `count` edges, each made of v and k-1 new vertices.
Hypergraph attach_pendants(const Hypergraph& h, Vertex v, int count, int k);

// 2-cycle with m-2 pendant edges at v1.
Hypergraph u_star(int n, int k);
// 2-cycle with m-3 pendant edges at v1 and one at v2.
Hypergraph f_graph(int n, int k);
// 2-cycle with m-2 pendant edges at eta.
Hypergraph f1(int n, int k);
// 2-cycle with m-3 pendant edges at eta and one at v1.
Hypergraph f2(int n, int k);
// 2-cycle with m-3 pendant edges at v1 and one at eta.
Hypergraph f3(int n, int k);

// 2-cycle with R[i] pendants at v(i+1), S[i] at the i-th interior vertex of
// e1 and T[i] at the i-th interior vertex of e2. Empty S or T means zeros.
Hypergraph f_rst(int k, const std::vector<int>& R, const std::vector<int>& S, const std::vector<int>& T);

// Validates `spec` (divisibility, edge budget, minimum edge counts) and builds it.
Hypergraph build_family(const FamilySpec& spec);

// m = n / (k-1) for the unicyclic families; throws unless k-1 divides n.
int unicyclic_edge_count(int n, int k);

}  // namespace hyperspec
