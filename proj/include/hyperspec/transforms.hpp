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

#include <span>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Replace edge `edge_index` by (edge \ from) + to.
struct EdgeMove {
  int edge_index = -1;
  std::vector<Vertex> from;
  std::vector<Vertex> to;
};

// Exchange of equal-size blocks U1 (inside edge e) and V1 (inside edge f):
//   e' = (e \ U1) + V1,  f' = (f \ V1) + U1.
struct SwapSpec {
  int e_index = -1;
  int f_index = -1;
  std::vector<Vertex> U1;
  std::vector<Vertex> V1;
};

// H - sum e_i + sum e'_i. Each `from` must lie in its edge, `to` must not,
// and no e'_i may already be an edge of H (or coincide with another e'_j).
Hypergraph relocate_edges(const Hypergraph& h, std::span<const EdgeMove> moves);

// Rejects identity swaps (U1 == V1), blocks that would repeat a vertex, and
// swaps creating an edge already present among the untouched edges.
Hypergraph edge_swap(const Hypergraph& h, const SwapSpec& spec);

struct SwapDelta {
  double lhs = 0.0;  // x^T A(H') x - x^T A(H) x, from the two matrices
  double rhs = 0.0;  // 2/(k-1) (x_U1 - x_V1)(x_V2 - x_U2)
};

SwapDelta swap_delta(const Hypergraph& h, const SwapSpec& spec, std::span<const double> x);

enum class Verdict { kHolds, kFails, kInapplicable };
std::string to_string(Verdict v);

struct TransformReport {
  Verdict verdict = Verdict::kInapplicable;
  double rho_before = 0.0;
  double rho_after = 0.0;
  std::string reason;
  Hypergraph result;
};

inline constexpr double kRadiusMargin = 1e-10;

// Checks the relocation inequality: when the principal eigenvector x of H
// satisfies x[from[j]] <= x[to[j]] for every move and position j, the
// relocated hypergraph has a strictly larger spectral radius.
TransformReport check_relocation_lemma(const Hypergraph& h, std::span<const EdgeMove> moves,
                                       std::span<const double> x, double margin = kRadiusMargin);

// Checks the block-exchange inequality with the principal eigenvector of H:
// x_U1 > x_V1 and x_U2 < x_V2 imply rho(H') > rho(H); the weak version
// (>=, <=) implies rho(H') >= rho(H).
TransformReport check_swap_lemma(const Hypergraph& h, const SwapSpec& spec, double margin = kRadiusMargin);

}  // namespace hyperspec
