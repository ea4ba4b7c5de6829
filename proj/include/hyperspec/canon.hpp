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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

using Permutation = std::vector<int>;  // perm[v] is the image of v

// Exact isomorphism-invariant key. `bytes` encodes the relabeled hypergraph
// (vertex count, edge count, then each edge as size + vertices, all 16-bit
// big-endian); `relabeling` is the vertex permutation that produces it.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  Permutation relabeling;

  std::string hex() const;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes <=> b.bytes; }
};

// Disjoint vertex sets covering 0..n-1. Each orbit is sorted, and orbits are
// ordered by their smallest vertex.
struct OrbitPartition {
  std::vector<std::vector<Vertex>> orbits;
  // orbit index of each vertex
  std::vector<int> orbit_of;
};

// Result of one canonical labeling search.
struct CanonicalSearch {
  CanonicalForm form;
  std::vector<Permutation> generators;
  std::size_t leaves = 0;
};

// Individualization-refinement search on the vertex/edge incidence graph.
// Keeps the lexicographically smallest leaf encoding and records every
// automorphism discovered along the way.
CanonicalSearch canonical_search(const Hypergraph& h);

CanonicalForm canonical_form(const Hypergraph& h);
std::vector<std::uint8_t> encode(const Hypergraph& h);
std::string to_hex(std::span<const std::uint8_t> bytes);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

std::vector<Permutation> automorphism_generators(const Hypergraph& h);

// Orbits of the group generated by `generators` acting on 0..n-1.
OrbitPartition orbits_of(int n, std::span<const Permutation> generators);
OrbitPartition orbit_partition(const Hypergraph& h);

// sigma maps every edge onto an edge.
bool is_automorphism(const Hypergraph& h, std::span<const int> sigma);

// Conjugation by the permutation matrix of sigma leaves A_H unchanged,
// i.e. A[sigma(i)][sigma(j)] == A[i][j] for all i, j.
bool permutation_commutes(const Hypergraph& h, std::span<const int> sigma);

}  // namespace hyperspec
