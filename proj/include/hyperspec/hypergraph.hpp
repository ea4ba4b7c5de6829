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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperspec {

using Vertex = int;
using Edge = std::vector<Vertex>;  // strictly increasing vertex indices

// A finite undirected simple hypergraph on vertices 0..n-1.
//
// Edges are normalized on construction: each edge is sorted, the edge list
// is sorted lexicographically, and duplicates are rejected. Two Hypergraph
// values therefore compare equal iff they have the same vertex count and
// the same edge set. Edge indices refer to positions in the sorted list.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  // Index of `e` (any vertex order) in the sorted edge list, or -1.
  int index_of(Edge e) const;
  bool contains(const Edge& e) const { return index_of(e) >= 0; }

  // Edge indices incident with v, in increasing order.
  std::vector<int> incident(Vertex v) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Sorts an edge and rejects repeated vertices.
Edge normalize_edge(Edge e);

// Alternating sequence v1 e1 v2 ... eq v(q+1); `vertices` has one more entry
// than `edge_indices`.
struct Hyperpath {
  std::vector<Vertex> vertices;
  std::vector<int> edge_indices;
  int length() const { return static_cast<int>(edge_indices.size()); }
};

// v1 e1 v2 ... vq eq v1. Edge e_i joins anchors[i] and anchors[(i+1) % q].
// For q == 2 the anchors are the two shared vertices of the edge pair.
struct Hypercycle {
  std::vector<Vertex> anchors;
  std::vector<int> edge_indices;
  int length() const { return static_cast<int>(edge_indices.size()); }
  friend bool operator==(const Hypercycle&, const Hypercycle&) = default;
};

int degree(const Hypergraph& h, Vertex v);
std::vector<int> degrees(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

// k if every edge has exactly k vertices. Throws on an empty edge set.
std::optional<int> is_k_uniform(const Hypergraph& h);

// r = (k-1) m - (n-1) for a connected k-uniform hypergraph.
int cyclicity_r(const Hypergraph& h);

// All hypercycles, up to `limit` of them. Pairs of edges sharing two or more
// vertices are reported as 2-cycles; longer cycles must be loose
// (consecutive edges meet in exactly their anchor, the rest are disjoint).
// Each cycle is reported once, starting at its smallest edge index.
std::vector<Hypercycle> find_hypercycles(const Hypergraph& h, std::size_t limit);

bool is_unicyclic(const Hypergraph& h);
Hypercycle find_unique_cycle(const Hypergraph& h);

// Shortest hyperpath length; 0 iff u == v. Throws when u and v are not
// joined by any path.
int distance(const Hypergraph& h, Vertex u, Vertex v);
Hyperpath shortest_path(const Hypergraph& h, Vertex u, Vertex v);

// Returns h - remove + add. The input is not modified.
Hypergraph edit(const Hypergraph& h, std::span<const Edge> remove, std::span<const Edge> add);

// Hypergraph with vertex v renamed to perm[v].
Hypergraph relabel(const Hypergraph& h, std::span<const int> perm);

// Connected components as vertex lists (isolated vertices are singletons).
std::vector<std::vector<Vertex>> components(const Hypergraph& h);

std::string to_string(const Edge& e);

}  // namespace hyperspec
