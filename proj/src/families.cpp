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

#include "hyperspec/families.hpp"

#include <numeric>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

int edges_for(int n, int k, int min_m, const char* family) {
  const int m = unicyclic_edge_count(n, k);
  require(m >= min_m, std::string(family) + " needs m = n/(k-1) >= " + std::to_string(min_m) +
                          ", got m = " + std::to_string(m));
  return m;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kLoosePath: return "loose_path";
    case FamilyKind::kLooseCycle: return "loose_cycle";
    case FamilyKind::kTwoCycle: return "two_cycle";
    case FamilyKind::kUStar: return "u_star";
    case FamilyKind::kF: return "f";
    case FamilyKind::kF1: return "f1";
    case FamilyKind::kF2: return "f2";
    case FamilyKind::kF3: return "f3";
    case FamilyKind::kFRst: return "f_rst";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(const std::string& name) {
  for (auto kind : {FamilyKind::kLoosePath, FamilyKind::kLooseCycle, FamilyKind::kTwoCycle, FamilyKind::kUStar,
                    FamilyKind::kF, FamilyKind::kF1, FamilyKind::kF2, FamilyKind::kF3, FamilyKind::kFRst}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

int unicyclic_edge_count(int n, int k) {
  require(k >= 2, "edge size k must be at least 2");
  require(n > 0 && n % (k - 1) == 0, "n = " + std::to_string(n) + " is not divisible by k-1 = " +
                                         std::to_string(k - 1));
  return n / (k - 1);
}

Hypergraph two_cycle(int k) {
  require(k >= 3, "a 2-hypercycle needs k >= 3");
  Edge e1{anchor::kV1, anchor::kV2};
  Edge e2{anchor::kV1, anchor::kV2};
  for (int i = 0; i < k - 2; ++i) {
    e1.push_back(anchor::e1_interior(k, i));
    e2.push_back(anchor::e2_interior(k, i));
  }
  return Hypergraph(2 * (k - 1), {e1, e2});
}

Hypergraph loose_cycle(int q, int k) {
  require(q >= 2 && k >= 2, "loose cycle needs q >= 2 and k >= 2");
  if (q == 2) return two_cycle(k);
  const int n = q * (k - 1);
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back((i * (k - 1) + j) % n);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph loose_path(int q, int k) {
  require(q >= 1 && k >= 2, "loose path needs q >= 1 and k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    Edge e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), i * (k - 1));
    edges.push_back(std::move(e));
  }
  return Hypergraph(q * (k - 1) + 1, std::move(edges));
}

Hypergraph attach_pendants(const Hypergraph& h, Vertex v, int count, int k) {
  require(v >= 0 && v < h.n(), "attachment vertex " + std::to_string(v) + " does not exist");
  require(count >= 0, "pendant count must be nonnegative");
  require(k >= 2, "pendant edges need k >= 2");
  std::vector<Edge> edges = h.edges();
  int next = h.n();
  for (int c = 0; c < count; ++c) {
    Edge e{v};
    for (int j = 0; j < k - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(next, std::move(edges));
}

Hypergraph u_star(int n, int k) {
  const int m = edges_for(n, k, 2, "u_star");
  return attach_pendants(two_cycle(k), anchor::kV1, m - 2, k);
}

Hypergraph f_graph(int n, int k) {
  const int m = edges_for(n, k, 3, "f");
  return attach_pendants(attach_pendants(two_cycle(k), anchor::kV1, m - 3, k), anchor::kV2, 1, k);
}

Hypergraph f1(int n, int k) {
  const int m = edges_for(n, k, 3, "f1");
  return attach_pendants(two_cycle(k), anchor::eta(k), m - 2, k);
}

Hypergraph f2(int n, int k) {
  const int m = edges_for(n, k, 4, "f2");
  return attach_pendants(attach_pendants(two_cycle(k), anchor::eta(k), m - 3, k), anchor::kV1, 1, k);
}

Hypergraph f3(int n, int k) {
  const int m = edges_for(n, k, 4, "f3");
  return attach_pendants(attach_pendants(two_cycle(k), anchor::kV1, m - 3, k), anchor::eta(k), 1, k);
}

Hypergraph f_rst(int k, const std::vector<int>& R, const std::vector<int>& S, const std::vector<int>& T) {
  require(k >= 3, "f_rst needs k >= 3");
  require(R.size() == 2, "R must have exactly two entries");
  auto padded = [&](const std::vector<int>& v, const char* name) {
    require(v.empty() || static_cast<int>(v.size()) == k - 2,
            std::string(name) + " must have k-2 = " + std::to_string(k - 2) + " entries");
    return v.empty() ? std::vector<int>(static_cast<std::size_t>(k - 2), 0) : v;
  };
  const auto s = padded(S, "S");
  const auto t = padded(T, "T");
  for (const auto* arr : {&R, &s, &t}) {
    for (int x : *arr) require(x >= 0, "pendant counts must be nonnegative");
  }
  Hypergraph h = two_cycle(k);
  h = attach_pendants(h, anchor::kV1, R[0], k);
  h = attach_pendants(h, anchor::kV2, R[1], k);
  for (int i = 0; i < k - 2; ++i) h = attach_pendants(h, anchor::e1_interior(k, i), s[static_cast<std::size_t>(i)], k);
  for (int i = 0; i < k - 2; ++i) h = attach_pendants(h, anchor::e2_interior(k, i), t[static_cast<std::size_t>(i)], k);
  return h;
}

Hypergraph build_family(const FamilySpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  switch (spec.kind) {
    case FamilyKind::kLoosePath:
      require(k >= 2 && n > 1 && (n - 1) % (k - 1) == 0, "loose_path needs (k-1) | (n-1)");
      return loose_path((n - 1) / (k - 1), k);
    case FamilyKind::kLooseCycle:
      return loose_cycle(unicyclic_edge_count(n, k), k);
    case FamilyKind::kTwoCycle:
      require(n == 0 || n == 2 * (k - 1), "two_cycle has exactly 2(k-1) vertices");
      return two_cycle(k);
    case FamilyKind::kUStar: return u_star(n, k);
    case FamilyKind::kF: return f_graph(n, k);
    case FamilyKind::kF1: return f1(n, k);
    case FamilyKind::kF2: return f2(n, k);
    case FamilyKind::kF3: return f3(n, k);
    case FamilyKind::kFRst: {
      const int m = unicyclic_edge_count(n, k);
      const int total = std::accumulate(spec.R.begin(), spec.R.end(), 0) +
                        std::accumulate(spec.S.begin(), spec.S.end(), 0) +
                        std::accumulate(spec.T.begin(), spec.T.end(), 0);
      require(total == m - 2, "pendant budget r1 + r2 + sum(S) + sum(T) = " + std::to_string(total) +
                                  " must equal m - 2 = " + std::to_string(m - 2));
      return f_rst(k, spec.R, spec.S, spec.T);
    }
  }
  throw PreconditionError("unknown family");
}

}  // namespace hyperspec
