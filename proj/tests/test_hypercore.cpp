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

#include <doctest.h>

#include <numeric>
#include <random>

#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/xlab.hpp"
#include "oracles.hpp"

using namespace hyperspec;

namespace {

const Hypergraph kSingle(3, {{0, 1, 2}});
const Hypergraph kB3(4, {{0, 2, 1}, {0, 3, 1}});

}  // namespace

TEST_CASE("construction normalizes and validates edges") {
  const Hypergraph h(5, {{4, 2, 3}, {2, 1, 0}});
  CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
  CHECK(h.index_of({3, 4, 2}) == 1);
  CHECK(h.index_of({0, 1, 3}) == -1);
  CHECK_THROWS_AS(Hypergraph(3, {{0}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("degree") {
  CHECK(degree(kSingle, 0) == 1);
  CHECK(degree(kB3, 0) == 2);
  CHECK(degree(u_star(6, 3), anchor::kV1) == 3);
  CHECK_THROWS_AS(degree(kSingle, 3), PreconditionError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(kSingle));
  CHECK_FALSE(is_connected(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK_FALSE(is_connected(Hypergraph(4, {{0, 1, 2}})));
  const auto u = u_star(8, 3);
  CHECK(is_connected(u));
  for (int v = 0; v < u.n(); ++v) CHECK(oracle::distance(u, 0, v) >= 0);
}

TEST_CASE("is_k_uniform") {
  CHECK(is_k_uniform(Hypergraph(5, {{0, 1, 2}, {2, 3, 4}})) == 3);
  CHECK_FALSE(is_k_uniform(Hypergraph(6, {{0, 1, 2}, {2, 3, 4, 5}})).has_value());
  CHECK(is_k_uniform(loose_cycle(4, 5)) == 5);
  CHECK_THROWS_AS(is_k_uniform(Hypergraph(3, {})), PreconditionError);
}

TEST_CASE("cyclicity_r") {
  CHECK(cyclicity_r(loose_path(2, 3)) == 0);
  CHECK(cyclicity_r(u_star(6, 3)) == 1);
  CHECK(cyclicity_r(kB3) == 1);
  CHECK_THROWS_AS(cyclicity_r(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}})), PreconditionError);
  CHECK_THROWS_AS(cyclicity_r(Hypergraph(6, {{0, 1, 2}, {2, 3, 4, 5}})), PreconditionError);
}

TEST_CASE("find_unique_cycle") {
  const auto c = find_unique_cycle(kB3);
  CHECK(c.length() == 2);
  CHECK(c.anchors == std::vector<Vertex>{0, 1});

  const auto u = u_star(8, 3);
  const auto cu = find_unique_cycle(u);
  CHECK(cu.length() == 2);
  CHECK(cu.anchors == std::vector<Vertex>{0, 1});
  for (int i : cu.edge_indices) {
    CHECK(degree(u, u.edge(i)[0]) + degree(u, u.edge(i)[1]) >= 4);
  }

  const auto c3 = find_unique_cycle(loose_cycle(3, 3));
  CHECK(c3.length() == 3);
  CHECK_THROWS_AS(find_unique_cycle(loose_path(3, 3)), PreconditionError);
}

TEST_CASE("is_unicyclic") {
  CHECK(is_unicyclic(u_star(6, 3)));
  CHECK_FALSE(is_unicyclic(loose_path(2, 3)));
  CHECK_FALSE(is_unicyclic(Hypergraph(7, {{0, 1, 2}, {0, 1, 3}, {4, 5, 6}})));
  // two 2-cycles sharing an edge: r = 2
  CHECK_FALSE(is_unicyclic(Hypergraph(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})));
}

TEST_CASE("distance") {
  CHECK(distance(kSingle, 0, 1) == 1);
  CHECK(distance(kSingle, 2, 2) == 0);
  const auto u = u_star(8, 3);
  // pendant vertices are appended after the cycle: 4..7
  CHECK(distance(u, 4, anchor::kV2) == 2);
  for (int a = 0; a < u.n(); ++a) {
    for (int b = 0; b < u.n(); ++b) CHECK(distance(u, a, b) == oracle::distance(u, a, b));
  }
  const auto p = shortest_path(u, 4, anchor::kV2);
  CHECK(p.length() == 2);
  CHECK(p.vertices.front() == 4);
  CHECK(p.vertices.back() == anchor::kV2);
  CHECK_THROWS_AS(distance(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}}), 0, 4), PreconditionError);
}

TEST_CASE("edit") {
  const std::vector<Edge> e{{0, 1, 2}};
  const auto empty = edit(kSingle, e, {});
  CHECK(empty.m() == 0);
  CHECK(empty.n() == 3);
  CHECK(kSingle.m() == 1);

  const auto u = u_star(8, 3);
  const std::vector<Edge> pendant{u.edges().back()};
  CHECK(edit(edit(u, pendant, {}), {}, pendant) == u);

  // shorten a loose 3-cycle: reattach e1 so it meets e2 in two vertices
  const auto c = loose_cycle(3, 3);  // {0,1,2} {2,3,4} {4,5,0}
  const std::vector<Edge> rm{{0, 1, 2}};
  const std::vector<Edge> add{{1, 2, 4}};
  const auto shorter = edit(c, rm, add);
  CHECK(is_unicyclic(shorter));
  CHECK(find_unique_cycle(shorter).length() == 2);

  CHECK_THROWS_AS(edit(kSingle, std::vector<Edge>{{0, 1}}, {}), PreconditionError);
  CHECK_THROWS_AS(edit(kSingle, {}, e), PreconditionError);
}

TEST_CASE("relabel rejects non-permutations") {
  const std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(kSingle, bad), PreconditionError);
}

TEST_CASE("property: handshake") {
  for (const auto& h : enumerate_unicyclic(8, 3)) {
    int lhs = 0;
    for (int d : degrees(h)) lhs += d;
    int rhs = 0;
    for (const auto& e : h.edges()) rhs += static_cast<int>(e.size());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: r = 0 iff acyclic") {
  for (int q = 1; q <= 4; ++q) {
    const auto p = loose_path(q, 3);
    CHECK(cyclicity_r(p) == 0);
    CHECK(find_hypercycles(p, 10).empty());
  }
  for (const auto& h : enumerate_unicyclic(9, 4)) {
    CHECK(cyclicity_r(h) == 1);
    CHECK(find_hypercycles(h, 10).size() == 1);
  }
  // r = 2: loose 3-cycle plus a chord edge
  const Hypergraph two(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {1, 3, 6}});
  CHECK(cyclicity_r(two) == 2);
  CHECK(find_hypercycles(two, 10).size() >= 2);
}

TEST_CASE("property: cycle complement is a forest of supertrees") {
  for (const auto& h : enumerate_unicyclic(10, 3)) {
    const auto c = find_unique_cycle(h);
    std::vector<Edge> cycle_edges;
    for (int i : c.edge_indices) cycle_edges.push_back(h.edge(i));
    const auto rest = edit(h, cycle_edges, {});
    for (const auto& comp : components(rest)) {
      int m = 0;
      for (const auto& e : rest.edges()) m += (std::find(comp.begin(), comp.end(), e[0]) != comp.end());
      CHECK(static_cast<int>(comp.size()) - 1 == 2 * m);
    }
  }
}
