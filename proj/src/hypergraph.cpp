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

#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

bool intersects(const Edge& a, const Edge& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

Edge intersection(const Edge& a, const Edge& b) {
  Edge out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has(const Edge& e, Vertex v) { return std::binary_search(e.begin(), e.end(), v); }

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.n()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(h.n()) + ")");
  }
}

// Depth-first extension of a loose path e_1 ... e_j toward a closing edge.
class LooseCycleSearch {
 public:
  LooseCycleSearch(const Hypergraph& h, std::size_t limit, std::vector<Hypercycle>& out)
      : h_(h), limit_(limit), out_(out) {}

  void run() {
    for (int s = 0; s < h_.m() && out_.size() < limit_; ++s) {
      path_ = {s};
      anchors_.clear();
      extend();
    }
  }

 private:
  void extend() {
    if (out_.size() >= limit_) return;
    const int s = path_.front();
    const Edge& last = h_.edge(path_.back());
    const int j = static_cast<int>(path_.size());
    for (int c = s + 1; c < h_.m(); ++c) {
      if (std::find(path_.begin(), path_.end(), c) != path_.end()) continue;
      const Edge& cand = h_.edge(c);
      const Edge meet = intersection(last, cand);
      if (meet.size() != 1) continue;
      const Vertex anchor = meet.front();
      if (std::find(anchors_.begin(), anchors_.end(), anchor) != anchors_.end()) continue;
      bool ok = true;
      for (int i = 1; i + 1 < j; ++i) {
        if (intersects(h_.edge(path_[static_cast<std::size_t>(i)]), cand)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const Edge close = j >= 2 ? intersection(h_.edge(s), cand) : Edge{};
      if (j == 1) {
        // Second edge: meets the first one in exactly the anchor.
        anchors_.push_back(anchor);
        path_.push_back(c);
        extend();
        path_.pop_back();
        anchors_.pop_back();
      } else if (close.empty()) {
        anchors_.push_back(anchor);
        path_.push_back(c);
        extend();
        path_.pop_back();
        anchors_.pop_back();
      } else if (close.size() == 1 && close.front() != anchor &&
                 std::find(anchors_.begin(), anchors_.end(), close.front()) == anchors_.end()) {
        // Closing edge; report each cycle in one orientation only.
        if (path_[1] < c) {
          Hypercycle cyc;
          cyc.anchors.push_back(close.front());
          cyc.anchors.insert(cyc.anchors.end(), anchors_.begin(), anchors_.end());
          cyc.anchors.push_back(anchor);
          cyc.edge_indices = path_;
          cyc.edge_indices.push_back(c);
          out_.push_back(std::move(cyc));
          if (out_.size() >= limit_) return;
        }
      }
    }
  }

  const Hypergraph& h_;
  std::size_t limit_;
  std::vector<Hypercycle>& out_;
  std::vector<int> path_;
  std::vector<Vertex> anchors_;  // anchors_[i] joins path_[i] and path_[i + 1]
};

}  // namespace

Edge normalize_edge(Edge e) {
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
    throw PreconditionError("edge " + to_string(e) + " repeats a vertex");
  }
  return e;
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  for (auto& e : edges) {
    e = normalize_edge(std::move(e));
    if (e.size() < 2) {
      throw PreconditionError("edge " + to_string(e) + " has fewer than two vertices");
    }
    if (e.front() < 0 || e.back() >= n) {
      throw PreconditionError("edge " + to_string(e) + " has a vertex outside [0, " +
                              std::to_string(n) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw PreconditionError("duplicate edge " + to_string(*dup) + " (hypergraph must be simple)");
  }
  edges_ = std::move(edges);
}

int Hypergraph::index_of(Edge e) const {
  std::sort(e.begin(), e.end());
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Hypergraph::incident(Vertex v) const {
  std::vector<int> out;
  for (int i = 0; i < m(); ++i) {
    if (has(edges_[static_cast<std::size_t>(i)], v)) out.push_back(i);
  }
  return out;
}

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << '}';
  return os.str();
}

int degree(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  int d = 0;
  for (const auto& e : h.edges()) d += has(e, v) ? 1 : 0;
  return d;
}

std::vector<int> degrees(const Hypergraph& h) {
  std::vector<int> d(static_cast<std::size_t>(h.n()), 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e) ++d[static_cast<std::size_t>(v)];
  }
  return d;
}

std::vector<std::vector<Vertex>> components(const Hypergraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(h.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      int a = find(e[0]);
      int b = find(e[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<int> slot(static_cast<std::size_t>(h.n()), -1);
  for (Vertex v = 0; v < h.n(); ++v) {
    int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).size() <= 1; }

std::optional<int> is_k_uniform(const Hypergraph& h) {
  if (h.m() == 0) throw PreconditionError("uniformity is undefined without edges");
  const auto k = h.edges().front().size();
  for (const auto& e : h.edges()) {
    if (e.size() != k) return std::nullopt;
  }
  return static_cast<int>(k);
}

int cyclicity_r(const Hypergraph& h) {
  if (!is_connected(h)) throw PreconditionError("cyclicity requires a connected hypergraph");
  const auto k = is_k_uniform(h);
  if (!k) throw PreconditionError("cyclicity requires a uniform hypergraph");
  return (*k - 1) * h.m() - (h.n() - 1);
}

std::vector<Hypercycle> find_hypercycles(const Hypergraph& h, std::size_t limit) {
  std::vector<Hypercycle> out;
  for (int i = 0; i < h.m() && out.size() < limit; ++i) {
    for (int j = i + 1; j < h.m() && out.size() < limit; ++j) {
      Edge meet = intersection(h.edge(i), h.edge(j));
      if (meet.size() >= 2) out.push_back({{meet[0], meet[1]}, {i, j}});
    }
  }
  if (out.size() < limit) LooseCycleSearch(h, limit, out).run();
  return out;
}

bool is_unicyclic(const Hypergraph& h) {
  if (h.m() == 0 || !is_connected(h) || !is_k_uniform(h)) return false;
  if (cyclicity_r(h) != 1) return false;
  return find_hypercycles(h, 2).size() == 1;
}

Hypercycle find_unique_cycle(const Hypergraph& h) {
  auto cycles = find_hypercycles(h, 2);
  if (cycles.empty()) throw PreconditionError("hypergraph is acyclic");
  if (cycles.size() > 1) throw InternalError("hypergraph has more than one hypercycle");
  return cycles.front();
}

Hyperpath shortest_path(const Hypergraph& h, Vertex u, Vertex v) {
  check_vertex(h, u);
  check_vertex(h, v);
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<int> prev_vertex(n, -1), prev_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{u};
  seen[static_cast<std::size_t>(u)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
    Vertex a = queue.front();
    queue.pop_front();
    for (int ei : h.incident(a)) {
      for (Vertex b : h.edge(ei)) {
        if (seen[static_cast<std::size_t>(b)]) continue;
        seen[static_cast<std::size_t>(b)] = 1;
        prev_vertex[static_cast<std::size_t>(b)] = a;
        prev_edge[static_cast<std::size_t>(b)] = ei;
        queue.push_back(b);
      }
    }
  }
  if (!seen[static_cast<std::size_t>(v)]) {
    throw PreconditionError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " are disconnected");
  }
  Hyperpath p;
  for (Vertex x = v; x != u; x = prev_vertex[static_cast<std::size_t>(x)]) {
    p.vertices.push_back(x);
    p.edge_indices.push_back(prev_edge[static_cast<std::size_t>(x)]);
  }
  p.vertices.push_back(u);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edge_indices.begin(), p.edge_indices.end());
  return p;
}

int distance(const Hypergraph& h, Vertex u, Vertex v) { return shortest_path(h, u, v).length(); }

Hypergraph edit(const Hypergraph& h, std::span<const Edge> remove, std::span<const Edge> add) {
  std::vector<Edge> edges = h.edges();
  for (const auto& r : remove) {
    Edge e = normalize_edge(r);
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw PreconditionError("edge " + to_string(e) + " is not present");
    edges.erase(it);
  }
  for (const auto& a : add) {
    Edge e = normalize_edge(a);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      throw PreconditionError("adding " + to_string(e) + " would duplicate an existing edge");
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(h.n(), std::move(edges));
}

Hypergraph relabel(const Hypergraph& h, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != h.n()) throw PreconditionError("permutation has wrong length");
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= h.n() || hit[static_cast<std::size_t>(p)]++) {
      throw PreconditionError("relabeling is not a permutation of the vertex set");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    Edge img;
    img.reserve(e.size());
    for (Vertex v : e) img.push_back(perm[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(img));
  }
  return Hypergraph(h.n(), std::move(edges));
}

}  // namespace hyperspec
