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

#include "hyperspec/canon.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

#include "hyperspec/error.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

namespace {

// Node x < n is vertex x; node n + i is edge i.
class IncidenceGraph {
 public:
  explicit IncidenceGraph(const Hypergraph& h) : n_(h.n()), adj_(static_cast<std::size_t>(h.n() + h.m())) {
    for (int i = 0; i < h.m(); ++i) {
      for (Vertex v : h.edge(i)) {
        adj_[static_cast<std::size_t>(v)].push_back(n_ + i);
        adj_[static_cast<std::size_t>(n_ + i)].push_back(v);
      }
    }
  }
  int size() const { return static_cast<int>(adj_.size()); }
  int vertices() const { return n_; }
  const std::vector<int>& neighbors(int x) const { return adj_[static_cast<std::size_t>(x)]; }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

using Coloring = std::vector<int>;

int count_colors(const Coloring& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Replaces arbitrary sortable keys by dense ranks, preserving key order.
Coloring rank_keys(const std::vector<std::vector<int>>& keys) {
  std::vector<int> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  Coloring out(keys.size());
  int rank = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || keys[static_cast<std::size_t>(idx[i])] != keys[static_cast<std::size_t>(idx[i - 1])]) ++rank;
    out[static_cast<std::size_t>(idx[i])] = rank;
  }
  return out;
}

// Color refinement to the coarsest equitable partition. New colors sort by
// (old color, neighbor color multiset), so cells split in place and the
// element offset of every singleton cell never changes.
Coloring refine(const IncidenceGraph& g, Coloring col) {
  int colors = count_colors(col);
  std::vector<std::vector<int>> keys(col.size());
  for (;;) {
    for (int x = 0; x < g.size(); ++x) {
      auto& key = keys[static_cast<std::size_t>(x)];
      key.clear();
      key.push_back(col[static_cast<std::size_t>(x)]);
      for (int y : g.neighbors(x)) key.push_back(col[static_cast<std::size_t>(y)]);
      std::sort(key.begin() + 1, key.end());
    }
    Coloring next = rank_keys(keys);
    int next_colors = count_colors(next);
    col = std::move(next);
    if (next_colors == colors) return col;
    colors = next_colors;
  }
}

Coloring individualize(const Coloring& col, int v) {
  std::vector<std::vector<int>> keys(col.size());
  for (std::size_t x = 0; x < col.size(); ++x) {
    const bool rest_of_cell = col[x] == col[static_cast<std::size_t>(v)] && static_cast<int>(x) != v;
    keys[x] = {col[x], rest_of_cell ? 1 : 0};
  }
  return rank_keys(keys);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Searcher {
 public:
  explicit Searcher(const Hypergraph& h) : h_(h), g_(h) {}

  CanonicalSearch run() {
    Coloring col(static_cast<std::size_t>(g_.size()), 1);
    std::fill(col.begin(), col.begin() + h_.n(), 0);
    search(refine(g_, std::move(col)));
    CanonicalSearch out;
    out.form.bytes = best_cert_;
    out.form.relabeling = best_lab_;
    out.generators = std::move(autos_);
    out.leaves = leaves_;
    return out;
  }

 private:
  static constexpr int kContinue = INT_MAX;

  int search(const Coloring& col) {
    const int level = static_cast<int>(path_.size());
    // Target: smallest non-singleton vertex cell.
    std::vector<int> cell_size(static_cast<std::size_t>(h_.n()), 0);
    for (int v = 0; v < h_.n(); ++v) ++cell_size[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
    int target = -1;
    for (int c = 0; c < h_.n(); ++c) {
      if (cell_size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) return leaf(col);

    std::vector<int> explored;
    for (int v = 0; v < h_.n(); ++v) {
      if (col[static_cast<std::size_t>(v)] != target) continue;
      if (!explored.empty() && equivalent_to_explored(v, explored)) continue;
      explored.push_back(v);
      path_.push_back(v);
      int back = search(refine(g_, individualize(col, v)));
      path_.pop_back();
      if (back < level) return back;
    }
    return kContinue;
  }

  // Whether v lies in the orbit of an explored sibling under the known
  // automorphisms that fix the current prefix pointwise.
  bool equivalent_to_explored(int v, const std::vector<int>& explored) const {
    UnionFind uf(h_.n());
    bool any = false;
    for (const auto& g : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(),
                               [&](int p) { return g[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < h_.n(); ++x) uf.unite(x, g[static_cast<std::size_t>(x)]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return uf.find(e) == root; });
  }

  int leaf(const Coloring& col) {
    ++leaves_;
    Permutation lab(col.begin(), col.begin() + h_.n());
    auto cert = encode(relabel(h_, lab));
    if (!have_first_) {
      have_first_ = true;
      first_path_ = path_;
      first_lab_ = lab;
      first_inv_ = inverse(lab);
      first_cert_ = cert;
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
      best_inv_ = first_inv_;
      return kContinue;
    }
    if (cert == first_cert_) {
      add_automorphism(first_inv_, lab);
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_inv_ = inverse(lab);
      best_lab_ = std::move(lab);
    } else if (cert == best_cert_) {
      add_automorphism(best_inv_, lab);
    }
    return kContinue;
  }

  static Permutation inverse(const Permutation& p) {
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
  }

  // Both labelings produce the same relabeled hypergraph, so
  // v -> ref_inv[lab[v]] preserves the edge set.
  void add_automorphism(const Permutation& ref_inv, const Permutation& lab) {
    Permutation g(lab.size());
    bool identity = true;
    for (std::size_t v = 0; v < lab.size(); ++v) {
      g[v] = ref_inv[static_cast<std::size_t>(lab[v])];
      identity = identity && g[v] == static_cast<int>(v);
    }
    if (!identity && std::find(autos_.begin(), autos_.end(), g) == autos_.end()) {
      autos_.push_back(std::move(g));
    }
  }

  const Hypergraph& h_;
  IncidenceGraph g_;
  std::vector<int> path_;
  bool have_first_ = false;
  std::vector<int> first_path_;
  Permutation first_lab_, first_inv_, best_lab_, best_inv_;
  std::vector<std::uint8_t> first_cert_, best_cert_;
  std::vector<Permutation> autos_;
  std::size_t leaves_ = 0;
};

void put16(std::vector<std::uint8_t>& out, int value) {
  out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(value & 0xff));
}

}  // namespace

std::vector<std::uint8_t> encode(const Hypergraph& h) {
  if (h.n() > 0xffff || h.m() > 0xffff) throw PreconditionError("hypergraph too large to encode");
  std::vector<std::uint8_t> out;
  put16(out, h.n());
  put16(out, h.m());
  for (const auto& e : h.edges()) {
    put16(out, static_cast<int>(e.size()));
    for (Vertex v : e) put16(out, v);
  }
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

std::string CanonicalForm::hex() const { return to_hex(bytes); }

CanonicalSearch canonical_search(const Hypergraph& h) { return Searcher(h).run(); }

CanonicalForm canonical_form(const Hypergraph& h) { return canonical_search(h).form; }

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Permutation> automorphism_generators(const Hypergraph& h) {
  return canonical_search(h).generators;
}

OrbitPartition orbits_of(int n, std::span<const Permutation> generators) {
  UnionFind uf(n);
  for (const auto& g : generators) {
    for (int x = 0; x < n; ++x) uf.unite(x, g[static_cast<std::size_t>(x)]);
  }
  OrbitPartition out;
  out.orbit_of.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    auto& slot = out.orbit_of[static_cast<std::size_t>(r)];
    if (slot < 0) {
      slot = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[static_cast<std::size_t>(v)] = slot;
    out.orbits[static_cast<std::size_t>(slot)].push_back(v);
  }
  return out;
}

OrbitPartition orbit_partition(const Hypergraph& h) {
  auto gens = automorphism_generators(h);
  return orbits_of(h.n(), gens);
}

bool is_automorphism(const Hypergraph& h, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != h.n()) return false;
  for (const auto& e : h.edges()) {
    Edge img;
    img.reserve(e.size());
    for (Vertex v : e) img.push_back(sigma[static_cast<std::size_t>(v)]);
    if (!h.contains(img)) return false;
  }
  return true;
}

bool permutation_commutes(const Hypergraph& h, std::span<const int> sigma) {
  const int n = h.n();
  if (static_cast<int>(sigma.size()) != n) throw PreconditionError("permutation has wrong length");
  const auto a = adjacency_matrix(h).dense();
  auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(at(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]) - at(i, j)) > 1e-12) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hyperspec
