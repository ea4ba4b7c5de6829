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

#include "hyperspec/transforms.hpp"

#include <algorithm>
#include <iterator>

#include "hyperspec/error.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

namespace {

// Slack for comparing eigenvector entries that are equal in exact arithmetic.
constexpr double kEntrySlack = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

bool subset(const Edge& a, const Edge& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Edge minus(const Edge& a, const Edge& b) {
  Edge out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Edge merge(const Edge& a, const Edge& b) {
  Edge out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

double sum(std::span<const double> x, const Edge& s) {
  double t = 0.0;
  for (Vertex v : s) t += x[static_cast<std::size_t>(v)];
  return t;
}

void check_edge_index(const Hypergraph& h, int i) {
  require(i >= 0 && i < h.m(), "edge index " + std::to_string(i) + " out of range");
}

struct SwapEdges {
  Edge e, f, e_new, f_new, U1, V1, U2, V2;
};

SwapEdges resolve_swap(const Hypergraph& h, const SwapSpec& spec) {
  check_edge_index(h, spec.e_index);
  check_edge_index(h, spec.f_index);
  require(spec.e_index != spec.f_index, "swap needs two distinct edges");
  SwapEdges s;
  s.e = h.edge(spec.e_index);
  s.f = h.edge(spec.f_index);
  require(s.e.size() == s.f.size(), "swap needs edges of equal size");
  const auto k = s.e.size();
  s.U1 = normalize_edge(spec.U1);
  s.V1 = normalize_edge(spec.V1);
  require(!s.U1.empty() && s.U1.size() == s.V1.size() && s.U1.size() <= k - 1,
          "blocks must satisfy 1 <= |U1| = |V1| <= k-1");
  require(subset(s.U1, s.e), "U1 " + to_string(s.U1) + " is not inside e " + to_string(s.e));
  require(subset(s.V1, s.f), "V1 " + to_string(s.V1) + " is not inside f " + to_string(s.f));
  require(s.U1 != s.V1, "identity swap: e' = e duplicates an existing edge");
  s.U2 = minus(s.e, s.U1);
  s.V2 = minus(s.f, s.V1);
  s.e_new = merge(s.U2, s.V1);
  s.f_new = merge(s.V2, s.U1);
  require(s.e_new.size() == k && s.f_new.size() == k, "swap would repeat a vertex inside an edge");
  require(s.e_new != s.f_new, "swap would produce two equal edges");
  for (int i = 0; i < h.m(); ++i) {
    if (i == spec.e_index || i == spec.f_index) continue;
    require(h.edge(i) != s.e_new && h.edge(i) != s.f_new, "swap would duplicate existing edge " + to_string(h.edge(i)));
  }
  return s;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kInapplicable: return "inapplicable";
  }
  return "?";
}

Hypergraph relocate_edges(const Hypergraph& h, std::span<const EdgeMove> moves) {
  std::vector<Edge> removed, added;
  for (const auto& mv : moves) {
    check_edge_index(h, mv.edge_index);
    const Edge& e = h.edge(mv.edge_index);
    require(std::find(removed.begin(), removed.end(), e) == removed.end(), "edge moved twice");
    const Edge from = normalize_edge(mv.from);
    const Edge to = normalize_edge(mv.to);
    require(!to.empty() && from.size() == to.size() && to.size() < e.size(),
            "replacement sets must satisfy 1 <= |from| = |to| < k");
    require(subset(from, e), "replacement " + to_string(from) + " is not a subset of its edge " + to_string(e));
    for (Vertex v : to) require(v >= 0 && v < h.n(), "target vertex " + std::to_string(v) + " out of range");
    const Edge moved = merge(minus(e, from), to);
    if (moved.size() == e.size()) {
      require(!h.contains(moved), "relocated edge " + to_string(moved) + " duplicates an existing edge");
      require(std::find(added.begin(), added.end(), moved) == added.end(),
              "two relocations produce the same edge " + to_string(moved));
    }
    require(!subset(to, e), "targets " + to_string(to) + " already lie in edge " + to_string(e));
    require(moved.size() == e.size(), "relocation would repeat a vertex inside " + to_string(e));
    removed.push_back(e);
    added.push_back(moved);
  }
  return edit(h, removed, added);
}

Hypergraph edge_swap(const Hypergraph& h, const SwapSpec& spec) {
  const auto s = resolve_swap(h, spec);
  const std::vector<Edge> removed{s.e, s.f};
  const std::vector<Edge> added{s.e_new, s.f_new};
  return edit(h, removed, added);
}

SwapDelta swap_delta(const Hypergraph& h, const SwapSpec& spec, std::span<const double> x) {
  const auto k = is_k_uniform(h);
  require(k.has_value(), "swap identity needs a uniform hypergraph");
  require(static_cast<int>(x.size()) == h.n(), "vector length differs from vertex count");
  const auto s = resolve_swap(h, spec);
  const Hypergraph swapped = edge_swap(h, spec);
  SwapDelta d;
  d.lhs = adjacency_matrix(swapped).quadratic_form(x) - adjacency_matrix(h).quadratic_form(x);
  d.rhs = 2.0 / static_cast<double>(*k - 1) * (sum(x, s.U1) - sum(x, s.V1)) * (sum(x, s.V2) - sum(x, s.U2));
  return d;
}

TransformReport check_relocation_lemma(const Hypergraph& h, std::span<const EdgeMove> moves,
                                       std::span<const double> x, double margin) {
  require(static_cast<int>(x.size()) == h.n(), "vector length differs from vertex count");
  TransformReport report;
  report.result = relocate_edges(h, moves);
  report.rho_before = spectral_radius(h).rho;
  for (const auto& mv : moves) {
    // The hypothesis pairs from[j] with to[j] in the order given.
    for (std::size_t j = 0; j < mv.from.size(); ++j) {
      if (x[static_cast<std::size_t>(mv.from[j])] > x[static_cast<std::size_t>(mv.to[j])] + kEntrySlack) {
        report.reason = "x at " + std::to_string(mv.from[j]) + " exceeds x at target " + std::to_string(mv.to[j]);
        return report;
      }
    }
  }
  if (!is_connected(report.result)) {
    report.reason = "relocated hypergraph is disconnected";
    return report;
  }
  report.rho_after = spectral_radius(report.result).rho;
  report.verdict = report.rho_after > report.rho_before + margin ? Verdict::kHolds : Verdict::kFails;
  if (report.verdict == Verdict::kFails) report.reason = "spectral radius did not increase";
  return report;
}

TransformReport check_swap_lemma(const Hypergraph& h, const SwapSpec& spec, double margin) {
  TransformReport report;
  const auto s = resolve_swap(h, spec);
  report.result = edge_swap(h, spec);
  const auto before = spectral_radius(h);
  report.rho_before = before.rho;
  const std::span<const double> x = before.x;
  const double du = sum(x, s.U1) - sum(x, s.V1);
  const double dv = sum(x, s.V2) - sum(x, s.U2);
  if (du < -kEntrySlack || dv < -kEntrySlack) {
    report.reason = "requires x_U1 >= x_V1 and x_U2 <= x_V2";
    return report;
  }
  if (!is_connected(report.result)) {
    report.reason = "swapped hypergraph is disconnected";
    return report;
  }
  report.rho_after = spectral_radius(report.result).rho;
  const bool strict = du > kEntrySlack && dv > kEntrySlack;
  const bool ok = strict ? report.rho_after > report.rho_before + margin
                         : report.rho_after >= report.rho_before - kEntrySlack;
  report.verdict = ok ? Verdict::kHolds : Verdict::kFails;
  if (!ok) report.reason = strict ? "strict increase expected" : "spectral radius decreased";
  return report;
}

}  // namespace hyperspec
