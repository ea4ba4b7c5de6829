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

#include "hyperspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "hyperspec/error.hpp"

namespace hyperspec {

AdjacencyMatrix::AdjacencyMatrix(const Hypergraph& h) : n_(h.n()) {
  std::map<std::pair<int, int>, double> acc;
  for (const auto& e : h.edges()) {
    if (e.size() < 2) throw PreconditionError("edge " + to_string(e) + " is a singleton");
    const double w = 1.0 / static_cast<double>(e.size() - 1);
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) acc[{e[a], e[b]}] += w;
    }
  }
  entries_.reserve(acc.size());
  for (const auto& [key, w] : acc) entries_.push_back({key.first, key.second, w});
}

double AdjacencyMatrix::at(int i, int j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i, j},
                             [](const MatrixEntry& e, const std::pair<int, int>& key) {
                               return std::pair{e.row, e.col} < key;
                             });
  if (it == entries_.end() || it->row != i || it->col != j) return 0.0;
  return it->weight;
}

std::vector<double> AdjacencyMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
  for (const auto& e : entries_) {
    y[static_cast<std::size_t>(e.row)] += e.weight * x[static_cast<std::size_t>(e.col)];
    y[static_cast<std::size_t>(e.col)] += e.weight * x[static_cast<std::size_t>(e.row)];
  }
  return y;
}

double AdjacencyMatrix::quadratic_form(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& e : entries_) {
    s += 2.0 * e.weight * x[static_cast<std::size_t>(e.row)] * x[static_cast<std::size_t>(e.col)];
  }
  return s;
}

std::vector<double> AdjacencyMatrix::row_sums() const {
  std::vector<double> ones(static_cast<std::size_t>(n_), 1.0);
  return multiply(ones);
}

std::vector<double> AdjacencyMatrix::dense() const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<double> a(n * n, 0.0);
  for (const auto& e : entries_) {
    a[static_cast<std::size_t>(e.row) * n + static_cast<std::size_t>(e.col)] = e.weight;
    a[static_cast<std::size_t>(e.col) * n + static_cast<std::size_t>(e.row)] = e.weight;
  }
  return a;
}

AdjacencyMatrix adjacency_matrix(const Hypergraph& h) { return AdjacencyMatrix(h); }

double residual_norm(const AdjacencyMatrix& a, double rho, std::span<const double> x) {
  auto y = a.multiply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) r = std::max(r, std::abs(y[i] - rho * x[i]));
  return r;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

SpectralResult spectral_radius(const Hypergraph& h, const SpectralOptions& options) {
  if (h.m() == 0) throw PreconditionError("spectral radius requires at least one edge");
  if (!is_connected(h)) {
    throw PreconditionError("spectral radius requires a connected hypergraph (Perron vector is ambiguous)");
  }
  const AdjacencyMatrix a(h);
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double prev = 0.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    std::vector<double> y = a.multiply(x);
    const double rq = dot(x, y);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rq * x[i]));
    if (it > 1 && std::abs(rq - prev) <= options.rayleigh_tolerance * rq &&
        residual < options.residual_tolerance) {
      return {rq, std::move(x), residual, it};
    }
    prev = rq;
    // Shifted step: (A + I) x keeps a positive diagonal, so the iteration
    // converges to the Perron vector even for periodic patterns.
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
    const double norm = std::sqrt(dot(y, y));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(options.max_iterations) +
                         " iterations");
}

double rayleigh_quotient(const Hypergraph& h, std::span<const double> y) {
  if (static_cast<int>(y.size()) != h.n()) throw PreconditionError("vector length differs from vertex count");
  const double yy = dot(y, y);
  if (yy == 0.0) throw PreconditionError("Rayleigh quotient of the zero vector");
  return adjacency_matrix(h).quadratic_form(y) / yy;
}

namespace {

double xv(const SpectralResult& r, Vertex v) { return r.x[static_cast<std::size_t>(v)]; }

// Whether some edge other than `skip` meets edge `e` in exactly {v}.
bool meets_exactly(const Hypergraph& h, int skip, Vertex v) {
  const Edge& e = h.edge(skip);
  for (int i = 0; i < h.m(); ++i) {
    if (i == skip) continue;
    Edge meet;
    std::set_intersection(e.begin(), e.end(), h.edge(i).begin(), h.edge(i).end(), std::back_inserter(meet));
    if (meet.size() == 1 && meet.front() == v) return true;
  }
  return false;
}

void check_value(std::vector<FormulaViolation>& out, int edge, Vertex v, double expected, double actual,
                 double bound, double tolerance) {
  if (std::abs(expected - actual) > tolerance) {
    out.push_back({edge, v, expected, actual, "closed form mismatch"});
  } else if (!(actual < bound)) {
    out.push_back({edge, v, bound, actual, "value not below its anchor"});
  }
}

}  // namespace

std::vector<FormulaViolation> check_pendant_formula(const Hypergraph& h, const SpectralResult& result,
                                                    double tolerance) {
  std::vector<FormulaViolation> out;
  const auto deg = degrees(h);
  for (int i = 0; i < h.m(); ++i) {
    const Edge& e = h.edge(i);
    std::vector<Vertex> hubs;
    for (Vertex v : e) {
      if (deg[static_cast<std::size_t>(v)] >= 2) hubs.push_back(v);
    }
    if (hubs.size() != 1) continue;
    const Vertex u = hubs.front();
    const double k = static_cast<double>(e.size());
    const double expected = xv(result, u) / ((k - 1) * result.rho - (k - 2));
    for (Vertex v : e) {
      if (v != u) check_value(out, i, v, expected, xv(result, v), xv(result, u), tolerance);
    }
  }
  return out;
}

std::vector<FormulaViolation> check_internal_edge_formula(const Hypergraph& h,
                                                          const SpectralResult& result,
                                                          double tolerance) {
  std::vector<FormulaViolation> out;
  const auto deg = degrees(h);
  for (int i = 0; i < h.m(); ++i) {
    const Edge& e = h.edge(i);
    if (e.size() < 3) continue;
    std::vector<Vertex> ends;
    for (Vertex v : e) {
      if (deg[static_cast<std::size_t>(v)] >= 2) ends.push_back(v);
    }
    if (ends.size() != 2) continue;
    if (!meets_exactly(h, i, ends[0]) || !meets_exactly(h, i, ends[1])) continue;
    const double k = static_cast<double>(e.size());
    const double x1 = xv(result, ends[0]);
    const double xk = xv(result, ends[1]);
    const double expected = (x1 + xk) / ((k - 1) * result.rho - (k - 3));
    for (Vertex v : e) {
      if (v != ends[0] && v != ends[1]) check_value(out, i, v, expected, xv(result, v), std::min(x1, xk), tolerance);
    }
  }
  return out;
}

std::vector<FormulaViolation> check_f1_interior_formula(const Hypergraph& h,
                                                        const SpectralResult& result, Vertex v1,
                                                        Vertex v2, Vertex eta, double tolerance) {
  std::vector<FormulaViolation> out;
  int cycle_edge = -1;
  for (int i = 0; i < h.m(); ++i) {
    const Edge& e = h.edge(i);
    auto in = [&](Vertex v) { return std::binary_search(e.begin(), e.end(), v); };
    if (in(v1) && in(v2) && in(eta)) cycle_edge = i;
  }
  if (cycle_edge < 0) throw PreconditionError("no edge contains v1, v2 and eta");
  if (std::abs(xv(result, v1) - xv(result, v2)) > tolerance) {
    out.push_back({cycle_edge, v2, xv(result, v1), xv(result, v2), "x_v1 != x_v2"});
  }
  const Edge& e = h.edge(cycle_edge);
  const double k = static_cast<double>(e.size());
  const double expected = (2.0 * xv(result, v1) + xv(result, eta)) / ((k - 1) * result.rho - (k - 4));
  const double bound = std::min(xv(result, v1), xv(result, eta));
  for (Vertex v : e) {
    if (v != v1 && v != v2 && v != eta) check_value(out, cycle_edge, v, expected, xv(result, v), bound, tolerance);
  }
  return out;
}

double check_orbit_constancy(const SpectralResult& result, const OrbitPartition& orbits) {
  double spread = 0.0;
  for (const auto& orbit : orbits.orbits) {
    auto [lo, hi] = std::minmax_element(orbit.begin(), orbit.end(), [&](Vertex a, Vertex b) {
      return xv(result, a) < xv(result, b);
    });
    spread = std::max(spread, xv(result, *hi) - xv(result, *lo));
  }
  return spread;
}

}  // namespace hyperspec
