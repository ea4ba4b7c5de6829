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

#include "hyperspec/canon.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Tolerances used across the spectral routines and their checkers.
inline constexpr double kRayleighTolerance = 1e-14;   // relative change between iterations
inline constexpr double kResidualTolerance = 1e-12;   // stopping residual, infinity norm
inline constexpr double kResidualBound = 1e-10;       // accepted residual of a reported eigenpair
inline constexpr double kFormulaTolerance = 1e-9;     // closed-form eigenvector checks
inline constexpr int kMaxPowerIterations = 100000;

struct SpectralOptions {
  double rayleigh_tolerance = kRayleighTolerance;
  double residual_tolerance = kResidualTolerance;
  int max_iterations = kMaxPowerIterations;
};

// Upper-triangle entry of a symmetric matrix (row < col).
struct MatrixEntry {
  int row;
  int col;
  double weight;
};

// Symmetric weighted adjacency matrix: entry (i, j) is the sum of
// 1 / (|e| - 1) over the edges e containing both i and j; the diagonal is 0.
// Stored as a coordinate list. Every entry accumulates its terms in edge
// order, so the result is bit-for-bit reproducible.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Hypergraph& h);

  int n() const { return n_; }
  double at(int i, int j) const;
  std::span<const MatrixEntry> entries() const { return entries_; }

  std::vector<double> multiply(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x) const;
  std::vector<double> row_sums() const;
  // Row-major n x n copy.
  std::vector<double> dense() const;

 private:
  int n_;
  std::vector<MatrixEntry> entries_;  // sorted by (row, col)
};

AdjacencyMatrix adjacency_matrix(const Hypergraph& h);

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> x;  // positive, unit 2-norm
  double residual = 0.0;  // ||A x - rho x||_inf
  int iterations = 0;
};

// Dominant eigenpair by power iteration on A + I. Requires a connected
// hypergraph with at least one edge.
SpectralResult spectral_radius(const Hypergraph& h, const SpectralOptions& options = {});

double residual_norm(const AdjacencyMatrix& a, double rho, std::span<const double> x);

// y^T A y / y^T y.
double rayleigh_quotient(const Hypergraph& h, std::span<const double> y);

struct FormulaViolation {
  int edge;
  Vertex vertex;
  double expected;
  double actual;
  std::string reason;
};

// Pendant edges {u, v1, ..., v(k-1)} with deg(u) >= 2:
//   x_vi = x_u / ((k-1) rho - (k-2)) < x_u.
std::vector<FormulaViolation> check_pendant_formula(const Hypergraph& h, const SpectralResult& result,
                                                    double tolerance = kFormulaTolerance);

// Edges {v1, ..., vk} whose interior vertices all have degree 1 and whose
// ends meet other edges in exactly v1 and vk respectively:
//   x_interior = (x_v1 + x_vk) / ((k-1) rho - (k-3)) < min(x_v1, x_vk).
std::vector<FormulaViolation> check_internal_edge_formula(const Hypergraph& h,
                                                          const SpectralResult& result,
                                                          double tolerance = kFormulaTolerance);

// For the cycle edge {v1, interior..., eta, v2} of a 2-cycle whose other
// vertices all have degree 1 (the F1 configuration, pendants hanging at eta):
//   x_interior = (2 x_v1 + x_eta) / ((k-1) rho - (k-4)) < min(x_v1, x_eta),
// which relies on x_v1 == x_v2. Vacuous for k = 3.
std::vector<FormulaViolation> check_f1_interior_formula(const Hypergraph& h,
                                                        const SpectralResult& result, Vertex v1,
                                                        Vertex v2, Vertex eta,
                                                        double tolerance = kFormulaTolerance);

// max over orbits of (max x - min x).
double check_orbit_constancy(const SpectralResult& result, const OrbitPartition& orbits);

}  // namespace hyperspec
