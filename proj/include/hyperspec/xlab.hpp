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
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

inline constexpr int kDefaultMaxN = 12;
inline constexpr double kVerificationMargin = 1e-9;
inline constexpr double kTieTolerance = 1e-12;
// Upper bound on the number of edge sets the brute-force oracle may scan.
inline constexpr double kBruteForceBudget = 2e6;

// Size guard for enumeration: HYPERSPEC_MAX_N when set, else kDefaultMaxN.
int default_max_n();

struct EnumerationOptions {
  int jobs = 1;
  int max_n = default_max_n();
  bool allow_large = false;  // skip the size guards entirely
};

// One representative per isomorphism class of connected k-uniform unicyclic
// hypergraphs on n vertices, ordered by canonical key. Built by growing each
// loose cycle of length 2..m one pendant edge at a time, attaching only at
// one vertex per automorphism orbit and deduplicating by canonical form.
std::vector<Hypergraph> enumerate_unicyclic(int n, int k, const EnumerationOptions& options = {});

// Independent oracle: scans every m-subset of k-subsets of [n], keeps the
// connected unicyclic ones and deduplicates by canonical form.
std::vector<Hypergraph> brute_force_unicyclic(int n, int k, const EnumerationOptions& options = {});

struct ClassRecord {
  std::string key;  // canonical form, hex
  Hypergraph graph;
  double rho = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::vector<std::string> tags;  // named families this class is isomorphic to
};

struct TieWarning {
  std::string key_a;
  std::string key_b;
  double delta = 0.0;
};

struct EnumerationReport {
  int n = 0;
  int k = 0;
  std::vector<ClassRecord> classes;  // rho descending, then key ascending
  std::string top1;
  std::string top2;
  std::vector<TieWarning> warnings;  // adjacent classes closer than kTieTolerance
  double wall_seconds = 0.0;
};

// Names of the families (u_star, f, f1, f2, f3) isomorphic to h, where those
// families are defined for (n, k).
std::vector<std::string> family_tags(const Hypergraph& h, int n, int k);

EnumerationReport rank_table(int n, int k, const EnumerationOptions& options = {});

struct TheoremVerdict {
  std::string theorem;
  int n = 0;
  int k = 0;
  bool pass = false;
  std::size_t candidates = 0;  // classes the maximum was taken over
  std::string expected_key;
  std::string argmax_key;
  double rho_max = 0.0;
  double rho_runner_up = 0.0;  // 0 when there is no runner-up
  double margin = 0.0;
  std::string message;
};

// The unique maximizer over all unicyclic classes is u_star(n, k).
TheoremVerdict verify_theorem_1(int n, int k, const EnumerationOptions& options = {});
// The unique maximizer over unicyclic classes with m >= 4 other than
// u_star(n, k) is f_graph(n, k).
TheoremVerdict verify_theorem_2(int n, int k, const EnumerationOptions& options = {});

// Same verdicts computed from an existing report.
TheoremVerdict verify_theorem_1(const EnumerationReport& report);
TheoremVerdict verify_theorem_2(const EnumerationReport& report);

struct OrderingCheck {
  std::string smaller;
  std::string larger;
  double rho_smaller = 0.0;
  double rho_larger = 0.0;
  bool pass = false;
};

struct OrderingVerdict {
  int n = 0;
  int k = 0;
  bool pass = false;
  std::vector<OrderingCheck> checks;
  std::size_t compositions = 0;     // (R; S; T) arrays scanned
  std::size_t lambda_classes = 0;   // distinct classes compared against f
  double min_margin = 0.0;
};

// rho(f1), rho(f2), rho(f3) < rho(f) < rho(u_star), and rho(f_rst) < rho(f)
// for every (R; S; T) whose graph is neither u_star nor f itself.
OrderingVerdict verify_family_ordering(int n, int k);

}  // namespace hyperspec
