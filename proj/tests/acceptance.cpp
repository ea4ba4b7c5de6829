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

// Acceptance gate: runs each criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hyperspec/canon.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/xlab.hpp"
#include "oracles.hpp"

using namespace hyperspec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Pair = std::pair<int, int>;

std::set<std::string> keys(const std::vector<Hypergraph>& hs) {
  std::set<std::string> out;
  for (const auto& h : hs) out.insert(canonical_form(h).hex());
  return out;
}

void criterion_1(Outcome& o) {
  for (auto [n, k] : {Pair{6, 3}, Pair{8, 3}, Pair{9, 4}}) {
    const auto v = verify_theorem_1(n, k);
    o.require(v.pass && v.margin > 1e-9, "U* maximizer at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    o.detail << "(" << n << "," << k << ") classes=" << v.candidates << " margin=" << v.margin << " ";
  }
}

void criterion_2(Outcome& o) {
  for (auto [n, k] : {Pair{8, 3}, Pair{10, 3}}) {
    const auto v = verify_theorem_2(n, k);
    o.require(v.pass && v.margin > 1e-9, "F maximizer at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    o.detail << "(" << n << "," << k << ") classes=" << v.candidates << " margin=" << v.margin << " ";
  }
}

void criterion_3(Outcome& o) {
  for (auto [n, k] : {Pair{4, 3}, Pair{6, 3}, Pair{8, 3}}) {
    const auto e = keys(enumerate_unicyclic(n, k));
    const auto b = keys(brute_force_unicyclic(n, k));
    o.require(e == b, "key sets differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    o.detail << "(" << n << "," << k << ") classes=" << e.size() << " ";
    if (n == 4) o.require(e.size() == 1 && *e.begin() == canonical_form(two_cycle(3)).hex(), "(4,3) is not {B}");
  }
}

void criterion_4(Outcome& o) {
  for (auto [n, k] : {Pair{10, 3}, Pair{12, 3}, Pair{12, 4}}) {
    const auto v = verify_family_ordering(n, k);
    o.require(v.pass && v.min_margin > 1e-9, "ordering at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    o.detail << "(" << n << "," << k << ") compositions=" << v.compositions << " min_margin=" << v.min_margin << " ";
  }
}

const std::vector<Pair> kEnumerated{{4, 3}, {6, 3}, {8, 3}, {9, 4}, {10, 3}, {12, 3}, {12, 4}};

void criterion_5(Outcome& o) {
  std::size_t instances = 0;
  for (auto [n, k] : kEnumerated) {
    for (const auto& h : enumerate_unicyclic(n, k)) {
      const auto r = spectral_radius(h);
      o.require(check_pendant_formula(h, r, 1e-9).empty(), "pendant formula");
      o.require(check_internal_edge_formula(h, r, 1e-9).empty(), "internal-edge formula");
      ++instances;
    }
  }
  o.detail << "instances=" << instances << " f1:";
  for (int k : {3, 4, 5}) {
    const int n = 3 * (k - 1);  // smallest n with m >= 3
    const auto h = f1(n, k);
    const auto r = spectral_radius(h);
    o.require(check_f1_interior_formula(h, r, anchor::kV1, anchor::kV2, anchor::eta(k), 1e-9).empty(),
              "F1 interior formula at k=" + std::to_string(k));
    o.detail << " (" << n << "," << k << ")" << (k == 3 ? "[no non-eta interior vertex]" : "");
  }
}

std::vector<SwapSpec> valid_swaps(const Hypergraph& h) {
  std::vector<SwapSpec> out;
  for (int e = 0; e < h.m(); ++e) {
    for (int f = 0; f < h.m(); ++f) {
      if (e == f) continue;
      for (Vertex u : h.edge(e)) {
        for (Vertex v : h.edge(f)) {
          const SwapSpec s{e, f, {u}, {v}};
          try {
            edge_swap(h, s);
            out.push_back(s);
          } catch (const std::exception&) {
          }
        }
      }
    }
  }
  return out;
}

void criterion_6(Outcome& o) {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Hypergraph> pool;
  for (auto [n, k] : {Pair{8, 3}, Pair{9, 4}, Pair{10, 3}}) {
    for (const auto& h : enumerate_unicyclic(n, k)) pool.push_back(h);
  }
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto& h = pool[rng() % pool.size()];
    const auto swaps = valid_swaps(h);
    const auto& s = swaps[rng() % swaps.size()];
    std::vector<double> x(static_cast<std::size_t>(h.n()));
    for (auto& v : x) v = unit(rng);
    const auto d = swap_delta(h, s, x);
    worst = std::max(worst, std::abs(d.lhs - d.rhs));
  }
  o.require(worst < 1e-12, "identity gap");
  o.detail << "trials=100 seed=0 max_gap=" << worst;
}

void criterion_7(Outcome& o) {
  for (int k = 2; k <= 6; ++k) {
    Edge e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), 0);
    o.require(std::abs(spectral_radius(Hypergraph(k, {e})).rho - 1.0) < 1e-12, "single edge k=" + std::to_string(k));
  }
  const auto b = two_cycle(3);
  const double dense = oracle::jacobi_rho(b);
  const double rho = spectral_radius(b).rho;
  o.require(std::abs(dense - (1 + std::sqrt(5.0)) / 2) < 1e-10, "Jacobi value of B");
  o.require(std::abs(rho - dense) < 1e-10, "B against the dense oracle");
  double worst_residual = 0.0;
  double min_entry = 1.0;
  std::size_t pairs = 0;
  for (auto [n, k] : kEnumerated) {
    for (const auto& h : enumerate_unicyclic(n, k)) {
      const auto r = spectral_radius(h);
      worst_residual = std::max(worst_residual, r.residual);
      for (double v : r.x) min_entry = std::min(min_entry, v);
      ++pairs;
    }
  }
  o.require(worst_residual < 1e-10, "residual");
  o.require(min_entry > 0.0, "positivity");
  o.detail << "B rho=" << rho << " eigenpairs=" << pairs << " max_residual=" << worst_residual
           << " min_x=" << min_entry;
}

void criterion_8(Outcome& o) {
  std::vector<Hypergraph> small{Hypergraph(3, {{0, 1, 2}}), loose_path(2, 3), two_cycle(4)};
  for (auto [n, k] : {Pair{4, 3}, Pair{6, 3}}) {
    for (const auto& h : enumerate_unicyclic(n, k)) small.push_back(h);
  }
  std::size_t exhaustive = 0;
  for (const auto& h : small) {
    Permutation p(static_cast<std::size_t>(h.n()));
    std::iota(p.begin(), p.end(), 0);
    do {
      o.require(permutation_commutes(h, p) == oracle::is_automorphism(h, p), "exhaustive commutation");
      ++exhaustive;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::mt19937_64 rng(8);
  std::size_t sampled = 0;
  for (auto [n, k] : {Pair{8, 3}, Pair{9, 4}, Pair{10, 3}}) {
    for (const auto& h : enumerate_unicyclic(n, k)) {
      std::vector<Permutation> perms = automorphism_generators(h);
      for (int t = 0; t < 200; ++t) perms.push_back(oracle::random_permutation(h.n(), rng));
      for (const auto& p : perms) {
        o.require(permutation_commutes(h, p) == oracle::is_automorphism(h, p), "sampled commutation");
        ++sampled;
      }
    }
  }
  double spread = 0.0;
  for (const auto& h : enumerate_unicyclic(8, 3)) {
    spread = std::max(spread, check_orbit_constancy(spectral_radius(h), orbit_partition(h)));
  }
  o.require(spread < 1e-9, "orbit spread");
  o.detail << "exhaustive=" << exhaustive << " sampled=" << sampled << " max_orbit_spread=" << spread;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"U* is the unique maximizer", criterion_1},
      {"F is the unique maximizer over Lambda", criterion_2},
      {"structured enumeration equals brute force", criterion_3},
      {"F1, F2, F3, F(R;S;T) < F < U*", criterion_4},
      {"closed-form eigenvector entries", criterion_5},
      {"block-exchange identity", criterion_6},
      {"spectral sanity", criterion_7},
      {"commutation iff automorphism; orbit constancy", criterion_8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s  %s  [%.2fs] %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                o.detail.str().c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
