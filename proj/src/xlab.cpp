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

#include "hyperspec/xlab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "hyperspec/canon.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

namespace {

using Key = std::vector<std::uint8_t>;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

int checked_edge_count(int n, int k, const EnumerationOptions& options) {
  require(k >= 2, "k must be at least 2");
  const int m = unicyclic_edge_count(n, k);
  require(m >= (k >= 3 ? 2 : 3), "no unicyclic hypergraph has m = " + std::to_string(m) + " edges");
  require(options.allow_large || n <= options.max_n,
          "n = " + std::to_string(n) + " exceeds the enumeration guard " + std::to_string(options.max_n) +
              " (raise HYPERSPEC_MAX_N or pass the override)");
  return m;
}

double binomial(double n, double r) {
  double c = 1.0;
  for (int i = 0; i < static_cast<int>(r); ++i) c = c * (n - i) / (i + 1);
  return c;
}

// Runs body(i) for i in [0, count) on `jobs` threads; each index is handled
// by exactly one worker, so results written by index are order independent.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> workers;
  const auto stride = static_cast<std::size_t>(jobs);
  for (std::size_t w = 0; w < stride; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += stride) body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct NamedKey {
  std::string name;
  Key key;
};

std::vector<NamedKey> family_keys(int n, int k) {
  std::vector<NamedKey> out;
  if (k < 3 || n <= 0 || n % (k - 1) != 0) return out;
  const int m = n / (k - 1);
  auto add = [&](const char* name, int min_m, Hypergraph (*make)(int, int)) {
    if (m >= min_m) out.push_back({name, canonical_form(make(n, k)).bytes});
  };
  add("u_star", 2, u_star);
  add("f", 3, f_graph);
  add("f1", 3, f1);
  add("f2", 4, f2);
  add("f3", 4, f3);
  return out;
}

TheoremVerdict argmax_verdict(const std::string& theorem, int n, int k, const std::vector<const ClassRecord*>& pool,
                              const std::string& expected_key) {
  TheoremVerdict v;
  v.theorem = theorem;
  v.n = n;
  v.k = k;
  v.expected_key = expected_key;
  v.candidates = pool.size();
  if (pool.empty()) {
    v.message = "no candidate classes";
    return v;
  }
  v.argmax_key = pool[0]->key;
  v.rho_max = pool[0]->rho;
  if (pool.size() > 1) {
    v.rho_runner_up = pool[1]->rho;
    v.margin = v.rho_max - v.rho_runner_up;
    if (v.margin < kTieTolerance) {
      v.message = "tie between top classes " + pool[0]->key + " and " + pool[1]->key;
      return v;
    }
  } else {
    v.margin = std::numeric_limits<double>::infinity();
  }
  if (v.argmax_key != expected_key) {
    v.message = "maximizer is not the expected family";
    return v;
  }
  if (!(v.margin > kVerificationMargin)) {
    v.message = "runner-up margin below " + std::to_string(kVerificationMargin);
    return v;
  }
  v.pass = true;
  v.message = "maximizer is unique and matches";
  return v;
}

void compositions(int total, int slots, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == slots - 1) {
    cur.push_back(total);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur.push_back(x);
    compositions(total - x, slots, cur, f);
    cur.pop_back();
  }
}

}  // namespace

int default_max_n() {
  if (const char* env = std::getenv("HYPERSPEC_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultMaxN;
}

std::vector<Hypergraph> enumerate_unicyclic(int n, int k, const EnumerationOptions& options) {
  const int m = checked_edge_count(n, k, options);
  std::map<Key, Hypergraph> classes;
  for (int q = k >= 3 ? 2 : 3; q <= m; ++q) {
    std::map<Key, Hypergraph> level;
    const Hypergraph cycle = loose_cycle(q, k);
    const auto cf = canonical_form(cycle);
    level.emplace(cf.bytes, relabel(cycle, cf.relabeling));
    for (int edges = q; edges < m; ++edges) {
      std::map<Key, Hypergraph> next;
      for (const auto& [key, h] : level) {
        const auto orbits = orbit_partition(h);
        for (const auto& orbit : orbits.orbits) {
          const Hypergraph grown = attach_pendants(h, orbit.front(), 1, k);
          const auto form = canonical_form(grown);
          if (!next.contains(form.bytes)) next.emplace(form.bytes, relabel(grown, form.relabeling));
        }
      }
      level = std::move(next);
    }
    classes.merge(level);
  }
  std::vector<Hypergraph> out;
  out.reserve(classes.size());
  for (auto& [key, h] : classes) out.push_back(std::move(h));
  return out;
}

std::vector<Hypergraph> brute_force_unicyclic(int n, int k, const EnumerationOptions& options) {
  const int m = checked_edge_count(n, k, options);
  require(n <= 64, "brute force supports at most 64 vertices");
  std::vector<Edge> pool;
  std::vector<std::uint64_t> masks;
  Edge cur;
  std::function<void(int)> subsets = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      pool.push_back(cur);
      std::uint64_t mask = 0;
      for (Vertex v : cur) mask |= std::uint64_t{1} << v;
      masks.push_back(mask);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      subsets(v + 1);
      cur.pop_back();
    }
  };
  subsets(0);
  const double budget = binomial(static_cast<double>(pool.size()), m);
  require(options.allow_large || budget <= kBruteForceBudget,
          "brute force would scan " + std::to_string(static_cast<long long>(budget)) + " edge sets");

  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::map<Key, Hypergraph> classes;
  std::vector<int> chosen;
  std::function<void(std::size_t, std::uint64_t)> choose = [&](std::size_t start, std::uint64_t cover) {
    if (static_cast<int>(chosen.size()) == m) {
      if (cover != full) return;
      std::vector<Edge> edges;
      for (int i : chosen) edges.push_back(pool[static_cast<std::size_t>(i)]);
      Hypergraph h(n, std::move(edges));
      if (!is_unicyclic(h)) return;
      const auto form = canonical_form(h);
      if (!classes.contains(form.bytes)) classes.emplace(form.bytes, relabel(h, form.relabeling));
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      // The smallest edge of a spanning edge set contains vertex 0.
      if (chosen.empty() && !(masks[i] & 1)) break;
      chosen.push_back(static_cast<int>(i));
      choose(i + 1, cover | masks[i]);
      chosen.pop_back();
    }
  };
  choose(0, 0);
  std::vector<Hypergraph> out;
  for (auto& [key, h] : classes) out.push_back(std::move(h));
  return out;
}

std::vector<std::string> family_tags(const Hypergraph& h, int n, int k) {
  std::vector<std::string> tags;
  const auto key = canonical_form(h).bytes;
  for (const auto& fk : family_keys(n, k)) {
    if (fk.key == key) tags.push_back(fk.name);
  }
  return tags;
}

EnumerationReport rank_table(int n, int k, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto graphs = enumerate_unicyclic(n, k, options);
  const auto keys = family_keys(n, k);
  EnumerationReport report;
  report.n = n;
  report.k = k;
  report.classes.resize(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    ClassRecord& rec = report.classes[i];
    const auto form = canonical_form(graphs[i]);
    rec.key = form.hex();
    const auto spec = spectral_radius(graphs[i]);
    rec.rho = spec.rho;
    rec.residual = spec.residual;
    rec.iterations = spec.iterations;
    for (const auto& fk : keys) {
      if (fk.key == form.bytes) rec.tags.push_back(fk.name);
    }
    rec.graph = std::move(graphs[i]);
  });
  std::sort(report.classes.begin(), report.classes.end(), [](const ClassRecord& a, const ClassRecord& b) {
    if (a.rho != b.rho) return a.rho > b.rho;
    return a.key < b.key;
  });
  for (std::size_t i = 1; i < report.classes.size(); ++i) {
    const double delta = report.classes[i - 1].rho - report.classes[i].rho;
    if (delta < kTieTolerance) report.warnings.push_back({report.classes[i - 1].key, report.classes[i].key, delta});
  }
  if (!report.classes.empty()) report.top1 = report.classes[0].key;
  if (report.classes.size() > 1) report.top2 = report.classes[1].key;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TheoremVerdict verify_theorem_1(const EnumerationReport& report) {
  std::vector<const ClassRecord*> pool;
  for (const auto& c : report.classes) pool.push_back(&c);
  const std::string expected = canonical_form(u_star(report.n, report.k)).hex();
  return argmax_verdict("1", report.n, report.k, pool, expected);
}

TheoremVerdict verify_theorem_2(const EnumerationReport& report) {
  const int m = unicyclic_edge_count(report.n, report.k);
  require(m >= 4, "the second-maximum class is defined for m >= 4, got m = " + std::to_string(m));
  const std::string excluded = canonical_form(u_star(report.n, report.k)).hex();
  std::vector<const ClassRecord*> pool;
  for (const auto& c : report.classes) {
    if (c.key != excluded) pool.push_back(&c);
  }
  const std::string expected = canonical_form(f_graph(report.n, report.k)).hex();
  return argmax_verdict("2", report.n, report.k, pool, expected);
}

TheoremVerdict verify_theorem_1(int n, int k, const EnumerationOptions& options) {
  require(k >= 3, "the maximizer theorem is stated for k >= 3");
  return verify_theorem_1(rank_table(n, k, options));
}

TheoremVerdict verify_theorem_2(int n, int k, const EnumerationOptions& options) {
  require(k >= 3, "the second-maximizer theorem is stated for k >= 3");
  const int m = unicyclic_edge_count(n, k);
  require(m >= 4, "the second-maximum class is defined for m >= 4, got m = " + std::to_string(m));
  return verify_theorem_2(rank_table(n, k, options));
}

OrderingVerdict verify_family_ordering(int n, int k) {
  require(k >= 3, "family ordering needs k >= 3");
  const int m = unicyclic_edge_count(n, k);
  require(m >= 4, "family ordering needs m >= 4, got m = " + std::to_string(m));
  OrderingVerdict v;
  v.n = n;
  v.k = k;
  v.pass = true;
  v.min_margin = std::numeric_limits<double>::infinity();
  const double rho_f = spectral_radius(f_graph(n, k)).rho;
  const double rho_u = spectral_radius(u_star(n, k)).rho;
  auto check = [&](std::string smaller, double rs, std::string larger, double rl) {
    OrderingCheck c{std::move(smaller), std::move(larger), rs, rl, rl - rs > kVerificationMargin};
    v.pass = v.pass && c.pass;
    v.min_margin = std::min(v.min_margin, rl - rs);
    v.checks.push_back(std::move(c));
  };
  check("f1", spectral_radius(f1(n, k)).rho, "f", rho_f);
  check("f2", spectral_radius(f2(n, k)).rho, "f", rho_f);
  check("f3", spectral_radius(f3(n, k)).rho, "f", rho_f);
  check("f", rho_f, "u_star", rho_u);

  const Key key_u = canonical_form(u_star(n, k)).bytes;
  const Key key_f = canonical_form(f_graph(n, k)).bytes;
  std::map<Key, std::string> seen;
  std::vector<int> cur;
  compositions(m - 2, 2 * (k - 1), cur, [&](const std::vector<int>& c) {
    ++v.compositions;
    const std::vector<int> R(c.begin(), c.begin() + 2);
    const std::vector<int> S(c.begin() + 2, c.begin() + k);
    const std::vector<int> T(c.begin() + k, c.end());
    const Hypergraph h = f_rst(k, R, S, T);
    const Key key = canonical_form(h).bytes;
    if (key == key_u || key == key_f || seen.contains(key)) return;
    auto name = [](const char* label, const std::vector<int>& xs) {
      std::string s = label;
      s += '[';
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
      return s + ']';
    };
    std::string label = "f_rst(" + name("R", R) + ";" + name("S", S) + ";" + name("T", T) + ")";
    seen.emplace(key, label);
    check(std::move(label), spectral_radius(h).rho, "f", rho_f);
  });
  v.lambda_classes = seen.size();
  return v;
}

}  // namespace hyperspec
