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

#include "hyperspec/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hyperspec/canon.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/json_io.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/xlab.hpp"

namespace hyperspec {

namespace {

using nlohmann::json;

std::string slurp(std::istream& s) { return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open " + path);
  return slurp(f);
}

// Inline JSON when the text starts with '{', otherwise a path ('-' = stdin).
std::string load_text(const std::string& arg, std::istream& in) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  if (arg == "-") return slurp(in);
  return read_file(arg);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<int> int_list(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw PreconditionError(std::string("spec field \"") + field + "\" must be an array of integers");
  }
  std::vector<int> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number_integer()) throw PreconditionError(std::string("spec field \"") + field + "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// An edge is named either by its index in the sorted edge list or by its vertices.
int edge_ref(const Hypergraph& h, const json& j, const char* field) {
  if (!j.contains(field)) throw PreconditionError(std::string("spec is missing \"") + field + "\"");
  const auto& v = j.at(field);
  if (v.is_number_integer()) return v.get<int>();
  const int idx = h.index_of(int_list(j, field));
  if (idx < 0) throw PreconditionError(std::string("spec edge \"") + field + "\" is not an edge of the graph");
  return idx;
}

void write_delta(JsonWriter& w, const SwapDelta& d) {
  w.begin_object().key("lhs").value(d.lhs).key("rhs").value(d.rhs).key("difference").value(d.lhs - d.rhs).end_object();
}

void write_report(JsonWriter& w, const TransformReport& r) {
  w.begin_object();
  w.key("verdict").value(to_string(r.verdict));
  w.key("rho_before").value(r.rho_before);
  w.key("rho_after").value(r.rho_after);
  w.key("reason").value(r.reason);
  w.end_object();
}

void write_violations(JsonWriter& w, const std::vector<FormulaViolation>& vs) {
  w.begin_array();
  for (const auto& v : vs) {
    w.begin_object().key("edge").value(v.edge).key("vertex").value(v.vertex).key("expected").value(v.expected);
    w.key("actual").value(v.actual).key("reason").value(v.reason).end_object();
  }
  w.end_array();
}

std::string report_csv(const EnumerationReport& r) {
  std::string s = "canonical_key,rho,residual,family_tag\n";
  for (const auto& c : r.classes) {
    std::string tags;
    for (std::size_t i = 0; i < c.tags.size(); ++i) tags += (i ? "|" : "") + c.tags[i];
    s += c.key + "," + format_double(c.rho) + "," + format_double(c.residual) + "," + tags + "\n";
  }
  return s;
}

std::string report_json(const EnumerationReport& r, bool with_graphs, bool with_timing) {
  JsonWriter w;
  w.begin_object();
  w.key("n").value(r.n).key("k").value(r.k);
  w.key("class_count").value(r.classes.size());
  w.key("top1").value(r.top1).key("top2").value(r.top2);
  if (with_timing) w.key("wall_seconds").value(r.wall_seconds);
  w.key("warnings").begin_array();
  for (const auto& t : r.warnings) {
    w.begin_object().key("kind").value("tie").key("key_a").value(t.key_a).key("key_b").value(t.key_b);
    w.key("delta").value(t.delta).end_object();
  }
  w.end_array();
  w.key("classes").begin_array();
  for (const auto& c : r.classes) {
    w.begin_object();
    w.key("key").value(c.key).key("rho").value(c.rho).key("residual").value(c.residual);
    w.key("iterations").value(c.iterations);
    w.key("tags").begin_array();
    for (const auto& t : c.tags) w.value(t);
    w.end_array();
    if (with_graphs) w.key("graph").value(c.graph);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string verdict_json(const TheoremVerdict& v) {
  JsonWriter w;
  w.begin_object();
  w.key("theorem").value(v.theorem).key("n").value(v.n).key("k").value(v.k);
  w.key("pass").value(v.pass);
  w.key("classes").value(v.candidates);
  w.key("expected_key").value(v.expected_key).key("argmax_key").value(v.argmax_key);
  w.key("rho_max").value(v.rho_max).key("rho_runner_up").value(v.rho_runner_up);
  w.key("margin").value(v.margin);
  w.key("message").value(v.message);
  w.end_object();
  return w.str() + "\n";
}

std::string ordering_json(const OrderingVerdict& v) {
  JsonWriter w;
  w.begin_object();
  w.key("theorem").value("ordering").key("n").value(v.n).key("k").value(v.k);
  w.key("pass").value(v.pass);
  w.key("compositions").value(v.compositions).key("lambda_classes").value(v.lambda_classes);
  w.key("min_margin").value(v.min_margin);
  w.key("checks").begin_array();
  for (const auto& c : v.checks) {
    w.begin_object().key("smaller").value(c.smaller).key("larger").value(c.larger);
    w.key("rho_smaller").value(c.rho_smaller).key("rho_larger").value(c.rho_larger).key("pass").value(c.pass);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

struct GraphInput {
  std::string input;
  std::string inline_json;

  Hypergraph load(std::istream& in) const {
    if (!inline_json.empty()) return parse_hypergraph(inline_json);
    if (input.empty()) throw PreconditionError("pass --input <path|-> or --graph <json>");
    return parse_hypergraph(input == "-" ? slurp(in) : read_file(input));
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& g) {
  cmd->add_option("--input,-i", g.input, "Hypergraph JSON file, or - for stdin");
  cmd->add_option("--graph", g.inline_json, "Inline hypergraph JSON {\"n\":..,\"edges\":[[..],..]}");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyperspec: spectra of hypergraphs under the weighted adjacency matrix A_ij = sum 1/(|e|-1)"};
  app.require_subcommand(1, 1);

  int n = 0;
  int k = 0;
  int jobs = 1;
  bool allow_large = false;
  std::string format;

  // gen
  std::string family;
  std::vector<int> R, S, T;
  auto* gen = app.add_subcommand(
      "gen", "Build a named hypergraph: the 2-hypercycle, U*, F, F1, F2, F3, F(R;S;T), loose paths and cycles");
  gen->add_option("--family", family, "loose_path|loose_cycle|two_cycle|u_star|f|f1|f2|f3|f_rst")->required();
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--k", k, "Edge size")->required();
  gen->add_option("--R", R, "Pendant counts at v1, v2 (f_rst)")->delimiter(',');
  gen->add_option("--S", S, "Pendant counts at the interior of e1 (f_rst)")->delimiter(',');
  gen->add_option("--T", T, "Pendant counts at the interior of e2 (f_rst)")->delimiter(',');

  // spectrum
  GraphInput spectrum_input;
  bool checks = false;
  auto* spectrum = app.add_subcommand(
      "spectrum", "Spectral radius and positive principal eigenvector (Perron vector) of the adjacency matrix");
  add_graph_input(spectrum, spectrum_input);
  spectrum->add_flag("--checks", checks, "Also report the pendant/internal-edge eigenvector formulas and orbit spread");

  // swap
  std::string swap_spec;
  std::uint64_t seed = 0;
  auto* swap = app.add_subcommand(
      "swap", "Block exchange G<U1 <-> V1> between two edges, with the Rayleigh delta identity and radius check");
  swap->add_option("--spec", swap_spec, "JSON (inline or path): {graph, e, f, U1, V1[, x]}")->required();
  swap->add_option("--seed", seed, "Seed for the random test vector");

  // relocate
  std::string relocate_spec;
  auto* relocate = app.add_subcommand(
      "relocate", "Edge relocation e' = (e \\ from) + to, with the principal-eigenvector radius-increase check");
  relocate->add_option("--spec", relocate_spec, "JSON (inline or path): {graph, moves:[{edge, from, to}]}")->required();

  // enumerate
  std::string out_path;
  bool timing = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Isomorph-free enumeration of k-uniform unicyclic hypergraphs with spectral radii and family tags");
  enumerate->add_option("--n", n, "Vertex count")->required();
  enumerate->add_option("--k", k, "Edge size")->required();
  enumerate->add_option("--jobs", jobs, "Worker threads for the spectral evaluation")->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out_path, "Report path (.json or .csv); stdout when omitted");
  enumerate->add_option("--format", format, "json|csv (default from --out extension, else json)")
      ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_flag("--timing", timing, "Include wall time in the JSON report");
  enumerate->add_flag("--allow-large", allow_large, "Bypass the size guard");

  // verify
  std::string theorem;
  auto* verify = app.add_subcommand(
      "verify", "Check the U* maximizer theorem (1), the F second-maximizer theorem (2), or the F1/F2/F3/F(R;S;T) ordering");
  verify->add_option("--theorem", theorem, "1|2|ordering")->required()->check(CLI::IsMember({"1", "2", "ordering"}));
  verify->add_option("--n", n, "Vertex count")->required();
  verify->add_option("--k", k, "Edge size")->required();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--allow-large", allow_large, "Bypass the size guard");

  // rank
  auto* rank = app.add_subcommand(
      "rank", "Unicyclic classes ranked by spectral radius, tagged with U*, F, F1, F2, F3");
  rank->add_option("--n", n, "Vertex count")->required();
  rank->add_option("--k", k, "Edge size")->required();
  rank->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  rank->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  rank->add_flag("--allow-large", allow_large, "Bypass the size guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  EnumerationOptions options;
  options.jobs = jobs;
  options.allow_large = allow_large;

  try {
    if (*gen) {
      auto kind = parse_family_kind(family);
      if (!kind) throw PreconditionError("unknown family \"" + family + "\"");
      FamilySpec spec{*kind, n, k, R, S, T};
      if (*kind == FamilyKind::kFRst && spec.R.empty()) spec.R = {0, 0};
      out << to_json(build_family(spec)) << "\n";
      return kExitOk;
    }
    if (*spectrum) {
      const Hypergraph h = spectrum_input.load(in);
      const auto r = spectral_radius(h);
      JsonWriter w;
      w.begin_object();
      w.key("rho").value(r.rho).key("x").value(std::span<const double>(r.x));
      w.key("residual").value(r.residual).key("iterations").value(r.iterations);
      if (checks) {
        w.key("pendant_violations");
        write_violations(w, check_pendant_formula(h, r));
        w.key("internal_edge_violations");
        write_violations(w, check_internal_edge_formula(h, r));
        w.key("orbit_spread").value(check_orbit_constancy(r, orbit_partition(h)));
      }
      w.end_object();
      out << w.str() << "\n";
      return kExitOk;
    }
    if (*swap) {
      const json j = parse_json(load_text(swap_spec, in));
      if (!j.contains("graph")) throw PreconditionError("swap spec needs \"graph\"");
      const Hypergraph h = hypergraph_from_json(j.at("graph"));
      SwapSpec spec{edge_ref(h, j, "e"), edge_ref(h, j, "f"), int_list(j, "U1"), int_list(j, "V1")};
      const Hypergraph swapped = edge_swap(h, spec);
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      std::vector<double> random_x(static_cast<std::size_t>(h.n()));
      for (auto& v : random_x) v = unit(rng);

      JsonWriter w;
      w.begin_object();
      w.key("seed").value(static_cast<long long>(seed));
      w.key("graph").value(swapped);
      w.key("random_vector_delta");
      write_delta(w, swap_delta(h, spec, random_x));
      if (j.contains("x")) {
        std::vector<double> x;
        for (const auto& v : j.at("x")) x.push_back(v.get<double>());
        w.key("given_vector_delta");
        write_delta(w, swap_delta(h, spec, x));
      }
      const auto principal = spectral_radius(h);
      w.key("principal_vector_delta");
      write_delta(w, swap_delta(h, spec, principal.x));
      w.key("lemma");
      write_report(w, check_swap_lemma(h, spec));
      w.end_object();
      out << w.str() << "\n";
      return kExitOk;
    }
    if (*relocate) {
      const json j = parse_json(load_text(relocate_spec, in));
      if (!j.contains("graph") || !j.contains("moves") || !j.at("moves").is_array()) {
        throw PreconditionError("relocate spec needs \"graph\" and a \"moves\" array");
      }
      const Hypergraph h = hypergraph_from_json(j.at("graph"));
      std::vector<EdgeMove> moves;
      for (const auto& mv : j.at("moves")) moves.push_back({edge_ref(h, mv, "edge"), int_list(mv, "from"), int_list(mv, "to")});
      const auto principal = spectral_radius(h);
      const auto report = check_relocation_lemma(h, moves, principal.x);
      JsonWriter w;
      w.begin_object();
      w.key("graph").value(report.result);
      w.key("lemma");
      write_report(w, report);
      w.end_object();
      out << w.str() << "\n";
      return kExitOk;
    }
    if (*enumerate) {
      if (format.empty()) format = out_path.ends_with(".csv") ? "csv" : "json";
      const auto report = rank_table(n, k, options);
      const std::string text = format == "csv" ? report_csv(report) : report_json(report, true, timing);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw PreconditionError("cannot write " + out_path);
        f << text;
      }
      return kExitOk;
    }
    if (*verify) {
      if (theorem == "ordering") {
        const auto v = verify_family_ordering(n, k);
        out << ordering_json(v);
        return v.pass ? kExitOk : kExitVerdictFailed;
      }
      const auto v = theorem == "1" ? verify_theorem_1(n, k, options) : verify_theorem_2(n, k, options);
      out << verdict_json(v);
      return v.pass ? kExitOk : kExitVerdictFailed;
    }
    if (*rank) {
      const auto report = rank_table(n, k, options);
      out << (format == "csv" ? report_csv(report) : report_json(report, false, false));
      return kExitOk;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerdictFailed;
  }
  return kExitUsage;
}

}  // namespace hyperspec
