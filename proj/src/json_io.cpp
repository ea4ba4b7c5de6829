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

#include "hyperspec/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "hyperspec/error.hpp"

namespace hyperspec {

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw PreconditionError("hypergraph JSON must be an object with \"n\" and \"edges\"");
  }
  if (!j.at("n").is_number_integer()) throw PreconditionError("\"n\" must be an integer");
  if (!j.at("edges").is_array()) throw PreconditionError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array()) throw PreconditionError("each edge must be an array of vertex indices");
    Edge edge;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw PreconditionError("vertex indices must be integers");
      edge.push_back(v.get<int>());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(j.at("n").get<int>(), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
  return hypergraph_from_json(j);
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void JsonWriter::separator() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separator();
  out_ += nlohmann::json(std::string(k)).dump();
  out_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separator();
  out_ += format_double(x);
  return *this;
}

JsonWriter& JsonWriter::value(int x) { return value(static_cast<long long>(x)); }

JsonWriter& JsonWriter::value(std::size_t x) {
  separator();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(long long x) {
  separator();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool x) {
  separator();
  out_ += x ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separator();
  out_ += nlohmann::json(std::string(s)).dump();
  return *this;
}

JsonWriter& JsonWriter::value(std::span<const double> xs) {
  begin_array();
  for (double x : xs) value(x);
  return end_array();
}

JsonWriter& JsonWriter::value(std::span<const int> xs) {
  begin_array();
  for (int x : xs) value(x);
  return end_array();
}

JsonWriter& JsonWriter::value(const Hypergraph& h) {
  begin_object();
  key("n").value(h.n());
  key("edges").begin_array();
  for (const auto& e : h.edges()) value(std::span<const int>(e));
  end_array();
  return end_object();
}

JsonWriter& JsonWriter::null() {
  separator();
  out_ += "null";
  return *this;
}

std::string to_json(const Hypergraph& h) {
  JsonWriter w;
  w.value(h);
  return w.str();
}

}  // namespace hyperspec
