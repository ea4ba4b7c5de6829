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
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// {"n": int, "edges": [[int, ...], ...]}; edges may be in any order.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Hypergraph parse_hypergraph(std::string_view text);

// Doubles as %.17g; non-finite values become null.
std::string format_double(double x);

// Streaming writer for compact, byte-stable JSON. nlohmann::json prints the
// shortest round-trip form of a double, whereas reports here always carry 17
// significant digits.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(int x);
  JsonWriter& value(long long x);
  JsonWriter& value(std::size_t x);
  JsonWriter& value(bool x);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(std::span<const double> xs);
  JsonWriter& value(std::span<const int> xs);
  JsonWriter& value(const Hypergraph& h);
  JsonWriter& null();

  const std::string& str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool after_key_ = false;
};

std::string to_json(const Hypergraph& h);

}  // namespace hyperspec
