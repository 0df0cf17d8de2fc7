// Copyright 2026 The logcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logcount {

/// Fixed six-decimal rendering (round-half-even on the binary value, "-0"
/// normalized). NaN and infinities render as "null".
[[nodiscard]] std::string format_fixed6(double v);

/// Streaming writer for deterministic, pretty-printed JSON. Keys appear in
/// insertion order.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& null();

  /// The document followed by a trailing newline.
  [[nodiscard]] std::string str() const { return out_ + "\n"; }

 private:
  void before_value();
  void newline();

  struct Frame {
    bool is_object;
    bool empty = true;
  };
  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

[[nodiscard]] std::string json_escape(std::string_view s);

}  // namespace logcount
