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

#include "logcount/parallel.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace logcount {

std::optional<int> parse_thread_cap(std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || p != end || v < 0) return std::nullopt;
  return v;
}

void apply_thread_cap_from_env() {
  const char* raw = std::getenv(kThreadsEnvVar);
  if (raw == nullptr) return;
  const auto cap = parse_thread_cap(raw);
  if (!cap) {
    throw std::invalid_argument(std::string(kThreadsEnvVar) +
                                " must be a non-negative integer, got '" + raw +
                                "'");
  }
  if (*cap > 0) omp_set_num_threads(*cap);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace logcount
