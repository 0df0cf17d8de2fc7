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

#include <optional>
#include <string_view>

namespace logcount {

inline constexpr const char* kThreadsEnvVar = "LOGCOUNT_THREADS";

/// Parses a LOGCOUNT_THREADS value: 0 means "let OpenMP decide". Returns
/// nullopt for anything that is not a non-negative integer.
[[nodiscard]] std::optional<int> parse_thread_cap(std::string_view text);

/// Applies LOGCOUNT_THREADS, if set, to the OpenMP runtime. Throws
/// std::invalid_argument on a malformed value.
void apply_thread_cap_from_env();

[[nodiscard]] int max_threads();

}  // namespace logcount
