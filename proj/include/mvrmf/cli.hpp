// Copyright 2026 The mvrmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mvrmf::cli {

/// Environment variable naming the spectrum basis cache directory.
inline constexpr const char* kCacheDirEnv = "MVRMF_CACHE_DIR";

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 on usage or parse errors and 2 on domain errors; failures are reported
/// on `err` as a single line starting with "error:<kind>:".
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mvrmf::cli
