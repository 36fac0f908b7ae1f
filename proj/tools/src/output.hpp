// Copyright 2026 The ringcasimir Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ringcasimir::workbench {

/// Six significant digits, or the shortest round-trip form when `full`.
std::string format_number(double v, bool full);

/// Relative paths are placed under $RINGCASIMIR_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path);

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

/// Writes `<path>.manifest.json` next to an output file.
void write_manifest(const std::filesystem::path& output, const std::string& command,
                    const std::vector<std::string>& args, const nlohmann::json& config);

}  // namespace ringcasimir::workbench
