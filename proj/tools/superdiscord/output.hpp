// Copyright 2026 The superdiscord Authors
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

#include <string>
#include <vector>

#include "json.hpp"

namespace superdiscord::cli {

/// 12 significant digits, lowercase exponent; -0 prints as 0.
std::string format_number(double v);

/// Pretty-printed JSON with sorted keys and format_number() for floats.
std::string dump_json(const nlohmann::json& doc);

/// Flattens nested objects into "outer_inner" keys (sorted).
std::vector<std::pair<std::string, nlohmann::json>> flatten(const nlohmann::json& object);

std::string csv_field(const nlohmann::json& value);

}  // namespace superdiscord::cli
