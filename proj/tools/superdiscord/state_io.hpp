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

#include "json.hpp"
#include "superdiscord/qstate.hpp"

namespace superdiscord::cli {

/// {"dim_a": int, "dim_b": 2, "re": [[...]], "im": [[...]]}, row-major,
/// A (x) B ordering. Throws BadDimension / DomainError on malformed input
/// and the DensityMatrix errors on invalid states.
DensityMatrix state_from_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const DensityMatrix& rho);

DensityMatrix read_state_file(const std::string& path);

}  // namespace superdiscord::cli
