// Copyright 2026 The ctsynth Authors
//
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

#include <string>
#include <string_view>

#include "ctsynth/circuit.hpp"

namespace ctsynth {

/// OpenQASM 2.0 text over h, t, tdg, s, sdg, x, z, cx and a single register
/// `q`. Roles are recorded in `// role: q[i] <name>` comment lines.
std::string export_qasm(const Circuit& c, std::string_view header_comment = {});

/// Inverse of export_qasm. Throws ParseError carrying line and column.
Circuit parse_qasm(std::string_view text);

}  // namespace ctsynth
