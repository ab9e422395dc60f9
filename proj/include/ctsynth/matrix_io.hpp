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
#include "ctsynth/numtheory.hpp"
#include "ctsynth/synth.hpp"

namespace ctsynth {

/// JSON matrix document:
///   {"qubits": n, "format": "ring" | "float", "entries": [... 4^n, row-major]}
/// Ring entries are {"a","b","c","d","kappa"} meaning
/// ((a + b sqrt2) + i (c + d sqrt2)) / sqrt2^kappa; integers may be given as
/// JSON numbers or decimal strings. Float entries are {"re","im"}.
struct MatrixFile {
  enum class Format { Ring, Float };
  int qubits = 0;
  Format format = Format::Ring;
  RingMatrix ring;       // set for Format::Ring
  FloatMatrix floating;  // set for both; the double image for ring input
};

/// Throws ParseError (with line and column for malformed JSON).
MatrixFile parse_matrix_file(std::string_view text);

std::string ring_matrix_to_json(const RingMatrix& m);
std::string float_matrix_to_json(const FloatMatrix& m);
std::string gate_stats_to_json(const GateStats& s);
std::string four_square_to_json(const Integer& n, const FourSquare& f);
std::string report_to_json(const SynthesisReport& r);

}  // namespace ctsynth
