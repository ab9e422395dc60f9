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

#include "ctsynth/matrix_io.hpp"

#include <limits>

#include <json.hpp>

#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 0, 0); }

void line_column(std::string_view text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

Integer read_integer(const json& v, const char* field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) fail(std::string("field '") + field + "' is not an integer");
    return out;
  }
  fail(std::string("field '") + field + "' must be an integer");
}

double read_real(const json& v, const char* field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    double out = 0;
    try {
      out = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) fail(std::string("field '") + field + "' is not a decimal");
    return out;
  }
  fail(std::string("field '") + field + "' must be a number");
}

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json stats_json(const GateStats& s) {
  ordered_json hist = ordered_json::object();
  for (std::size_t k = 0; k < kGateKindCount; ++k)
    hist[std::string(gate_name(static_cast<GateKind>(k)))] = s.histogram[k];
  return ordered_json{{"total", s.total}, {"t_count", s.t_count}, {"width", s.width}, {"histogram", hist}};
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 0, column = 0;
    line_column(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
    throw ParseError("malformed JSON", line, column);
  }
  if (!doc.is_object()) fail("matrix file must be a JSON object");

  MatrixFile out;
  const json& q = member(doc, "qubits");
  if (!q.is_number_integer() || q.get<long long>() < 0 || q.get<long long>() > 16)
    fail("'qubits' must be an integer in [0, 16]");
  out.qubits = q.get<int>();
  const json& fmt = member(doc, "format");
  if (!fmt.is_string()) fail("'format' must be a string");
  if (fmt == "ring")
    out.format = MatrixFile::Format::Ring;
  else if (fmt == "float")
    out.format = MatrixFile::Format::Float;
  else
    fail("'format' must be \"ring\" or \"float\"");

  const json& entries = member(doc, "entries");
  const std::size_t dim = std::size_t{1} << out.qubits;
  if (!entries.is_array() || entries.size() != dim * dim)
    fail("'entries' must be an array of " + std::to_string(dim * dim) + " entries");

  const auto d = static_cast<Eigen::Index>(dim);
  out.floating = FloatMatrix::Zero(d, d);
  if (out.format == MatrixFile::Format::Ring) out.ring = RingMatrix(dim);
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const json& e = entries[idx];
    if (!e.is_object()) fail("entry " + std::to_string(idx) + " must be an object");
    const std::size_t row = idx / dim, col = idx % dim;
    if (out.format == MatrixFile::Format::Ring) {
      if (e.contains("re") || e.contains("im")) fail("float-shaped entry in a ring matrix");
      QuadForm qf{read_integer(member(e, "a"), "a"), read_integer(member(e, "b"), "b"),
                  read_integer(member(e, "c"), "c"), read_integer(member(e, "d"), "d"), 0};
      const json& kappa = member(e, "kappa");
      if (!kappa.is_number_integer() || kappa.get<long long>() < 0) fail("'kappa' must be a non-negative integer");
      qf.kappa = kappa.get<unsigned long>();
      out.ring(row, col) = RingScalar::from_quad(qf);
    } else {
      if (e.contains("a") || e.contains("kappa")) fail("ring-shaped entry in a float matrix");
      out.floating(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          std::complex<double>(read_real(member(e, "re"), "re"), read_real(member(e, "im"), "im"));
    }
  }
  if (out.format == MatrixFile::Format::Ring) out.floating = to_float(out.ring);
  return out;
}

std::string ring_matrix_to_json(const RingMatrix& m) {
  int n = 0;
  while ((std::size_t{1} << n) < m.dim()) ++n;
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      QuadForm q = m(r, c).to_quad();
      entries.push_back(ordered_json{{"a", integer_json(q.a)},
                                     {"b", integer_json(q.b)},
                                     {"c", integer_json(q.c)},
                                     {"d", integer_json(q.d)},
                                     {"kappa", q.kappa}});
    }
  ordered_json doc{{"qubits", n}, {"format", "ring"}, {"entries", entries}};
  return doc.dump(2);
}

std::string float_matrix_to_json(const FloatMatrix& m) {
  int n = 0;
  while ((Eigen::Index{1} << n) < m.rows()) ++n;
  ordered_json entries = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back(ordered_json{{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
  ordered_json doc{{"qubits", n}, {"format", "float"}, {"entries", entries}};
  return doc.dump(2);
}

std::string gate_stats_to_json(const GateStats& s) { return stats_json(s).dump(2); }

std::string four_square_to_json(const Integer& n, const FourSquare& f) {
  ordered_json doc{{"n", integer_json(n)},
                   {"squares", ordered_json::array({integer_json(f.a), integer_json(f.b), integer_json(f.c),
                                                    integer_json(f.d)})},
                   {"verified", f.sum() == n}};
  return doc.dump(2);
}

std::string report_to_json(const SynthesisReport& r) {
  const bool approx = r.mode == SynthesisReport::Mode::Approx;
  ordered_json roles = ordered_json::array();
  for (QubitRole role : r.roles) roles.push_back(std::string(role_name(role)));
  ordered_json refls = ordered_json::array();
  for (const ReflectionReport& x : r.reflections) {
    ordered_json e{{"column", x.column + 1}, {"sde", x.sde}, {"gates", x.stats.total}, {"t_count", x.stats.t_count}};
    if (approx) {
      e["m"] = x.m;
      e["split"] = x.split;
      e["distance_bound"] = x.distance_bound;
    }
    refls.push_back(e);
  }
  ordered_json doc{{"mode", approx ? "approx" : "exact"},
                   {"qubits", r.qubits},
                   {"dimension", r.dimension},
                   {"reflection_count", r.reflections.size()},
                   {"width", r.width},
                   {"roles", roles},
                   {"ancilla_count", r.ancilla_count},
                   {"gate_stats", stats_json(r.total)},
                   {"t_count", r.total.t_count},
                   {"verified", r.verified}};
  if (approx) {
    doc["eps"] = r.eps;
    doc["per_reflection_eps"] = r.per_reflection_eps;
    doc["m"] = r.m;
    doc["seed"] = r.seed;
    doc["distance"] = r.distance;
    doc["distance_bound_sum"] = r.distance_bound_sum;
    doc["constant_c"] = r.constant_c;
  } else {
    doc["exact_equality"] = r.exact_equality;
    doc["distance"] = 0.0;
  }
  doc["flag_convention"] = r.flag_convention;
  doc["reflections"] = refls;
  return doc.dump(2);
}

}  // namespace ctsynth
