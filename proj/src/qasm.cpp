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

#include "ctsynth/qasm.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "ctsynth/errors.hpp"

namespace ctsynth {

std::string export_qasm(const Circuit& c, std::string_view header_comment) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (!header_comment.empty()) {
    std::istringstream lines{std::string(header_comment)};
    for (std::string line; std::getline(lines, line);) os << "// " << line << '\n';
  }
  for (int q = 0; q < c.width(); ++q) os << "// role: q[" << q << "] " << role_name(c.role(q)) << '\n';
  os << "qreg q[" << c.width() << "];\n";
  for (const Gate& g : c.gates()) {
    os << gate_name(g.kind) << ' ';
    if (g.is_two_qubit()) os << "q[" << g.control << "],";
    os << "q[" << g.target << "];\n";
  }
  return os.str();
}

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : s_(line), line_no_(line_no) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_, column()); }

  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip_ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || v < 0) fail("expected non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  // q[<n>]
  int qubit_ref() {
    std::string_view reg = identifier();
    if (reg != "q") fail("unknown register '" + std::string(reg) + "'");
    expect('[');
    int v = number();
    expect(']');
    return v;
  }

  std::string_view rest() {
    skip_ws();
    return s_.substr(pos_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_no_;
};

std::optional<GateKind> kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGateKindCount; ++i) {
    auto k = static_cast<GateKind>(i);
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::vector<std::pair<int, QubitRole>> roles;
  bool saw_version = false;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (auto pos = line.find("//"); pos != std::string_view::npos) {
      std::string_view comment = line.substr(pos + 2);
      line = line.substr(0, pos);
      LineScanner cs(comment, line_no);
      if (!cs.at_end() && cs.rest().substr(0, 5) == "role:") {
        cs.identifier();
        cs.expect(':');
        int q = cs.qubit_ref();
        std::string name(cs.rest());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        try {
          roles.emplace_back(q, role_from_name(name));
        } catch (const std::invalid_argument& e) {
          cs.fail(e.what());
        }
      }
    }

    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    std::string_view word = sc.identifier();
    if (word == "OPENQASM") {
      sc.skip_ws();
      std::string_view ver = sc.rest();
      if (ver.substr(0, 3) != "2.0") sc.fail("unsupported OpenQASM version");
      saw_version = true;
      continue;
    }
    if (word == "include") {
      continue;
    }
    if (word == "qreg") {
      if (circuit) sc.fail("only one register is supported");
      std::string_view reg = sc.identifier();
      if (reg != "q") sc.fail("register must be named q");
      sc.expect('[');
      int width = sc.number();
      sc.expect(']');
      sc.expect(';');
      if (!sc.at_end()) sc.fail("trailing characters");
      circuit.emplace(width);
      continue;
    }
    auto kind = kind_from_name(word);
    if (!kind) sc.fail("unsupported gate '" + std::string(word) + "'");
    if (!circuit) sc.fail("gate before qreg declaration");
    int a = sc.qubit_ref();
    Gate g = Gate::single(*kind, a);
    if (*kind == GateKind::CNOT) {
      sc.expect(',');
      int b = sc.qubit_ref();
      g = Gate::cnot(a, b);
    } else if (sc.accept(',')) {
      sc.fail("too many operands for '" + std::string(word) + "'");
    }
    sc.expect(';');
    if (!sc.at_end()) sc.fail("trailing characters");
    try {
      circuit->append(g);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!saw_version) throw ParseError("missing OPENQASM header", 1, 1);
  if (!circuit) throw ParseError("missing qreg declaration", line_no, 1);
  for (auto [q, role] : roles) {
    if (q >= circuit->width()) throw ParseError("role for undeclared qubit", 0, 0);
    circuit->set_role(q, role);
  }
  return *circuit;
}

}  // namespace ctsynth
