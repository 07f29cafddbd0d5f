// Copyright 2026 The boostsim Authors
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

#include "boostsim/circuit_text.h"

#include <fstream>
#include <limits>
#include <sstream>

namespace boostsim {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class Reader {
 public:
  Reader(std::string_view text, int width) : text_(text), width_(width) {}

  Circuit Parse() {
    Circuit circuit(width_);
    bool line_has_gates = false;
    while (true) {
      SkipBlanks();
      if (AtEnd()) break;
      const char ch = Peek();
      if (ch == '\n') {
        Advance();
        if (line_has_gates) circuit.mark_layer();
        line_has_gates = false;
        continue;
      }
      if (ch == '#') {
        while (!AtEnd() && Peek() != '\n') Advance();
        continue;
      }
      const int op_line = line_;
      const int op_col = col_;
      Gate gate = ParseOp();
      SkipBlanks();
      Expect(';');
      try {
        circuit.push_back(gate);
      } catch (const WidthError& e) {
        throw ParseError(op_line, op_col, e.what());
      }
      line_has_gates = true;
    }
    if (line_has_gates) circuit.mark_layer();
    return circuit;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Spaces, tabs and carriage returns; newlines are significant.
  void SkipBlanks() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t' || Peek() == '\r')) {
      Advance();
    }
  }

  // Anything between tokens inside an op, including a line break.
  void SkipSpace() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t' || Peek() == '\r' ||
                        Peek() == '\n')) {
      Advance();
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(line_, col_, what);
  }

  void Expect(char ch) {
    if (AtEnd()) Fail(std::string("expected '") + ch + "' but input ended");
    if (Peek() != ch) {
      Fail(std::string("expected '") + ch + "' but found '" + Peek() + "'");
    }
    Advance();
  }

  void ExpectWord(std::string_view word) {
    for (char ch : word) Expect(ch);
  }

  int ParseInt() {
    if (AtEnd() || Peek() < '0' || Peek() > '9') Fail("expected a qubit index");
    const int line = line_;
    const int col = col_;
    long long value = 0;
    while (!AtEnd() && Peek() >= '0' && Peek() <= '9') {
      value = value * 10 + (Peek() - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw ParseError(line, col, "qubit index too large");
      }
      Advance();
    }
    if (value < 1) throw ParseError(line, col, "qubit indices start at 1");
    if (value > width_) {
      throw ParseError(line, col,
                       "qubit index " + std::to_string(value) +
                           " exceeds width " + std::to_string(width_));
    }
    return static_cast<int>(value);
  }

  Gate ParseOp() {
    const char ch = Peek();
    if (ch == 'X') {
      ExpectWord("X(");
      SkipSpace();
      const int q = ParseInt();
      SkipSpace();
      Expect(')');
      return Gate::Not(q);
    }
    if (ch == 'C') {
      ExpectWord("CN(");
      SkipSpace();
      const int a = ParseInt();
      SkipSpace();
      Expect(',');
      SkipSpace();
      const int b = ParseInt();
      SkipSpace();
      Expect(')');
      return Gate::Cnot(a, b);
    }
    if (ch == 'F') {
      ExpectWord("Fr(");
      SkipSpace();
      const int a = ParseInt();
      if (AtEnd() || Peek() != ' ') Fail("expected a space between swap targets");
      SkipSpace();
      const int b = ParseInt();
      SkipSpace();
      Expect(',');
      SkipSpace();
      const int c = ParseInt();
      SkipSpace();
      Expect(')');
      return Gate::Fredkin(a, b, c);
    }
    Fail(std::string("unknown gate starting with '") + ch + "'");
  }

  std::string_view text_;
  int width_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Circuit ParseCircuit(std::string_view text, int width) {
  return Reader(text, width).Parse();
}

std::string FormatGate(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::kNot:
      return "X(" + std::to_string(gate.q[0]) + ")";
    case GateKind::kCnot:
      return "CN(" + std::to_string(gate.q[0]) + "," +
             std::to_string(gate.q[1]) + ")";
    case GateKind::kFredkin:
      return "Fr(" + std::to_string(gate.q[0]) + " " +
             std::to_string(gate.q[1]) + ", " + std::to_string(gate.q[2]) +
             ")";
  }
  return {};
}

std::string SerializeCircuit(const Circuit& circuit) {
  std::string out;
  const auto& gates = circuit.gates();
  const auto& marks = circuit.layer_marks();
  std::size_t next_mark = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    out += FormatGate(gates[i]);
    out += ';';
    while (next_mark < marks.size() && marks[next_mark] <= i + 1) {
      if (marks[next_mark] == i + 1 && i + 1 < gates.size()) out += '\n';
      ++next_mark;
    }
  }
  return out;
}

Circuit ReadCircuitFile(const std::string& path, int width) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open circuit file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCircuit(buf.str(), width);
}

void WriteCircuitFile(const std::string& path, const Circuit& circuit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write circuit file " + path);
  out << SerializeCircuit(circuit);
  if (!circuit.empty()) out << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace boostsim
