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

// Text notation for boosting circuits:
//
//   CN(2,3);X(3);Fr(1 2, 3);X(3);
//
// X(q) is NOT, CN(a,b) is CNOT with control a and target b, Fr(a b, c) is a
// Fredkin gate with control c swapping a and b. Every op ends with ';'.
// '#' starts a comment running to end of line. Each non-empty line is one
// layer of the circuit.

#ifndef BOOSTSIM_CIRCUIT_TEXT_H_
#define BOOSTSIM_CIRCUIT_TEXT_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "boostsim/circuit.h"

namespace boostsim {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Circuit ParseCircuit(std::string_view text, int width);

std::string SerializeCircuit(const Circuit& circuit);

std::string FormatGate(const Gate& gate);

Circuit ReadCircuitFile(const std::string& path, int width);
void WriteCircuitFile(const std::string& path, const Circuit& circuit);

}  // namespace boostsim

#endif  // BOOSTSIM_CIRCUIT_TEXT_H_
