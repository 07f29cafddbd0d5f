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

#ifndef BOOSTSIM_CIRCUIT_H_
#define BOOSTSIM_CIRCUIT_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace boostsim {

// Qubit indices are 1-based everywhere in the public API.
using Qubit = int;

enum class GateKind : uint8_t { kNot, kCnot, kFredkin };

// A reversible classical gate on computational-basis states.
//
//   kNot:     q[0] is flipped.
//   kCnot:    q[0] is the control, q[1] the target.
//   kFredkin: q[0] and q[1] are swapped when the control q[2] is 1.
//
// The operand order of kFredkin matches the "Fr(a b, c)" text notation.
struct Gate {
  GateKind kind = GateKind::kNot;
  Qubit q[3] = {0, 0, 0};

  static Gate Not(Qubit target);
  static Gate Cnot(Qubit control, Qubit target);
  static Gate Fredkin(Qubit swap_a, Qubit swap_b, Qubit control);

  int arity() const;
  Qubit max_qubit() const;

  friend bool operator==(const Gate& a, const Gate& b);
};

class WidthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws WidthError if a gate index is < 1, > width, or repeated.
void ValidateGate(const Gate& gate, int width);

// An ordered gate list over `width` qubits.
//
// Layer marks record the gate offsets where a generator depth step ends;
// the serializer emits one line per layer. Marks never describe an empty
// layer.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::size_t>& layer_marks() const { return marks_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  void push_back(const Gate& gate);
  void append(const Circuit& other);
  // Closes the current layer. No-op when the layer holds no gates.
  void mark_layer();

  // Gates in reverse order. Since every gate is an involution this is the
  // inverse permutation.
  Circuit inverse() const;

  // Compares width and gate list; layer marks are layout only.
  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  int width_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::size_t> marks_;
};

// The 3-qubit boost of the basic circuit (a): CN(b,c);X(c);Fr(a b, c);X(c).
Circuit BasicBoostA(int width, Qubit a, Qubit b, Qubit c);
void AppendBasicBoostA(Circuit& circuit, Qubit a, Qubit b, Qubit c);

// The bias inversion of the basic circuit (b): X(b).
void AppendBasicBoostB(Circuit& circuit, Qubit b);

// Bit-string semantics. Bit i of `bits` (0-based) holds qubit i+1, so
// circuits up to 64 qubits are supported. This is the reference
// semantics the engines are checked against.
uint64_t ApplyToBits(const Gate& gate, uint64_t bits);
uint64_t ApplyToBits(const Circuit& circuit, uint64_t bits);

// String form: character j is qubit j+1, '0' or '1'.
std::string ApplyToBitstring(const Circuit& circuit, const std::string& input);

}  // namespace boostsim

#endif  // BOOSTSIM_CIRCUIT_H_
