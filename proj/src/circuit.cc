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

#include "boostsim/circuit.h"

#include <algorithm>

namespace boostsim {

Gate Gate::Not(Qubit target) { return Gate{GateKind::kNot, {target, 0, 0}}; }

Gate Gate::Cnot(Qubit control, Qubit target) {
  return Gate{GateKind::kCnot, {control, target, 0}};
}

Gate Gate::Fredkin(Qubit swap_a, Qubit swap_b, Qubit control) {
  return Gate{GateKind::kFredkin, {swap_a, swap_b, control}};
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::kNot:
      return 1;
    case GateKind::kCnot:
      return 2;
    case GateKind::kFredkin:
      return 3;
  }
  return 0;
}

Qubit Gate::max_qubit() const {
  return *std::max_element(q, q + arity());
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  return std::equal(a.q, a.q + a.arity(), b.q);
}

void ValidateGate(const Gate& gate, int width) {
  const int k = gate.arity();
  for (int i = 0; i < k; ++i) {
    if (gate.q[i] < 1 || gate.q[i] > width) {
      throw WidthError("qubit index " + std::to_string(gate.q[i]) +
                       " outside 1.." + std::to_string(width));
    }
    for (int j = 0; j < i; ++j) {
      if (gate.q[i] == gate.q[j]) {
        throw WidthError("qubit index " + std::to_string(gate.q[i]) +
                         " repeated within one gate");
      }
    }
  }
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 0) throw WidthError("negative circuit width");
}

void Circuit::push_back(const Gate& gate) {
  ValidateGate(gate, width_);
  gates_.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_) {
    throw WidthError("appending a wider circuit");
  }
  const std::size_t base = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (std::size_t m : other.marks_) marks_.push_back(base + m);
}

void Circuit::mark_layer() {
  const std::size_t last = marks_.empty() ? 0 : marks_.back();
  if (gates_.size() > last) marks_.push_back(gates_.size());
}

Circuit Circuit::inverse() const {
  Circuit out(width_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

bool operator==(const Circuit& a, const Circuit& b) {
  return a.width_ == b.width_ && a.gates_ == b.gates_;
}

void AppendBasicBoostA(Circuit& circuit, Qubit a, Qubit b, Qubit c) {
  circuit.push_back(Gate::Cnot(b, c));
  circuit.push_back(Gate::Not(c));
  circuit.push_back(Gate::Fredkin(a, b, c));
  circuit.push_back(Gate::Not(c));
}

Circuit BasicBoostA(int width, Qubit a, Qubit b, Qubit c) {
  Circuit out(width);
  AppendBasicBoostA(out, a, b, c);
  return out;
}

void AppendBasicBoostB(Circuit& circuit, Qubit b) {
  circuit.push_back(Gate::Not(b));
}

uint64_t ApplyToBits(const Gate& gate, uint64_t bits) {
  auto bit = [bits](Qubit q) { return (bits >> (q - 1)) & 1u; };
  switch (gate.kind) {
    case GateKind::kNot:
      return bits ^ (uint64_t{1} << (gate.q[0] - 1));
    case GateKind::kCnot:
      return bits ^ (bit(gate.q[0]) << (gate.q[1] - 1));
    case GateKind::kFredkin: {
      const uint64_t t = (bit(gate.q[0]) ^ bit(gate.q[1])) & bit(gate.q[2]);
      return bits ^ (t << (gate.q[0] - 1)) ^ (t << (gate.q[1] - 1));
    }
  }
  return bits;
}

uint64_t ApplyToBits(const Circuit& circuit, uint64_t bits) {
  if (circuit.width() > 64) {
    throw WidthError("bit-string semantics limited to 64 qubits");
  }
  for (const Gate& g : circuit.gates()) bits = ApplyToBits(g, bits);
  return bits;
}

std::string ApplyToBitstring(const Circuit& circuit, const std::string& input) {
  if (static_cast<int>(input.size()) != circuit.width()) {
    throw WidthError("input has " + std::to_string(input.size()) +
                     " bits, circuit width is " +
                     std::to_string(circuit.width()));
  }
  uint64_t bits = 0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] != '0' && input[i] != '1') {
      throw std::invalid_argument("bit string must contain only 0 and 1");
    }
    if (input[i] == '1') bits |= uint64_t{1} << i;
  }
  bits = ApplyToBits(circuit, bits);
  std::string out(input.size(), '0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((bits >> i) & 1u) out[i] = '1';
  }
  return out;
}

}  // namespace boostsim
