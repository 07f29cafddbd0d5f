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

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "gtest/gtest.h"

namespace boostsim {
namespace {

TEST(Parse, SingleOps) {
  EXPECT_EQ(ParseCircuit("X(3);", 3).gates(),
            std::vector<Gate>{Gate::Not(3)});
  EXPECT_EQ(ParseCircuit("CN(2,3);", 3).gates(),
            std::vector<Gate>{Gate::Cnot(2, 3)});
  // Control is the last index; the first two are swapped.
  EXPECT_EQ(ParseCircuit("Fr(9 4, 3);", 9).gates(),
            std::vector<Gate>{Gate::Fredkin(9, 4, 3)});
  EXPECT_TRUE(ParseCircuit("", 5).empty());
  EXPECT_TRUE(ParseCircuit("  \n\n# nothing here\n", 5).empty());
}

TEST(Parse, WhitespaceAndComments) {
  const Circuit c = ParseCircuit(
      "# header\n"
      "CN( 2 , 3 ) ;X(3);  # trailing\n"
      "\r\n"
      "Fr(1  2 ,3);\n",
      3);
  const std::vector<Gate> expected = {Gate::Cnot(2, 3), Gate::Not(3),
                                      Gate::Fredkin(1, 2, 3)};
  EXPECT_EQ(c.gates(), expected);
  EXPECT_EQ(c.layer_marks(), (std::vector<std::size_t>{2, 3}));
}

TEST(Parse, FixtureFiles) {
  const Circuit t2 =
      ReadCircuitFile(std::string(BOOSTSIM_DATA_DIR) + "/seven_qubit_circuit.txt", 7);
  EXPECT_EQ(t2.size(), 28u);
  EXPECT_EQ(t2.layer_marks().size(), 7u);
  EXPECT_EQ(t2.gates()[2], Gate::Fredkin(1, 2, 3));
  EXPECT_EQ(t2.gates().back(), Gate::Not(7));

  const Circuit t3 =
      ReadCircuitFile(std::string(BOOSTSIM_DATA_DIR) + "/nine_qubit_circuit.txt", 9);
  EXPECT_EQ(t3.size(), 33u);
  EXPECT_EQ(t3.gates()[26], Gate::Fredkin(9, 4, 3));
  EXPECT_EQ(t3.gates()[28], Gate::Not(4));
}

void ExpectError(const std::string& text, int width, int line, int column) {
  try {
    ParseCircuit(text, width);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text << ": " << e.what();
    EXPECT_EQ(e.column(), column) << text << ": " << e.what();
  }
}

TEST(Parse, ErrorPositions) {
  ExpectError("X(4);", 3, 1, 3);
  ExpectError("X(0);", 3, 1, 3);
  ExpectError("X(1);\nCN(1,1);", 3, 2, 1);
  ExpectError("X(1)", 3, 1, 5);
  ExpectError("X(1);\n  H(2);", 3, 2, 3);
  ExpectError("Fr(1,2, 3);", 3, 1, 5);
  ExpectError("CN(1;", 3, 1, 5);
  ExpectError("CN(1,2,3);", 3, 1, 7);
  ExpectError("X(a);", 3, 1, 3);
  ExpectError("X(99999999999);", 3, 1, 3);
}

TEST(Serialize, Forms) {
  Circuit c(4);
  c.push_back(Gate::Not(4));
  EXPECT_EQ(SerializeCircuit(c), "X(4);");

  Circuit d(3);
  d.push_back(Gate::Cnot(2, 3));
  d.push_back(Gate::Not(3));
  EXPECT_EQ(SerializeCircuit(d), "CN(2,3);X(3);");

  EXPECT_EQ(SerializeCircuit(Circuit(3)), "");
  EXPECT_EQ(FormatGate(Gate::Fredkin(9, 4, 3)), "Fr(9 4, 3)");
}

TEST(Serialize, OneLayerPerLine) {
  Circuit c(3);
  AppendBasicBoostA(c, 1, 2, 3);
  c.mark_layer();
  c.push_back(Gate::Not(2));
  c.mark_layer();
  EXPECT_EQ(SerializeCircuit(c), "CN(2,3);X(3);Fr(1 2, 3);X(3);\nX(2);");
}

Circuit RandomCircuit(std::mt19937_64& rng, int width, int gates) {
  Circuit c(width);
  std::uniform_int_distribution<int> pick(1, width);
  while (static_cast<int>(c.size()) < gates) {
    const int a = pick(rng), b = pick(rng), q = pick(rng);
    switch (rng() % 3) {
      case 0:
        c.push_back(Gate::Not(a));
        break;
      case 1:
        if (a != b) c.push_back(Gate::Cnot(a, b));
        break;
      default:
        if (a != b && b != q && a != q) c.push_back(Gate::Fredkin(a, b, q));
    }
    if (rng() % 5 == 0) c.mark_layer();
  }
  return c;
}

TEST(Serialize, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 3 + static_cast<int>(rng() % 40);
    const Circuit c = RandomCircuit(rng, width, static_cast<int>(rng() % 60));
    const std::string text = SerializeCircuit(c);
    const Circuit back = ParseCircuit(text, width);
    EXPECT_EQ(back, c) << text;
    EXPECT_EQ(SerializeCircuit(back), text);
  }
}

TEST(Files, WriteThenRead) {
  const auto path =
      (std::filesystem::temp_directory_path() / "boostsim_circuit_test.txt")
          .string();
  Circuit c(5);
  AppendBasicBoostA(c, 5, 1, 2);
  c.mark_layer();
  c.push_back(Gate::Not(3));
  WriteCircuitFile(path, c);
  EXPECT_EQ(ReadCircuitFile(path, 5), c);
  std::remove(path.c_str());
  EXPECT_THROW(ReadCircuitFile(path, 5), std::runtime_error);
}

}  // namespace
}  // namespace boostsim
