// Copyright 2026 The womlat Authors
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


#include <gtest/gtest.h>

#include "util.hpp"

using namespace womlat;

TEST(Fixtures, Names) {
  for (const auto& n : fixture_names()) EXPECT_NO_THROW(fixture(n)) << n;
  try {
    fixture("M4");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownFixture);
  }
}

TEST(Fixtures, Tables) {
  EXPECT_EQ(table_string(fixture("M3A")), "0:1 a:b b:c c:a 1:0");
  EXPECT_EQ(table_string(fixture("M3B")), "0:1 a:b b:c c:b 1:0");
  EXPECT_EQ(table_string(fixture("FIG2")), "0:1 a:g b:h c:f d:e e:d f:c g:a h:b 1:0");
}

TEST(Fixtures, M3BClassification) {
  auto a = fixture("M3B");
  EXPECT_TRUE(is_weakly_orthomodular(a));
  EXPECT_TRUE(is_dually_weakly_orthomodular(a));
  EXPECT_TRUE(satisfies_weak_double_negation(a));
  EXPECT_FALSE(satisfies_double_negation(a));
}

TEST(Fixtures, Fig2Classification) {
  auto a = fixture("FIG2");
  EXPECT_TRUE(is_weakly_orthomodular(a));
  EXPECT_TRUE(is_dually_weakly_orthomodular(a));
  EXPECT_TRUE(satisfies_double_negation(a));
  EXPECT_TRUE(is_complementation(a));
  EXPECT_FALSE(is_antitone(a));
}

TEST(Fixtures, BooleanAreOrthomodular) {
  EXPECT_TRUE(is_orthomodular(fixture("B4")));
  EXPECT_TRUE(is_orthomodular(fixture("B8")));
}

TEST(Fixtures, Chains) {
  EXPECT_TRUE(satisfies_double_negation(fixture("C3")));
  EXPECT_FALSE(is_complementation(fixture("C3")));
  EXPECT_TRUE(is_antitone(fixture("C4")));
}

TEST(LatFormat, RoundTripAllFixtures) {
  for (const auto& n : fixture_names()) {
    auto a = fixture(n);
    auto f = parse_lat(write_lat(a.lattice(), &a));
    EXPECT_EQ(*f.lattice, a.lattice()) << n;
    EXPECT_EQ(f.algebra(), a) << n;
  }
}

TEST(LatFormat, BinaryTablesRoundTrip) {
  auto a = fixture("FIG2");
  auto arrow = w_implication_from_complement(a);
  auto prod = sasaki_product(a);
  auto f = parse_lat(write_lat(a.lattice(), &a, &arrow, &prod));
  EXPECT_EQ(*f.arrow, arrow);
  EXPECT_EQ(*f.prod, prod);
  EXPECT_EQ(f.arrow->role(), OpRole::Implication);
}

TEST(LatFormat, CommentsAndMultiLineSections) {
  auto f = parse_lat(
      "# diamond\n[elements]\n0 a\nb 1\n[covers] 0 a ; 0 b\n  ; a 1 ; b 1 # done\n"
      "[unary '] 0:1 a:b\n b:a 1:0\n");
  EXPECT_EQ(f.lattice->size(), 4u);
  EXPECT_TRUE(is_orthomodular(f.algebra()));
}

TEST(LatFormat, Errors) {
  auto kind = [](const char* text) {
    try {
      parse_lat(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantFailed;
  };
  EXPECT_EQ(kind("[covers] 0 1"), ErrorKind::FormatError);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 1\n[unary '] 0:1"), ErrorKind::FormatError);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 1\n[unary '] 0:1 1:0 0:0"), ErrorKind::FormatError);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 1\n[nope]"), ErrorKind::FormatError);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 1 2"), ErrorKind::FormatError);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 q"), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 1\n[unary '] 0:1 1:z"), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind("[elements] 0 1\n[covers] 0 1\n[binary ->] (0,0):1"), ErrorKind::FormatError);
  EXPECT_EQ(kind("[elements] a b\n"), ErrorKind::NotALattice);
  EXPECT_THROW(parse_lat("[elements] 0 1\n[covers] 0 1").algebra(), Error);
}

TEST(MsrFormat, RoundTripAndErrors) {
  auto a = fixture("M3A");
  const auto& l = a.lattice();
  auto s = parse_msr(l, "0: 0\na: 1/2\nb: 2/4 # reduced\nc: 1/2\n1: 1\n");
  EXPECT_EQ(s(l.index_of("b")), Rational(1, 2));
  EXPECT_EQ(write_msr(l, s), "0: 0\na: 1/2\nb: 1/2\nc: 1/2\n1: 1\n");
  EXPECT_THROW(parse_msr(l, "0: 0\n"), Error);
  EXPECT_THROW(parse_msr(l, "0: 0\na: 1/0\nb: 0\nc: 0\n1: 1\n"), Error);
  EXPECT_THROW(parse_msr(l, "0: 0\na: 3/2\nb: 0\nc: 0\n1: 1\n"), Error);
  EXPECT_THROW(parse_msr(l, "0: 0\n0: 0\na: 0\nb: 0\nc: 0\n1: 1\n"), Error);
  EXPECT_THROW(parse_msr(l, "0 0\n"), Error);
}
