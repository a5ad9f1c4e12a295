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

#include "oracle.hpp"
#include "util.hpp"

using namespace womlat;
using testutil::c2_op;

namespace {

Assignment xy(std::string x, std::string y) { return {{"x", std::move(x)}, {"y", std::move(y)}}; }

}  // namespace

TEST(Wom, Examples) {
  EXPECT_TRUE(is_weakly_orthomodular(fixture("FIG2")));
  EXPECT_TRUE(is_weakly_orthomodular(fixture("M3B")));
  auto r = is_weakly_orthomodular(c2_op("0", "0"));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, xy("1", "0"));
}

TEST(Dwom, Examples) {
  EXPECT_TRUE(is_dually_weakly_orthomodular(fixture("FIG2")));
  EXPECT_TRUE(is_dually_weakly_orthomodular(fixture("M3B")));
  auto r = is_dually_weakly_orthomodular(c2_op("1", "1"));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, xy("0", "1"));
}

TEST(DoubleNegation, Examples) {
  EXPECT_TRUE(satisfies_double_negation(fixture("FIG2")));
  auto r = satisfies_double_negation(fixture("M3B"));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, (Assignment{{"x", "a"}}));
  EXPECT_TRUE(satisfies_weak_double_negation(fixture("M3B")));
  EXPECT_FALSE(is_involution(fixture("M3B")));
  EXPECT_EQ(is_involution(fixture("M3B")).witness, (Assignment{{"x", "a"}}));
}

TEST(Complementation, Examples) {
  EXPECT_TRUE(is_complementation(fixture("M3A")));
  EXPECT_TRUE(is_complementation(fixture("FIG2")));
  EXPECT_FALSE(is_complementation(c2_op("0", "0")));
}

TEST(Orthomodular, Fig2FailsAtAntitone) {
  auto r = is_orthomodular(fixture("FIG2"));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, xy("a", "f"));
  EXPECT_NE(r.detail.find("a<=f but f'=c not<= g=a'"), std::string::npos) << r.detail;
  EXPECT_FALSE(is_orthocomplementation(fixture("FIG2")));
}

TEST(Orthomodular, BooleanAlgebrasPass) {
  EXPECT_TRUE(is_orthomodular(fixture("B4")));
  EXPECT_TRUE(is_orthomodular(fixture("B8")));
  EXPECT_TRUE(is_orthocomplementation(fixture("B8")));
}

TEST(LemmaBounds, Examples) {
  for (const char* name : {"FIG2", "M3B"}) {
    auto r = check_lemma_bounds(fixture(name));
    EXPECT_TRUE(r) << name;
    EXPECT_EQ(r.parts.size(), 4u);
  }
  auto r = check_lemma_bounds(c2_op("0", "0"));
  EXPECT_TRUE(r);
  EXPECT_TRUE(r.part("dwom: x /\\ x' = 0")->holds);
  EXPECT_TRUE(r.part("dwom: 1' = 0")->holds);
}

// A failing report's witness reproduces the violation.
TEST(Report, WitnessReproducesViolation) {
  auto a = c2_op("0", "0");
  auto r = is_weakly_orthomodular(a);
  const auto& l = a.lattice();
  Elem x = l.index_of((*r.witness)[0].second);
  Elem y = l.index_of((*r.witness)[1].second);
  EXPECT_NE(l.join(l.meet(x, y), l.meet(x, a(l.meet(x, y)))), x);
}

// Every predicate agrees with the brute-force oracle on every table of every
// lattice with up to five elements.
TEST(Predicates, AgreeWithOracle) {
  std::size_t seen = 0;
  testutil::for_each_algebra(5, [&](const UnaryAlgebra& a) {
    auto o = oracle::alg_of(a);
    ++seen;
    ASSERT_EQ(is_weakly_orthomodular(a).holds, oracle::wom(o)) << table_string(a);
    ASSERT_EQ(is_dually_weakly_orthomodular(a).holds, oracle::dwom(o)) << table_string(a);
    ASSERT_EQ(satisfies_double_negation(a).holds, oracle::dnl(o));
    ASSERT_EQ(satisfies_weak_double_negation(a).holds, oracle::wdnl(o));
    ASSERT_EQ(is_complementation(a).holds, oracle::complemented(o));
    ASSERT_EQ(is_antitone(a).holds, oracle::antitone(o));
    ASSERT_EQ(satisfies_de_morgan(a).holds, oracle::de_morgan(o));
    ASSERT_EQ(is_orthomodular(a).holds, oracle::complemented(o) && oracle::dnl(o) &&
                                            oracle::antitone(o) && oracle::de_morgan(o) &&
                                            oracle::wom(o));
  });
  // 1 + 4 + 27 + 2*256 + 5*3125
  EXPECT_EQ(seen, 1u + 4 + 27 + 512 + 15625);
}

// Counts of dWOM tables per carrier, from an independent scan.
TEST(Predicates, DwomCountsMatchOracle) {
  for (const char* name : {"M3", "C2", "C3", "B4", "C4"}) {
    auto l = fixture_lattice(name);
    auto o = oracle::order_of(*l);
    std::size_t lib = 0, ref = 0;
    for (const auto& t : oracle::all_tables(l->size())) {
      UnaryAlgebra a(l, {t.begin(), t.end()});
      lib += is_dually_weakly_orthomodular(a).holds;
      ref += oracle::dwom({o, t});
    }
    EXPECT_EQ(lib, ref) << name;
  }
  auto m3 = fixture_lattice("M3");
  std::size_t count = 0;
  for (const auto& t : oracle::all_tables(5))
    count += is_dually_weakly_orthomodular(UnaryAlgebra(m3, {t.begin(), t.end()})).holds;
  EXPECT_EQ(count, 135u);
}

TEST(UnaryAlgebra, RejectsBadTables) {
  EXPECT_THROW(UnaryAlgebra(testutil::c2(), {0}), Error);
  EXPECT_THROW(UnaryAlgebra(testutil::c2(), {0, 7}), Error);
  EXPECT_THROW(c2_op("0", "q"), Error);
}

TEST(Enumeration, CapExceeded) {
  try {
    for_each_unary_table(10, [](auto) { return true; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}
