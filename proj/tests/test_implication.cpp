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


#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "util.hpp"

using namespace womlat;
using testutil::c2_arrow;
using testutil::c2_op;

namespace {

Elem at(const UnaryAlgebra& a, const BinaryOpTable& op, const char* x, const char* y) {
  const auto& l = a.lattice();
  return op(l.index_of(x), l.index_of(y));
}

BinaryOpTable classical(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return BinaryOpTable::tabulate(a.lattice_ptr(), OpRole::Implication,
                                 [&](Elem x, Elem y) { return l.join(a(x), y); });
}

}  // namespace

TEST(DImplication, C2Examples) {
  EXPECT_TRUE(is_d_implication(classical(c2_op("1", "0"))));
  EXPECT_TRUE(is_d_implication(c2_arrow([](Elem, Elem y) { return y; })));

  auto first = c2_arrow([](Elem x, Elem) { return x; });
  auto r = is_d_implication(first);
  EXPECT_FALSE(r);
  // (x \/ y) /\ (x -> y) = y is violated at x=1, y=0; the scan reports the
  // first violated axiom overall, which is the first one at the same pair.
  const auto& third = r.parts[2];
  EXPECT_FALSE(third);
  EXPECT_EQ(r.witness, (Assignment{{"x", "1"}, {"y", "0"}}));
  EXPECT_NE(c2_op("0", "0").lattice().meet(1, first(1, 0)), 0u);
}

TEST(DImplication, FromComplementM3B) {
  auto a = fixture("M3B");
  auto d = d_implication_from_complement(a);
  EXPECT_EQ(at(a, d, "a", "0"), testutil::id(a, "b"));
  EXPECT_EQ(at(a, d, "1", "a"), testutil::id(a, "a"));
  EXPECT_EQ(at(a, d, "a", "b"), testutil::id(a, "b"));
  EXPECT_EQ(at(a, d, "0", "0"), a(a.lattice().bottom()));
  EXPECT_TRUE(is_d_implication(d));
  EXPECT_EQ(complement_from_d_implication(d), a);
}

TEST(DImplication, BooleanIsClassical) {
  for (const char* name : {"B4", "B8"}) {
    auto a = fixture(name);
    EXPECT_EQ(d_implication_from_complement(a), classical(a)) << name;
  }
}

TEST(DImplication, Preconditions) {
  try {
    d_implication_from_complement(c2_op("1", "1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
  EXPECT_THROW(complement_from_d_implication(c2_arrow([](Elem x, Elem) { return x; })), Error);
}

TEST(DImplication, ComplementFromArrow) {
  EXPECT_EQ(complement_from_d_implication(c2_arrow([](Elem, Elem y) { return y; })),
            c2_op("0", "0"));
  EXPECT_EQ(complement_from_d_implication(classical(c2_op("1", "0"))), c2_op("1", "0"));
}

TEST(DBijection, Counts) {
  auto c2 = verify_d_bijection(testutil::c2());
  EXPECT_TRUE(c2);
  EXPECT_EQ(c2.count("dwom tables"), 2u);
  EXPECT_EQ(c2.count("D-implications"), 2u);
  auto m3 = verify_d_bijection(fixture_lattice("M3"));
  EXPECT_TRUE(m3);
  EXPECT_EQ(m3.count("tables"), 3125u);
  EXPECT_EQ(m3.count("dwom tables"), 135u);
  EXPECT_EQ(m3.count("D-implications"), 135u);
  auto one = verify_d_bijection(enumerate_lattices(1)[0]);
  EXPECT_TRUE(one);
  EXPECT_EQ(one.count("D-implications"), 1u);
}

// Independent count: every n^(n*n) table on C2 and C3 that satisfies the
// axioms must be one of the derived implications.
TEST(DBijection, AxiomatizedTablesAreExactlyTheDerivedOnes) {
  for (const char* name : {"C2", "C3"}) {
    auto l = fixture_lattice(name);
    const auto n = l->size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= n;
    std::size_t axiomatic = 0;
    std::vector<Elem> t(n * n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& e : t) {
        e = c % n;
        c /= n;
      }
      axiomatic += is_d_implication(BinaryOpTable(l, t, OpRole::Implication)).holds;
    }
    EXPECT_EQ(axiomatic, verify_d_bijection(l).count("D-implications")) << name;
  }
}

TEST(Family, C2ClassicalArrow) {
  auto fam = family_from_d_implication(classical(c2_op("1", "0")));
  EXPECT_EQ(fam.apply(0, 0), 1u);
  EXPECT_EQ(fam.apply(0, 1), 0u);
  EXPECT_EQ(fam.apply(1, 1), 1u);
  EXPECT_TRUE(is_compatible_family(fam));
  auto [sub, op] = fam.on_filter(0);
  EXPECT_EQ(sub.lattice.size(), 2u);
  EXPECT_EQ(op.table()[0], 1u);
}

TEST(Family, C2SecondArrow) {
  auto arrow = c2_arrow([](Elem, Elem y) { return y; });
  auto fam = family_from_d_implication(arrow);
  EXPECT_EQ(fam.apply(0, 0), 0u);
  EXPECT_EQ(fam.apply(0, 1), 0u);
  EXPECT_EQ(fam.apply(1, 1), 1u);
  EXPECT_EQ(d_implication_from_family(fam), arrow);
}

TEST(Family, RoundTripAndContainment) {
  auto d = d_implication_from_complement(fixture("M3B"));
  auto fam = family_from_d_implication(d);
  EXPECT_TRUE(is_compatible_family(fam));
  EXPECT_EQ(d_implication_from_family(fam), d);
  const auto& l = d.lattice();
  for (Elem x : l.elements()) EXPECT_TRUE(l.leq(x, fam.apply(x, x)));
}

TEST(Family, IdentityOnBottomFilterFailsDwom) {
  CompatibleFamily fam(testutil::c2(), {0, 1, CompatibleFamily::kNone, 1});
  auto r = is_compatible_family(fam);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, (Assignment{{"x", "0"}, {"y", "1"}}));
  EXPECT_THROW(d_implication_from_family(fam), Error);
}

TEST(Family, RejectsValuesOutsideFilter) {
  EXPECT_THROW(CompatibleFamily(testutil::c2(), {1, 0, CompatibleFamily::kNone, 0}), Error);
  EXPECT_THROW(CompatibleFamily(testutil::c2(), {1, 0, 1, 1}), Error);
}

TEST(FamilyBijection, Counts) {
  auto c2 = verify_family_bijection(testutil::c2());
  EXPECT_TRUE(c2);
  EXPECT_EQ(c2.count("compatible families"), 2u);
  EXPECT_EQ(c2.count("D-implications"), 2u);
  auto c3 = verify_family_bijection(fixture_lattice("C3"));
  EXPECT_TRUE(c3);
  EXPECT_EQ(c3.count("compatible families"), c3.count("D-implications"));
  auto one = verify_family_bijection(enumerate_lattices(1)[0]);
  EXPECT_TRUE(one);
  EXPECT_EQ(one.count("compatible families"), 1u);
}

TEST(Sasaki, Examples) {
  auto b4 = fixture("B4");
  EXPECT_EQ(sasaki_implication(b4), classical(b4));
  EXPECT_EQ(at(b4, sasaki_implication(b4), "1", "1"), b4.lattice().top());
  auto f = fixture("FIG2");
  const auto& l = f.lattice();
  EXPECT_EQ(at(f, sasaki_implication(f), "a", "b"),
            l.join(l.meet(l.index_of("g"), l.index_of("h")), l.index_of("b")));
}

TEST(Sasaki, Theorem) {
  auto f = verify_sasaki_theorem(fixture("FIG2"));
  EXPECT_TRUE(f);
  EXPECT_TRUE(f.parts[0]);
  EXPECT_TRUE(f.parts[1]);
  EXPECT_TRUE(verify_sasaki_theorem(fixture("B4")));
  EXPECT_THROW(verify_sasaki_theorem(fixture("M3B")), Error);

  // involutive tables on M3 that are not WOM: both sides fail
  auto m3 = fixture_lattice("M3");
  std::size_t seen = 0;
  for (const auto& t : oracle::all_tables(5)) {
    UnaryAlgebra a(m3, {t.begin(), t.end()});
    if (!satisfies_double_negation(a) || is_weakly_orthomodular(a)) continue;
    auto r = verify_sasaki_theorem(a);
    EXPECT_TRUE(r);
    EXPECT_FALSE(r.parts[0]);
    EXPECT_FALSE(r.parts[1]);
    ++seen;
  }
  EXPECT_GT(seen, 0u);
}

TEST(WImplication, Examples) {
  auto f = fixture("FIG2");
  auto w = w_implication_from_complement(f);
  EXPECT_TRUE(is_w_implication(w));
  EXPECT_EQ(at(f, w, "a", "b"), testutil::id(f, "g"));
  EXPECT_EQ(at(f, w, "e", "a"), testutil::id(f, "f"));
  for (Elem x : f.lattice().elements()) EXPECT_EQ(w(x, f.lattice().bottom()), f(x));
  EXPECT_EQ(complement_from_w_implication(w), f);

  auto b4 = fixture("B4");
  EXPECT_TRUE(is_w_implication(classical(b4)));

  auto r = is_w_implication(c2_arrow([](Elem, Elem y) { return y; }));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, (Assignment{{"x", "1"}}));
}

TEST(WImplication, Preconditions) {
  EXPECT_THROW(w_implication_from_complement(fixture("M3B")), Error);
  EXPECT_THROW(w_implication_from_complement(c2_op("0", "0")), Error);
}

TEST(WBijection, C2AndM3) {
  auto c2 = verify_w_bijection(testutil::c2());
  EXPECT_TRUE(c2);
  EXPECT_EQ(c2.count("wom+dnl tables"), 1u);
  auto m3 = verify_w_bijection(fixture_lattice("M3"));
  EXPECT_TRUE(m3);
  EXPECT_EQ(m3.count("wom+dnl tables"), m3.count("W-implications"));
}

TEST(Properties, Examples) {
  for (const char* name : {"M3B", "FIG2"}) EXPECT_TRUE(d_implication_properties(fixture(name))) << name;
  auto c = d_implication_properties(c2_op("0", "0"));
  EXPECT_EQ(c.parts.size(), 4u);
  EXPECT_TRUE(c.parts[2]);  // 1 -> x = x
  for (const char* name : {"FIG2", "M3B", "B4"}) {
    auto r = w_implication_properties(fixture(name));
    EXPECT_TRUE(r) << name;
    EXPECT_EQ(r.parts.size(), 6u);
  }
}
