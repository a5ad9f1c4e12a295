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

// Generalized measures s: L -> [0,1] with exact rational values, the classes
// S1 and S2, and the filter/ideal characterisation of (dually) weak
// orthomodularity.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "womlat/algebra.hpp"

namespace womlat {

using Rational = boost::rational<std::int64_t>;

// Mixed comparisons against plain int recurse in some Boost releases; compare
// against these instead.
inline const Rational kZero{0};
inline const Rational kOne{1};

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

class GeneralizedMeasure {
 public:
  explicit GeneralizedMeasure(std::vector<Rational> values) : values_(std::move(values)) {
    for (const auto& v : values_)
      if (v < kZero || v > kOne)
        throw Error(ErrorKind::InvalidMeasure, "value " + to_string(v) + " outside [0,1]");
  }

  static GeneralizedMeasure constant(std::size_t n, Rational v) {
    return GeneralizedMeasure(std::vector<Rational>(n, v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator()(Elem x) const { return values_.at(x); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const GeneralizedMeasure&, const GeneralizedMeasure&) = default;

 private:
  std::vector<Rational> values_;
};

namespace detail {

inline void check_measure_size(const UnaryAlgebra& a, const GeneralizedMeasure& s) {
  if (s.size() != a.lattice().size())
    throw Error(ErrorKind::InvalidMeasure, "measure is not total on the carrier");
}

/// Scans comparable pairs x <= y.
template <class Fn>
CheckReport scan_comparable(std::string property, const FiniteLattice& l, Fn&& fn) {
  return scan(std::move(property), l, {"x", "y"},
              [&](auto v) -> std::optional<std::string> {
                if (!l.leq(v[0], v[1])) return std::nullopt;
                return fn(v[0], v[1]);
              });
}

}  // namespace detail

/// s(x \/ (y /\ x')) = s(y) for x <= y.
inline CheckReport in_S1(const UnaryAlgebra& a, const GeneralizedMeasure& s) {
  detail::check_measure_size(a, s);
  const auto& l = a.lattice();
  return detail::scan_comparable("S1", l, [&](Elem x, Elem y) -> std::optional<std::string> {
    Elem t = l.join(x, l.meet(y, a(x)));
    if (s(t) == s(y)) return std::nullopt;
    return "s(x \\/ (y /\\ x')) = s(" + l.name(t) + ") = " + to_string(s(t)) +
           " but s(y) = " + to_string(s(y));
  });
}

/// s(y /\ (x \/ y')) = s(x) for x <= y.
inline CheckReport in_S2(const UnaryAlgebra& a, const GeneralizedMeasure& s) {
  detail::check_measure_size(a, s);
  const auto& l = a.lattice();
  return detail::scan_comparable("S2", l, [&](Elem x, Elem y) -> std::optional<std::string> {
    Elem t = l.meet(y, l.join(x, a(y)));
    if (s(t) == s(x)) return std::nullopt;
    return "s(y /\\ (x \\/ y')) = s(" + l.name(t) + ") = " + to_string(s(t)) +
           " but s(x) = " + to_string(s(x));
  });
}

/// 1 on [x), 1/2 elsewhere.
inline GeneralizedMeasure witness_measure_filter(const UnaryAlgebra& a, Elem x) {
  const auto& l = a.lattice();
  std::vector<Rational> v;
  for (Elem y : l.elements()) v.push_back(l.leq(x, y) ? Rational(1) : Rational(1, 2));
  return GeneralizedMeasure(std::move(v));
}

/// 0 on (x], 1/2 elsewhere.
inline GeneralizedMeasure witness_measure_ideal(const UnaryAlgebra& a, Elem x) {
  const auto& l = a.lattice();
  std::vector<Rational> v;
  for (Elem y : l.elements()) v.push_back(l.leq(y, x) ? Rational(0) : Rational(1, 2));
  return GeneralizedMeasure(std::move(v));
}

namespace detail {

inline bool preimage_is(const GeneralizedMeasure& s, const Rational& value,
                        const std::vector<Elem>& expected, std::size_t n) {
  std::vector<Elem> got;
  for (Elem y = 0; y < n; ++y)
    if (s(y) == value) got.push_back(y);
  return got == expected;
}

}  // namespace detail

/// Decides both sides of the measure characterisation and checks that they
/// agree with the identity-based predicates.
///
/// Existence side: for every x other than 0 the filter witness must lie in S1
/// with s^-1(1) = [x) (dually: every x other than 1, ideal witness, S2,
/// s^-1(0) = (x]). Non-existence side: a pair a <= b with a \/ (b /\ a') != b
/// certifies that no s in S1 has s^-1(1) = [b), because any such s gives
/// a \/ (b /\ a') the value s(b) = 1 while it lies strictly below b.
inline CheckReport verify_measure_theorem(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  const auto n = l.size();

  auto side = [&](bool dual) {
    const std::string tag = dual ? "S2" : "S1";
    // existence
    std::optional<Elem> failed_at;
    for (Elem x : l.elements()) {
      if (x == (dual ? l.top() : l.bottom())) continue;
      auto s = dual ? witness_measure_ideal(a, x) : witness_measure_filter(a, x);
      bool member = dual ? in_S2(a, s).holds : in_S1(a, s).holds;
      bool exact = dual ? detail::preimage_is(s, 0, l.principal_ideal(x), n)
                        : detail::preimage_is(s, 1, l.principal_filter(x), n);
      if (!member || !exact) {
        failed_at = x;
        break;
      }
    }
    CheckReport existence =
        failed_at ? CheckReport::fail(tag + " existence", {{"x", l.name(*failed_at)}},
                                      "witness measure for " + l.name(*failed_at) +
                                          " is not admissible")
                  : CheckReport::pass(tag + " existence");
    // certificate of non-existence, scanned in the conditional form
    CheckReport certificate = detail::scan_comparable(
        tag + " obstruction-free", l, [&](Elem x, Elem y) -> std::optional<std::string> {
          if (!dual) {
            Elem t = l.join(x, l.meet(y, a(x)));
            if (t == y) return std::nullopt;
            // t <= y always; t != y puts t outside [y) although s(t) = s(y) = 1.
            return "x \\/ (y /\\ x') = " + l.name(t) + " < y, so no s in S1 has s^-1(1) = [" +
                   l.name(y) + ")";
          }
          Elem t = l.meet(y, l.join(x, a(y)));
          if (t == x) return std::nullopt;
          return "y /\\ (x \\/ y') = " + l.name(t) + " > x, so no s in S2 has s^-1(0) = (" +
                 l.name(x) + "]";
        });
    CheckReport predicate = dual ? is_dually_weakly_orthomodular(a) : is_weakly_orthomodular(a);
    const bool agree = existence.holds == certificate.holds && existence.holds == predicate.holds;
    CheckReport r = agree ? CheckReport::pass(tag + " agreement")
                          : CheckReport::fail(tag + " agreement", {{"table", table_string(a)}},
                                              "existence, certificate and predicate disagree");
    r.parts = {std::move(predicate), std::move(existence), std::move(certificate)};
    return r;
  };

  return all_of("measure characterization", {side(false), side(true)});
}

struct ConditionFlags {
  CheckReport one;     // s(1) = 1
  CheckReport sum;     // s(x \/ y') = s(x) + s(y') for x <= y
  CheckReport filter;  // s((x \/ y') \/ (x' /\ y)) = 1 for x <= y
  CheckReport ideal;   // s(x \/ (y /\ (x \/ y'))') = 1 for x <= y

  bool all() const { return one.holds && sum.holds && filter.holds && ideal.holds; }
  std::vector<CheckReport> list() const { return {one, sum, filter, ideal}; }
};

inline ConditionFlags check_conditions(const UnaryAlgebra& a, const GeneralizedMeasure& s) {
  detail::check_measure_size(a, s);
  const auto& l = a.lattice();
  const Elem top = l.top();
  ConditionFlags f;
  f.one = s(top) == kOne ? CheckReport::pass("(i) s(1) = 1")
                      : CheckReport::fail("(i) s(1) = 1", {},
                                          "s(1) = " + to_string(s(top)));
  // Sums are exact; a sum above 1 is a violation, not clamped.
  f.sum = detail::scan_comparable(
      "(ii) s(x \\/ y') = s(x) + s(y')", l, [&](Elem x, Elem y) -> std::optional<std::string> {
        Rational lhs = s(l.join(x, a(y)));
        Rational rhs = s(x) + s(a(y));
        if (lhs == rhs) return std::nullopt;
        return "s(x \\/ y') = " + to_string(lhs) + " but s(x) + s(y') = " + to_string(rhs);
      });
  f.filter = detail::scan_comparable(
      "(iii) s((x \\/ y') \\/ (x' /\\ y)) = 1", l,
      [&](Elem x, Elem y) -> std::optional<std::string> {
        Elem t = l.join(l.join(x, a(y)), l.meet(a(x), y));
        if (s(t) == kOne) return std::nullopt;
        return "term is " + l.name(t) + " with measure " + to_string(s(t));
      });
  f.ideal = detail::scan_comparable(
      "(iv) s(x \\/ (y /\\ (x \\/ y'))') = 1", l,
      [&](Elem x, Elem y) -> std::optional<std::string> {
        Elem t = l.join(x, a(l.meet(y, l.join(x, a(y)))));
        if (s(t) == kOne) return std::nullopt;
        return "term is " + l.name(t) + " with measure " + to_string(s(t));
      });
  return f;
}

/// On a complementation: (i), (ii), (iii) imply s in S1 and (i), (ii), (iv)
/// imply s in S2; with (i) and (ii), s(x') = 1 - s(x).
inline CheckReport verify_conditions_proposition(const UnaryAlgebra& a,
                                                 const GeneralizedMeasure& s) {
  require(is_complementation(a), "verify_conditions_proposition");
  const auto& l = a.lattice();
  auto f = check_conditions(a, s);
  const bool base = f.one.holds && f.sum.holds;

  auto implication = [&](std::string name, bool hyp, const CheckReport& member) {
    if (!hyp) return CheckReport::pass(std::move(name), "vacuous");
    if (member.holds) return CheckReport::pass(std::move(name));
    return CheckReport::fail(std::move(name), *member.witness,
                             "hypotheses hold but " + member.detail);
  };
  std::vector<CheckReport> parts{
      implication("(i),(ii),(iii) => S1", base && f.filter.holds, in_S1(a, s)),
      implication("(i),(ii),(iv) => S2", base && f.ideal.holds, in_S2(a, s))};
  if (base) {
    parts.push_back(detail::scan("s(x') = 1 - s(x)", l, {"x"},
                                 [&](auto v) -> std::optional<std::string> {
                                   if (s(a(v[0])) == kOne - s(v[0])) return std::nullopt;
                                   return "s(x') = " + to_string(s(a(v[0])));
                                 }));
  }
  auto r = all_of("conditions proposition", std::move(parts));
  r.counts = {{"hypotheses (i),(ii)", base ? 1u : 0u},
              {"(iii)", f.filter.holds ? 1u : 0u},
              {"(iv)", f.ideal.holds ? 1u : 0u}};
  return r;
}

/// Pseudo-random measure with values k/12, k in [0,12]; deterministic in
/// `rng`'s state.
inline GeneralizedMeasure random_measure(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 12);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(pick(rng), 12);
  return GeneralizedMeasure(std::move(v));
}

}  // namespace womlat
