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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "womlat/algebra.hpp"
#include "womlat/implication.hpp"

namespace womlat {

/// x * y := (x \/ y') /\ y, the Sasaki projection of x onto y.
inline BinaryOpTable sasaki_product(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return BinaryOpTable::tabulate(a.lattice_ptr(), OpRole::Product, [&](Elem x, Elem y) {
    return l.meet(l.join(x, a(y)), y);
  });
}

/// Bounded lattice with a product and an implication. The invariants of a
/// left residuated l-groupoid are established by build_lgroupoid or checked
/// with is_left_residuated_lgroupoid; the type itself does not enforce them.
struct LGroupoid {
  LatticePtr lattice;
  BinaryOpTable prod;
  BinaryOpTable arrow;
};

/// a <= b -> c implies a * b <= c, with the W-arrow x' \/ (x /\ y).
inline CheckReport check_half_adjunction(const UnaryAlgebra& a) {
  require(is_dually_weakly_orthomodular(a), "check_half_adjunction");
  const auto& l = a.lattice();
  auto prod = sasaki_product(a);
  auto arrow = detail::w_arrow_unchecked(a);
  return detail::scan("half adjunction", l, {"a", "b", "c"},
                      [&](auto v) -> std::optional<std::string> {
                        if (!l.leq(v[0], arrow(v[1], v[2])) || l.leq(prod(v[0], v[1]), v[2]))
                          return std::nullopt;
                        return "a <= b -> c but a * b = " + l.name(prod(v[0], v[1])) +
                               " not<= c";
                      });
}

namespace detail {

/// x*y <= z  <=>  x <= y->z at every triple, reported per direction.
inline std::vector<CheckReport> adjointness(const FiniteLattice& l, const BinaryOpTable& prod,
                                            const BinaryOpTable& arrow) {
  return {
      scan("x <= y -> z implies x * y <= z", l, {"x", "y", "z"},
           [&](auto v) -> std::optional<std::string> {
             if (!l.leq(v[0], arrow(v[1], v[2])) || l.leq(prod(v[0], v[1]), v[2]))
               return std::nullopt;
             return "x <= y -> z = " + l.name(arrow(v[1], v[2])) + " but x * y = " +
                    l.name(prod(v[0], v[1])) + " not<= z";
           }),
      scan("x * y <= z implies x <= y -> z", l, {"x", "y", "z"},
           [&](auto v) -> std::optional<std::string> {
             if (!l.leq(prod(v[0], v[1]), v[2]) || l.leq(v[0], arrow(v[1], v[2])))
               return std::nullopt;
             return "x * y = " + l.name(prod(v[0], v[1])) + " <= z but x not<= y -> z = " +
                    l.name(arrow(v[1], v[2]));
           })};
}

}  // namespace detail

/// Under WOM, dWOM and x''' = x': (x -> y) * x = x /\ y, and
/// a * b'' <= c iff a <= b'' -> c.
inline CheckReport check_weak_dnl_residuation(const UnaryAlgebra& a) {
  require(is_weakly_orthomodular(a), "check_weak_dnl_residuation");
  require(is_dually_weakly_orthomodular(a), "check_weak_dnl_residuation");
  require(satisfies_weak_double_negation(a), "check_weak_dnl_residuation");
  const auto& l = a.lattice();
  auto prod = sasaki_product(a);
  auto arrow = detail::w_arrow_unchecked(a);
  return all_of(
      "weak double negation residuation",
      {detail::identity("(x -> y) * x = x /\\ y", l, {"x", "y"}, "(x -> y) * x = x /\\ y",
                        [&](auto v) { return prod(arrow(v[0], v[1]), v[0]); },
                        [&](auto v) { return l.meet(v[0], v[1]); }),
       detail::scan("a * b'' <= c iff a <= b'' -> c", l, {"a", "b", "c"},
                    [&](auto v) -> std::optional<std::string> {
                      Elem bb = a(a(v[1]));
                      bool left = l.leq(prod(v[0], bb), v[2]);
                      bool right = l.leq(v[0], arrow(bb, v[2]));
                      if (left == right) return std::nullopt;
                      return std::string(left ? "a * b'' <= c" : "a <= b'' -> c") +
                             " holds but the other side fails";
                    })});
}

/// Unit laws x * 1 = 1 * x = x and full adjointness.
inline CheckReport is_left_residuated_lgroupoid(const BinaryOpTable& prod,
                                                const BinaryOpTable& arrow) {
  const auto& l = prod.lattice();
  std::vector<CheckReport> parts{
      detail::identity("x * 1 = x", l, {"x"}, "x * 1 = x",
                       [&](auto v) { return prod(v[0], l.top()); },
                       [&](auto v) { return v[0]; }),
      detail::identity("1 * x = x", l, {"x"}, "1 * x = x",
                       [&](auto v) { return prod(l.top(), v[0]); },
                       [&](auto v) { return v[0]; })};
  for (auto& p : detail::adjointness(l, prod, arrow)) parts.push_back(std::move(p));
  return all_of("left residuated l-groupoid", std::move(parts));
}

inline CheckReport is_left_residuated_lgroupoid(const LGroupoid& g) {
  return is_left_residuated_lgroupoid(g.prod, g.arrow);
}

namespace detail {

inline CheckReport lgroupoid_consequences(const UnaryAlgebra& a, const LGroupoid& g) {
  const auto& l = a.lattice();
  const auto& prod = g.prod;
  const auto& arrow = g.arrow;
  return all_of(
      "residuation consequences",
      {is_left_residuated_lgroupoid(g),
       identity("(x -> y) * x = x /\\ y", l, {"x", "y"}, "(x -> y) * x = x /\\ y",
                [&](auto v) { return prod(arrow(v[0], v[1]), v[0]); },
                [&](auto v) { return l.meet(v[0], v[1]); }),
       scan("a * b = a iff a <= b", l, {"a", "b"},
            [&](auto v) -> std::optional<std::string> {
              if ((prod(v[0], v[1]) == v[0]) == l.leq(v[0], v[1])) return std::nullopt;
              return "a * b = " + l.name(prod(v[0], v[1]));
            }),
       scan("a -> b = b iff a' <= b", l, {"a", "b"},
            [&](auto v) -> std::optional<std::string> {
              if ((arrow(v[0], v[1]) == v[1]) == l.leq(a(v[0]), v[1])) return std::nullopt;
              return "a -> b = " + l.name(arrow(v[0], v[1])) + ", a' = " + l.name(a(v[0]));
            })});
}

inline bool is_associative(const BinaryOpTable& op) {
  const auto& l = op.lattice();
  for (Elem x : l.elements())
    for (Elem y : l.elements())
      for (Elem z : l.elements())
        if (op(op(x, y), z) != op(x, op(y, z))) return false;
  return true;
}

}  // namespace detail

/// The residuation report behind build_lgroupoid: preconditions, adjointness
/// and the derived equivalences. Associativity of * is recorded as a count
/// (1 or 0) for information only.
inline CheckReport verify_residuation(const UnaryAlgebra& a) {
  auto pre = all_of("preconditions", {is_weakly_orthomodular(a),
                                      is_dually_weakly_orthomodular(a),
                                      satisfies_double_negation(a)});
  if (!pre) {
    std::vector<CheckReport> parts{std::move(pre)};
    return all_of("residuation", std::move(parts));
  }
  LGroupoid g{a.lattice_ptr(), sasaki_product(a), detail::w_arrow_unchecked(a)};
  auto r = all_of("residuation", {std::move(pre), detail::lgroupoid_consequences(a, g)});
  r.counts = {{"associative product", detail::is_associative(g.prod) ? 1u : 0u}};
  return r;
}

/// Product x * y = (x \/ y') /\ y and W-arrow x' \/ (x /\ y) on a WOM, dWOM,
/// involutive algebra. Every consequence is re-checked; a failure surfaces as
/// InvariantFailed.
inline LGroupoid build_lgroupoid(const UnaryAlgebra& a) {
  require(is_weakly_orthomodular(a), "build_lgroupoid");
  require(is_dually_weakly_orthomodular(a), "build_lgroupoid");
  require(satisfies_double_negation(a), "build_lgroupoid");
  LGroupoid g{a.lattice_ptr(), sasaki_product(a), detail::w_arrow_unchecked(a)};
  if (auto r = detail::lgroupoid_consequences(a, g); !r) {
    throw Error(ErrorKind::InvariantFailed, r.detail,
                r.witness ? std::vector<std::string>{format_assignment(*r.witness)}
                          : std::vector<std::string>{});
  }
  return g;
}

struct ConverseResult {
  CheckReport report;
  std::optional<UnaryAlgebra> comp;  // x -> 0 whenever the identities hold
};

/// Tests (x -> 0) -> 0 = x, x * y = (x \/ (y -> 0)) /\ y and
/// x -> y = (x -> 0) \/ (x /\ y); when they hold, classifies x' := x -> 0.
inline ConverseResult verify_converse(const LGroupoid& g) {
  require(is_left_residuated_lgroupoid(g), "verify_converse");
  const auto& l = *g.lattice;
  const auto& prod = g.prod;
  const auto& arrow = g.arrow;
  const Elem zero = l.bottom();
  auto identities = all_of(
      "converse identities",
      {detail::identity("(x -> 0) -> 0 = x", l, {"x"}, "(x -> 0) -> 0 = x",
                        [&](auto v) { return arrow(arrow(v[0], zero), zero); },
                        [&](auto v) { return v[0]; }),
       detail::identity("x * y = (x \\/ (y -> 0)) /\\ y", l, {"x", "y"},
                        "x * y = (x \\/ (y -> 0)) /\\ y",
                        [&](auto v) { return prod(v[0], v[1]); },
                        [&](auto v) { return l.meet(l.join(v[0], arrow(v[1], zero)), v[1]); }),
       detail::identity("x -> y = (x -> 0) \\/ (x /\\ y)", l, {"x", "y"},
                        "x -> y = (x -> 0) \\/ (x /\\ y)",
                        [&](auto v) { return arrow(v[0], v[1]); },
                        [&](auto v) { return l.join(arrow(v[0], zero), l.meet(v[0], v[1])); })});
  if (!identities) {
    std::vector<CheckReport> parts{std::move(identities)};
    return {all_of("converse", std::move(parts)), std::nullopt};
  }
  auto comp = detail::complement_at_bottom(g.arrow);
  auto classification = all_of("derived classification",
                               {is_weakly_orthomodular(comp),
                                is_dually_weakly_orthomodular(comp),
                                satisfies_double_negation(comp)});
  return {all_of("converse", {std::move(identities), std::move(classification)}),
          std::move(comp)};
}

}  // namespace womlat
