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

// D-implications, W-implications and the Sasaki implication, with the
// correspondences between them and unary operations / compatible families.

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "womlat/algebra.hpp"

namespace womlat {

// ---------------------------------------------------------------------------
// D-implication

/// (x \/ y) -> x = y -> x;  x \/ y \/ ((x \/ z) -> y) = z -> (x \/ y);
/// (x \/ y) /\ (x -> y) = y.  Needs no constants.
inline CheckReport is_d_implication(const BinaryOpTable& arrow) {
  const auto& l = arrow.lattice();
  return all_of(
      "D-implication",
      {detail::identity(
           "(x \\/ y) -> x = y -> x", l, {"x", "y"}, "(x \\/ y) -> x = y -> x",
           [&](auto v) { return arrow(l.join(v[0], v[1]), v[0]); },
           [&](auto v) { return arrow(v[1], v[0]); }),
       detail::identity(
           "x \\/ y \\/ ((x \\/ z) -> y) = z -> (x \\/ y)", l, {"x", "y", "z"},
           "x \\/ y \\/ ((x \\/ z) -> y) = z -> (x \\/ y)",
           [&](auto v) {
             return l.join(l.join(v[0], v[1]), arrow(l.join(v[0], v[2]), v[1]));
           },
           [&](auto v) { return arrow(v[2], l.join(v[0], v[1])); }),
       detail::identity(
           "(x \\/ y) /\\ (x -> y) = y", l, {"x", "y"}, "(x \\/ y) /\\ (x -> y) = y",
           [&](auto v) { return l.meet(l.join(v[0], v[1]), arrow(v[0], v[1])); },
           [&](auto v) { return v[1]; })});
}

namespace detail {

inline BinaryOpTable d_arrow_unchecked(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return BinaryOpTable::tabulate(a.lattice_ptr(), OpRole::Implication,
                                 [&](Elem x, Elem y) { return l.join(a(l.join(x, y)), y); });
}

inline UnaryAlgebra complement_at_bottom(const BinaryOpTable& arrow) {
  const auto& l = arrow.lattice();
  std::vector<Elem> t;
  for (Elem x : l.elements()) t.push_back(arrow(x, l.bottom()));
  return UnaryAlgebra(arrow.lattice_ptr(), std::move(t));
}

}  // namespace detail

/// x -> y := (x \/ y)' \/ y on a dually weakly orthomodular algebra.
inline BinaryOpTable d_implication_from_complement(const UnaryAlgebra& a) {
  require(is_dually_weakly_orthomodular(a), "d_implication_from_complement");
  return detail::d_arrow_unchecked(a);
}

/// x' := x -> 0 for a D-implication.
inline UnaryAlgebra complement_from_d_implication(const BinaryOpTable& arrow) {
  require(is_d_implication(arrow), "complement_from_d_implication");
  return detail::complement_at_bottom(arrow);
}

namespace detail {

inline CheckReport enumeration_failure(std::string property, const UnaryAlgebra& a,
                                       std::string detail) {
  return CheckReport::fail(std::move(property), {{"table", table_string(a)}},
                           std::move(detail));
}

}  // namespace detail

/// Enumerates every unary table on `l`; every dWOM one must yield a
/// D-implication that maps back to it, and distinct tables must yield
/// distinct implications.
inline CheckReport verify_d_bijection(const LatticePtr& l) {
  const std::string name = "D-implication bijection";
  std::size_t visited = 0, dwom = 0;
  std::set<std::vector<Elem>> arrows;
  std::optional<CheckReport> failure;
  for_each_unary_table(l->size(), [&](std::span<const Elem> t) {
    ++visited;
    UnaryAlgebra a(l, {t.begin(), t.end()});
    if (!is_dually_weakly_orthomodular(a)) return true;
    ++dwom;
    auto arrow = detail::d_arrow_unchecked(a);
    if (auto r = is_d_implication(arrow); !r) {
      failure = detail::enumeration_failure(name, a, "derived table: " + r.detail);
      return false;
    }
    auto back = detail::complement_at_bottom(arrow);
    if (!(back == a)) {
      failure = detail::enumeration_failure(name, a, "x -> 0 does not recover the table");
      return false;
    }
    if (!(detail::d_arrow_unchecked(back) == arrow)) {
      failure = detail::enumeration_failure(name, a, "re-derived implication differs");
      return false;
    }
    arrows.insert({arrow.table().begin(), arrow.table().end()});
    return true;
  });
  CheckReport r = failure ? *failure : CheckReport::pass(name);
  if (!failure && arrows.size() != dwom) {
    r = CheckReport::fail(name, {{"lattice", std::to_string(l->size()) + " elements"}},
                          "distinct tables produced equal implications");
  }
  r.counts = {{"tables", visited}, {"dwom tables", dwom}, {"D-implications", arrows.size()}};
  return r;
}

// ---------------------------------------------------------------------------
// Compatible families of dually weakly orthomodular filters

/// For every x an operation z |-> z^x on the principal filter [x).
class CompatibleFamily {
 public:
  static constexpr Elem kNone = static_cast<Elem>(-1);

  /// `table[x*n+z]` is z^x for z >= x and kNone elsewhere.
  CompatibleFamily(LatticePtr lattice, std::vector<Elem> table)
      : lattice_(std::move(lattice)), table_(std::move(table)) {
    const auto& l = *lattice_;
    const auto n = l.size();
    if (table_.size() != n * n) throw Error(ErrorKind::InvalidTable, "family table size");
    for (Elem x = 0; x < n; ++x)
      for (Elem z = 0; z < n; ++z) {
        Elem v = table_[x * n + z];
        if (l.leq(x, z) ? (v >= n || !l.leq(x, v)) : v != kNone)
          throw Error(ErrorKind::InvalidTable,
                      "operation on [" + l.name(x) + ") leaves the filter",
                      {l.name(x), l.name(z)});
      }
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  /// z^x, defined for x <= z.
  Elem apply(Elem x, Elem z) const { return table_[x * lattice_->size() + z]; }

  /// ([x), ^x) as a standalone algebra on the interval sublattice.
  std::pair<Sublattice, UnaryAlgebra> on_filter(Elem x) const {
    Sublattice sub = interval_sublattice(*lattice_, x);
    auto local = share(sub.lattice);
    std::vector<Elem> t;
    for (Elem z : sub.to_parent) t.push_back(*sub.from_parent(apply(x, z)));
    UnaryAlgebra a(local, std::move(t));
    return {std::move(sub), std::move(a)};
  }

  friend bool operator==(const CompatibleFamily& a, const CompatibleFamily& b) {
    return a.table_ == b.table_;
  }

 private:
  LatticePtr lattice_;
  std::vector<Elem> table_;
};

namespace detail {

inline CheckReport family_compatibility(const CompatibleFamily& fam) {
  const auto& l = fam.lattice();
  return scan("z^x \\/ y = z^y", l, {"x", "y", "z"},
              [&](auto v) -> std::optional<std::string> {
                Elem x = v[0], y = v[1], z = v[2];
                if (!l.leq(x, y) || !l.leq(y, z)) return std::nullopt;
                Elem lhs = l.join(fam.apply(x, z), y);
                Elem rhs = fam.apply(y, z);
                if (lhs == rhs) return std::nullopt;
                return "z^x \\/ y = " + l.name(lhs) + " but z^y = " + l.name(rhs);
              });
}

inline CompatibleFamily family_unchecked(const BinaryOpTable& arrow) {
  const auto& l = arrow.lattice();
  const auto n = l.size();
  std::vector<Elem> t(n * n, CompatibleFamily::kNone);
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z)
      if (l.leq(x, z)) t[x * n + z] = arrow(z, x);
  return CompatibleFamily(arrow.lattice_ptr(), std::move(t));
}

inline BinaryOpTable arrow_from_family_unchecked(const CompatibleFamily& fam) {
  const auto& l = fam.lattice();
  return BinaryOpTable::tabulate(fam.lattice_ptr(), OpRole::Implication,
                                 [&](Elem x, Elem y) { return fam.apply(y, l.join(x, y)); });
}

}  // namespace detail

/// Each ([x), ^x) is dually weakly orthomodular and z^x \/ y = z^y for
/// x <= y <= z.
inline CheckReport is_compatible_family(const CompatibleFamily& fam) {
  const auto& l = fam.lattice();
  std::vector<CheckReport> parts;
  for (Elem x : l.elements()) {
    auto [sub, alg] = fam.on_filter(x);
    auto r = is_dually_weakly_orthomodular(alg);
    r.property = "dwom on [" + l.name(x) + ")";
    parts.push_back(std::move(r));
  }
  parts.push_back(detail::family_compatibility(fam));
  return all_of("compatible family", std::move(parts));
}

/// z^x := z -> x.
inline CompatibleFamily family_from_d_implication(const BinaryOpTable& arrow) {
  require(is_d_implication(arrow), "family_from_d_implication");
  return detail::family_unchecked(arrow);
}

/// x -> y := (x \/ y)^y.
inline BinaryOpTable d_implication_from_family(const CompatibleFamily& fam) {
  require(is_compatible_family(fam), "d_implication_from_family");
  return detail::arrow_from_family_unchecked(fam);
}

/// Enumerates compatible families directly (as products of per-filter dWOM
/// operations) and D-implications via dWOM tables, and checks that the two
/// maps between them are mutually inverse bijections.
inline CheckReport verify_family_bijection(const LatticePtr& lp) {
  const std::string name = "family bijection";
  const auto& l = *lp;
  const auto n = l.size();

  // Per-filter dWOM operations, stored as parent ids.
  std::vector<std::vector<std::vector<Elem>>> choices(n);
  std::size_t product = 1;
  for (Elem x : l.elements()) {
    Sublattice sub = interval_sublattice(l, x);
    auto local = share(sub.lattice);
    for_each_unary_table(local->size(), [&](std::span<const Elem> t) {
      UnaryAlgebra a(local, {t.begin(), t.end()});
      if (is_dually_weakly_orthomodular(a)) {
        std::vector<Elem> parent;
        for (Elem v : t) parent.push_back(sub.to_parent[v]);
        choices[x].push_back(std::move(parent));
      }
      return true;
    });
    if (choices[x].empty()) product = 0;
    else if (product > kWorkCap / choices[x].size())
      throw Error(ErrorKind::CapExceeded, "family space exceeds the work cap");
    else product *= choices[x].size();
  }

  std::size_t families = 0;
  std::set<std::vector<Elem>> family_arrows;
  std::vector<std::size_t> pick(n, 0);
  auto fail = [&](std::string detail) {
    CheckReport r = CheckReport::fail(name, {{"lattice", std::to_string(n) + " elements"}},
                                      std::move(detail));
    return r;
  };
  for (std::size_t step = 0; step < product; ++step) {
    std::vector<Elem> t(n * n, CompatibleFamily::kNone);
    for (Elem x = 0; x < n; ++x) {
      const auto filter = l.principal_filter(x);
      for (std::size_t i = 0; i < filter.size(); ++i) t[x * n + filter[i]] = choices[x][pick[x]][i];
    }
    CompatibleFamily fam(lp, std::move(t));
    if (detail::family_compatibility(fam)) {
      ++families;
      auto arrow = detail::arrow_from_family_unchecked(fam);
      if (auto r = is_d_implication(arrow); !r)
        return fail("family yields a non-D-implication: " + r.detail);
      if (!(detail::family_unchecked(arrow) == fam))
        return fail("family -> implication -> family is not the identity");
      family_arrows.insert({arrow.table().begin(), arrow.table().end()});
    }
    for (std::size_t x = n; x-- > 0;) {
      if (++pick[x] < choices[x].size()) break;
      pick[x] = 0;
    }
  }
  if (family_arrows.size() != families)
    return fail("distinct families produced equal implications");

  std::size_t dwom = 0;
  std::set<std::vector<Elem>> comp_arrows;
  std::optional<CheckReport> failure;
  for_each_unary_table(n, [&](std::span<const Elem> t) {
    UnaryAlgebra a(lp, {t.begin(), t.end()});
    if (!is_dually_weakly_orthomodular(a)) return true;
    ++dwom;
    auto arrow = detail::d_arrow_unchecked(a);
    auto fam = detail::family_unchecked(arrow);
    if (auto r = is_compatible_family(fam); !r) {
      failure = detail::enumeration_failure(name, a, "derived family: " + r.detail);
      return false;
    }
    if (!(detail::arrow_from_family_unchecked(fam) == arrow)) {
      failure = detail::enumeration_failure(name, a, "implication -> family -> implication differs");
      return false;
    }
    std::vector<Elem> key(arrow.table().begin(), arrow.table().end());
    if (!family_arrows.contains(key)) {
      failure = detail::enumeration_failure(name, a, "implication missing from family enumeration");
      return false;
    }
    comp_arrows.insert(std::move(key));
    return true;
  });
  CheckReport r = failure ? *failure : CheckReport::pass(name);
  if (!failure && comp_arrows.size() != families)
    r = fail("family count " + std::to_string(families) + " differs from D-implication count " +
             std::to_string(comp_arrows.size()));
  r.counts = {{"compatible families", families},
              {"dwom tables", dwom},
              {"D-implications", comp_arrows.size()}};
  return r;
}

// ---------------------------------------------------------------------------
// Sasaki implication

/// x -> y := (x' /\ y') \/ y.
inline BinaryOpTable sasaki_implication(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return BinaryOpTable::tabulate(a.lattice_ptr(), OpRole::Implication, [&](Elem x, Elem y) {
    return l.join(l.meet(a(x), a(y)), y);
  });
}

/// On an involutive algebra: weakly orthomodular iff 0' = 1 and
/// (x -> 0) -> (x /\ y) = x for the Sasaki arrow. Both sides are decided and
/// the report holds when they agree.
inline CheckReport verify_sasaki_theorem(const UnaryAlgebra& a) {
  require(satisfies_double_negation(a), "verify_sasaki_theorem");
  const auto& l = a.lattice();
  auto arrow = sasaki_implication(a);
  auto wom = is_weakly_orthomodular(a);
  auto identities = all_of(
      "sasaki identities",
      {detail::identity("0' = 1", l, {}, "0' = 1", [&](auto) { return a(l.bottom()); },
                        [&](auto) { return l.top(); }),
       detail::identity(
           "(x -> 0) -> (x /\\ y) = x", l, {"x", "y"}, "(x -> 0) -> (x /\\ y) = x",
           [&](auto v) { return arrow(arrow(v[0], l.bottom()), l.meet(v[0], v[1])); },
           [&](auto v) { return v[0]; })});
  const bool agree = wom.holds == identities.holds;
  CheckReport r = agree ? CheckReport::pass("sasaki characterization",
                                            wom.holds ? "both sides hold" : "both sides fail")
                        : detail::enumeration_failure(
                              "sasaki characterization", a,
                              std::string("weakly orthomodular is ") +
                                  (wom.holds ? "true" : "false") + " but identities " +
                                  (identities.holds ? "hold" : "fail"));
  r.parts = {std::move(wom), std::move(identities)};
  return r;
}

// ---------------------------------------------------------------------------
// W-implication

/// (x -> 0) -> 0 = x;  ((x /\ y) -> 0) -> x = x;  (x /\ y) \/ (x -> 0) = x -> y.
inline CheckReport is_w_implication(const BinaryOpTable& arrow) {
  const auto& l = arrow.lattice();
  const Elem zero = l.bottom();
  return all_of(
      "W-implication",
      {detail::identity(
           "(x -> 0) -> 0 = x", l, {"x"}, "(x -> 0) -> 0 = x",
           [&](auto v) { return arrow(arrow(v[0], zero), zero); },
           [&](auto v) { return v[0]; }),
       detail::identity(
           "((x /\\ y) -> 0) -> x = x", l, {"x", "y"}, "((x /\\ y) -> 0) -> x = x",
           [&](auto v) { return arrow(arrow(l.meet(v[0], v[1]), zero), v[0]); },
           [&](auto v) { return v[0]; }),
       detail::identity(
           "(x /\\ y) \\/ (x -> 0) = x -> y", l, {"x", "y"},
           "(x /\\ y) \\/ (x -> 0) = x -> y",
           [&](auto v) { return l.join(l.meet(v[0], v[1]), arrow(v[0], zero)); },
           [&](auto v) { return arrow(v[0], v[1]); })});
}

namespace detail {

inline BinaryOpTable w_arrow_unchecked(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return BinaryOpTable::tabulate(a.lattice_ptr(), OpRole::Implication,
                                 [&](Elem x, Elem y) { return l.join(a(x), l.meet(x, y)); });
}

}  // namespace detail

/// x -> y := x' \/ (x /\ y) on a weakly orthomodular involutive algebra.
inline BinaryOpTable w_implication_from_complement(const UnaryAlgebra& a) {
  require(is_weakly_orthomodular(a), "w_implication_from_complement");
  require(satisfies_double_negation(a), "w_implication_from_complement");
  return detail::w_arrow_unchecked(a);
}

/// x' := x -> 0 for a W-implication.
inline UnaryAlgebra complement_from_w_implication(const BinaryOpTable& arrow) {
  require(is_w_implication(arrow), "complement_from_w_implication");
  return detail::complement_at_bottom(arrow);
}

inline CheckReport verify_w_bijection(const LatticePtr& l) {
  const std::string name = "W-implication bijection";
  std::size_t visited = 0, selected = 0;
  std::set<std::vector<Elem>> arrows;
  std::optional<CheckReport> failure;
  for_each_unary_table(l->size(), [&](std::span<const Elem> t) {
    ++visited;
    UnaryAlgebra a(l, {t.begin(), t.end()});
    if (!satisfies_double_negation(a) || !is_weakly_orthomodular(a)) return true;
    ++selected;
    auto arrow = detail::w_arrow_unchecked(a);
    if (auto r = is_w_implication(arrow); !r) {
      failure = detail::enumeration_failure(name, a, "derived table: " + r.detail);
      return false;
    }
    auto back = detail::complement_at_bottom(arrow);
    if (!(back == a)) {
      failure = detail::enumeration_failure(name, a, "x -> 0 does not recover the table");
      return false;
    }
    if (!(detail::w_arrow_unchecked(back) == arrow)) {
      failure = detail::enumeration_failure(name, a, "re-derived implication differs");
      return false;
    }
    arrows.insert({arrow.table().begin(), arrow.table().end()});
    return true;
  });
  CheckReport r = failure ? *failure : CheckReport::pass(name);
  if (!failure && arrows.size() != selected)
    r = CheckReport::fail(name, {{"lattice", std::to_string(l->size()) + " elements"}},
                          "distinct tables produced equal implications");
  r.counts = {{"tables", visited}, {"wom+dnl tables", selected}, {"W-implications", arrows.size()}};
  return r;
}

// ---------------------------------------------------------------------------
// Elementary properties

/// For x -> y = (x \/ y)' \/ y on a dWOM algebra: x -> 0 = x', x -> 1 = 1,
/// 1 -> x = x, and x -> y = 1 only when x <= y.
inline CheckReport d_implication_properties(const UnaryAlgebra& a) {
  require(is_dually_weakly_orthomodular(a), "d_implication_properties");
  const auto& l = a.lattice();
  auto arrow = detail::d_arrow_unchecked(a);
  return all_of(
      "D-implication properties",
      {detail::identity("x -> 0 = x'", l, {"x"}, "x -> 0 = x'",
                        [&](auto v) { return arrow(v[0], l.bottom()); },
                        [&](auto v) { return a(v[0]); }),
       detail::identity("x -> 1 = 1", l, {"x"}, "x -> 1 = 1",
                        [&](auto v) { return arrow(v[0], l.top()); },
                        [&](auto) { return l.top(); }),
       detail::identity("1 -> x = x", l, {"x"}, "1 -> x = x",
                        [&](auto v) { return arrow(l.top(), v[0]); },
                        [&](auto v) { return v[0]; }),
       detail::scan("x -> y = 1 implies x <= y", l, {"x", "y"},
                    [&](auto v) -> std::optional<std::string> {
                      if (arrow(v[0], v[1]) != l.top() || l.leq(v[0], v[1]))
                        return std::nullopt;
                      return "x -> y = 1 but x not<= y";
                    })});
}

/// For x -> y = x' \/ (x /\ y) on a WOM algebra.
inline CheckReport w_implication_properties(const UnaryAlgebra& a) {
  require(is_weakly_orthomodular(a), "w_implication_properties");
  const auto& l = a.lattice();
  auto arrow = detail::w_arrow_unchecked(a);
  auto one = [&](auto) { return l.top(); };
  return all_of(
      "W-implication properties",
      {detail::identity("x -> x = 1", l, {"x"}, "x -> x = 1",
                        [&](auto v) { return arrow(v[0], v[0]); }, one),
       detail::identity("x -> 1 = 1", l, {"x"}, "x -> 1 = 1",
                        [&](auto v) { return arrow(v[0], l.top()); }, one),
       detail::identity("x \\/ (x -> y) = 1", l, {"x", "y"}, "x \\/ (x -> y) = 1",
                        [&](auto v) { return l.join(v[0], arrow(v[0], v[1])); }, one),
       detail::identity("x -> (x /\\ y) = x -> y", l, {"x", "y"}, "x -> (x /\\ y) = x -> y",
                        [&](auto v) { return arrow(v[0], l.meet(v[0], v[1])); },
                        [&](auto v) { return arrow(v[0], v[1]); }),
       detail::scan("x <= y implies x -> y = 1", l, {"x", "y"},
                    [&](auto v) -> std::optional<std::string> {
                      if (!l.leq(v[0], v[1]) || arrow(v[0], v[1]) == l.top())
                        return std::nullopt;
                      return "x <= y but x -> y = " + l.name(arrow(v[0], v[1]));
                    }),
       detail::identity("x -> 0 = x'", l, {"x"}, "x -> 0 = x'",
                        [&](auto v) { return arrow(v[0], l.bottom()); },
                        [&](auto v) { return a(v[0]); })});
}

}  // namespace womlat
