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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "womlat/error.hpp"

namespace womlat {

/// Dense element id; index into FiniteLattice::names().
using Elem = std::size_t;

/// Largest carrier accepted by canonical_form and lattice enumeration.
inline constexpr std::size_t kEnumerationCap = 7;

using CoverList = std::vector<std::pair<std::string, std::string>>;

/// An immutable finite lattice given by its order relation, with join and
/// meet tables precomputed at construction. Construction fails unless the
/// relation is a partial order in which every pair has a least upper bound
/// and a greatest lower bound, so all consumers may rely on the lattice laws.
///
/// A finite non-empty lattice is always bounded; bottom() and top() are
/// therefore total.
class FiniteLattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `covers` (pairs `lower, upper`).
  static FiniteLattice from_covers(std::vector<std::string> names,
                                   const CoverList& covers) {
    const std::size_t n = names.size();
    auto index = index_names(names);
    std::vector<char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [lo, hi] : covers) {
      auto a = lookup(index, lo);
      auto b = lookup(index, hi);
      leq[a * n + b] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;
    return FiniteLattice(std::move(names), std::move(leq));
  }

  /// Builds the lattice from a full order relation, row-major `leq[a*n+b]`.
  /// The relation must already be reflexive and transitive.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  std::vector<char> leq) {
    const std::size_t n = names.size();
    index_names(names);
    if (leq.size() != n * n)
      throw Error(ErrorKind::InvalidTable, "order relation has wrong size");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq[i * n + i])
        throw Error(ErrorKind::InvalidTable, "order relation is not reflexive");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (leq[i * n + j] && leq[j * n + k] && !leq[i * n + k])
            throw Error(ErrorKind::InvalidTable, "order relation is not transitive",
                        {names[i], names[j], names[k]});
    return FiniteLattice(std::move(names), std::move(leq));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }

  std::optional<Elem> find(std::string_view label) const {
    for (Elem e = 0; e < size(); ++e)
      if (names_[e] == label) return e;
    return std::nullopt;
  }

  Elem index_of(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(ErrorKind::UnknownLabel, "no element '" + std::string(label) + "'",
                {std::string(label)});
  }

  auto elements() const { return std::views::iota(Elem{0}, size()); }

  bool leq(Elem a, Elem b) const { return leq_[a * size() + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// [x) = { y : x <= y }, ascending ids.
  std::vector<Elem> principal_filter(Elem x) const {
    std::vector<Elem> out;
    for (Elem y : elements())
      if (leq(x, y)) out.push_back(y);
    return out;
  }

  /// (x] = { y : y <= x }, ascending ids.
  std::vector<Elem> principal_ideal(Elem x) const {
    std::vector<Elem> out;
    for (Elem y : elements())
      if (leq(y, x)) out.push_back(y);
    return out;
  }

  /// Cover pairs (lower, upper), lexicographic in ids.
  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a : elements())
      for (Elem b : elements()) {
        if (!lt(a, b)) continue;
        bool direct = true;
        for (Elem c : elements())
          if (lt(a, c) && lt(c, b)) {
            direct = false;
            break;
          }
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  const std::vector<char>& order_relation() const noexcept { return leq_; }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  FiniteLattice(std::vector<std::string> names, std::vector<char> relation)
      : names_(std::move(names)), leq_(std::move(relation)) {
    const std::size_t n = size();
    if (n == 0) throw Error(ErrorKind::EmptyCarrier, "lattice has no elements");
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (leq(a, b) && leq(b, a))
          throw Error(ErrorKind::NotAntisymmetric,
                      "cycle through " + names_[a] + " and " + names_[b],
                      {names_[a], names_[b]});
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        auto lub = extremal_bound(a, b, /*upper=*/true);
        auto glb = extremal_bound(a, b, /*upper=*/false);
        if (!lub || !glb)
          throw Error(ErrorKind::NotALattice,
                      "pair (" + names_[a] + ", " + names_[b] + ") has no " +
                          (!lub ? "least upper bound" : "greatest lower bound"),
                      {names_[a], names_[b]});
        join_[a * n + b] = join_[b * n + a] = *lub;
        meet_[a * n + b] = meet_[b * n + a] = *glb;
      }
    bottom_ = meet_[0];
    top_ = join_[0];
    for (Elem a = 1; a < n; ++a) {
      bottom_ = meet(bottom_, a);
      top_ = join(top_, a);
    }
  }

  std::optional<Elem> extremal_bound(Elem a, Elem b, bool upper) const {
    auto bounds = [&](Elem c) {
      return upper ? leq(a, c) && leq(b, c) : leq(c, a) && leq(c, b);
    };
    for (Elem c : elements()) {
      if (!bounds(c)) continue;
      bool extremal = true;
      for (Elem d : elements())
        if (bounds(d) && !(upper ? leq(c, d) : leq(d, c))) {
          extremal = false;
          break;
        }
      if (extremal) return c;
    }
    return std::nullopt;
  }

  static std::map<std::string, Elem, std::less<>> index_names(
      const std::vector<std::string>& names) {
    std::map<std::string, Elem, std::less<>> index;
    for (Elem i = 0; i < names.size(); ++i) {
      if (names[i].empty())
        throw Error(ErrorKind::FormatError, "empty element label");
      if (!index.emplace(names[i], i).second)
        throw Error(ErrorKind::DuplicateLabel, "label '" + names[i] + "' repeated",
                    {names[i]});
    }
    return index;
  }

  static Elem lookup(const std::map<std::string, Elem, std::less<>>& index,
                     std::string_view label) {
    auto it = index.find(label);
    if (it == index.end())
      throw Error(ErrorKind::UnknownLabel, "cover mentions '" + std::string(label) + "'",
                  {std::string(label)});
    return it->second;
  }

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// A sublattice together with the ids its elements carry in the parent.
struct Sublattice {
  FiniteLattice lattice;
  std::vector<Elem> to_parent;

  std::optional<Elem> from_parent(Elem parent_id) const {
    auto it = std::find(to_parent.begin(), to_parent.end(), parent_id);
    if (it == to_parent.end()) return std::nullopt;
    return static_cast<Elem>(it - to_parent.begin());
  }
};

/// The principal filter [x) with the inherited order.
inline Sublattice interval_sublattice(const FiniteLattice& l, Elem x) {
  auto ids = l.principal_filter(x);
  std::vector<std::string> names;
  std::vector<char> leq(ids.size() * ids.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    names.push_back(l.name(ids[i]));
    for (std::size_t j = 0; j < ids.size(); ++j)
      leq[i * ids.size() + j] = l.leq(ids[i], ids[j]) ? 1 : 0;
  }
  return {FiniteLattice::from_order(std::move(names), std::move(leq)), std::move(ids)};
}

/// Isomorphism-invariant code of a lattice: equal for two lattices iff they
/// are order-isomorphic.
struct CanonicalKey {
  std::string code;
  auto operator<=>(const CanonicalKey&) const = default;
};

namespace detail {

struct CanonicalLabelling {
  CanonicalKey key;
  std::vector<Elem> order;  // order[pos] = element placed at canonical position
};

// Elements are first sorted by (|down-set|, |up-set|); only permutations
// that respect this partition are searched. The code lists, position by
// position, the relation bits against all earlier positions, so every
// partial labelling yields a prefix and dominated branches are cut.
inline CanonicalLabelling canonical_labelling(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n > kEnumerationCap)
    throw Error(ErrorKind::CapExceeded,
                "canonical form limited to " + std::to_string(kEnumerationCap) +
                    " elements");
  std::vector<std::pair<std::size_t, std::size_t>> inv(n);
  for (Elem e : l.elements())
    inv[e] = {l.principal_ideal(e).size(), l.principal_filter(e).size()};
  std::vector<Elem> sorted(n);
  for (Elem e = 0; e < n; ++e) sorted[e] = e;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](Elem a, Elem b) { return inv[a] < inv[b]; });

  std::string best;
  std::vector<Elem> best_order;
  std::string cur;
  std::vector<Elem> order;
  std::vector<char> used(n, 0);

  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (best_order.empty() || cur < best) {
        best = cur;
        best_order = order;
      }
      return;
    }
    for (Elem e : l.elements()) {
      if (used[e] || inv[e] != inv[sorted[pos]]) continue;
      const std::size_t mark = cur.size();
      for (std::size_t i = 0; i < pos; ++i) {
        cur.push_back(l.leq(order[i], e) ? '1' : '0');
        cur.push_back(l.leq(e, order[i]) ? '1' : '0');
      }
      if (best_order.empty() || cur.compare(0, cur.size(), best, 0, cur.size()) <= 0) {
        used[e] = 1;
        order.push_back(e);
        self(self, pos + 1);
        order.pop_back();
        used[e] = 0;
      }
      cur.resize(mark);
    }
  };
  recurse(recurse, 0);
  return {CanonicalKey{std::to_string(n) + ":" + best}, best_order};
}

}  // namespace detail

inline CanonicalKey canonical_form(const FiniteLattice& l) {
  return detail::canonical_labelling(l).key;
}

}  // namespace womlat
