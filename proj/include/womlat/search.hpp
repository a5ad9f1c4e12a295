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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "womlat/algebra.hpp"

namespace womlat {

enum class Property {
  Complementation,
  Involution,
  DoubleNegation,
  WeakDoubleNegation,
  Antitone,
  DeMorgan,
  Orthocomplementation,
  WeaklyOrthomodular,
  DuallyWeaklyOrthomodular,
  Orthomodular,
};

struct PropertyName {
  std::string_view name;
  Property prop;
};

/// Accepted spellings; the first spelling of each property is canonical.
inline constexpr PropertyName kPropertyNames[] = {
    {"wom", Property::WeaklyOrthomodular},
    {"dwom", Property::DuallyWeaklyOrthomodular},
    {"dnl", Property::DoubleNegation},
    {"wdnl", Property::WeakDoubleNegation},
    {"complementation", Property::Complementation},
    {"comp", Property::Complementation},
    {"orthocomplementation", Property::Orthocomplementation},
    {"ortho", Property::Orthocomplementation},
    {"orthomodular", Property::Orthomodular},
    {"om", Property::Orthomodular},
    {"demorgan", Property::DeMorgan},
    {"antitone", Property::Antitone},
    {"involution", Property::Involution},
};

inline std::optional<Property> property_from_name(std::string_view s) {
  for (const auto& p : kPropertyNames)
    if (p.name == s) return p.prop;
  return std::nullopt;
}

inline std::string_view property_name(Property p) {
  for (const auto& e : kPropertyNames)
    if (e.prop == p) return e.name;
  return "?";
}

inline CheckReport check_property(const UnaryAlgebra& a, Property p) {
  switch (p) {
    case Property::Complementation: return is_complementation(a);
    case Property::Involution: return is_involution(a);
    case Property::DoubleNegation: return satisfies_double_negation(a);
    case Property::WeakDoubleNegation: return satisfies_weak_double_negation(a);
    case Property::Antitone: return is_antitone(a);
    case Property::DeMorgan: return satisfies_de_morgan(a);
    case Property::Orthocomplementation: return is_orthocomplementation(a);
    case Property::WeaklyOrthomodular: return is_weakly_orthomodular(a);
    case Property::DuallyWeaklyOrthomodular: return is_dually_weakly_orthomodular(a);
    case Property::Orthomodular: return is_orthomodular(a);
  }
  return is_orthomodular(a);
}

/// Each property required to hold (true) or to fail (false).
class Constraints {
 public:
  Constraints() = default;
  Constraints(std::initializer_list<std::pair<Property, bool>> items) {
    for (auto [p, v] : items) set(p, v);
  }

  /// "wom,+dwom,-dnl": bare or '+' means required, '-' means excluded.
  static Constraints parse(std::string_view spec) {
    Constraints c;
    std::size_t i = 0;
    while (i <= spec.size()) {
      std::size_t j = spec.find(',', i);
      if (j == std::string_view::npos) j = spec.size();
      std::string_view item = spec.substr(i, j - i);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!item.empty()) {
        bool want = true;
        if (item.front() == '+' || item.front() == '-') {
          want = item.front() == '+';
          item.remove_prefix(1);
        }
        auto p = property_from_name(item);
        if (!p)
          throw Error(ErrorKind::UnknownSymbol, "unknown property '" + std::string(item) + "'",
                      {std::string(item)});
        c.set(*p, want);
      }
      i = j + 1;
    }
    return c;
  }

  void set(Property p, bool want) { items_[p] = want; }
  bool empty() const noexcept { return items_.empty(); }
  const std::map<Property, bool>& items() const noexcept { return items_; }

  /// Properties are visited in enum order, cheapest first.
  bool accepts(const UnaryAlgebra& a) const {
    for (auto [p, want] : items_)
      if (check_property(a, p).holds != want) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (auto [p, want] : items_) {
      if (!out.empty()) out += ',';
      out += want ? '+' : '-';
      out += property_name(p);
    }
    return out;
  }

 private:
  std::map<Property, bool> items_;
};

/// All unary tables on `l` meeting `want`, in lexicographic table order.
inline std::vector<UnaryAlgebra> enumerate_unary(const LatticePtr& l, const Constraints& want) {
  std::vector<UnaryAlgebra> out;
  for_each_unary_table(l->size(), [&](std::span<const Elem> t) {
    UnaryAlgebra a(l, {t.begin(), t.end()});
    if (want.accepts(a)) out.push_back(std::move(a));
    return true;
  });
  return out;
}

/// All lattices with `n` elements up to isomorphism, sorted by canonical key.
/// Elements are relabelled in canonical order: "0" bottom, "1" top, and
/// "a", "b", ... in between (a single element is labelled "0").
inline std::vector<LatticePtr> enumerate_lattices(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyCarrier, "lattices need at least one element");
  if (n > kEnumerationCap)
    throw Error(ErrorKind::CapExceeded,
                "lattice enumeration limited to " + std::to_string(kEnumerationCap) + " elements");
  auto labels = [&] {
    std::vector<std::string> names;
    if (n == 1) return std::vector<std::string>{"0"};
    names.push_back("0");
    for (std::size_t i = 0; i + 2 < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    names.push_back("1");
    return names;
  };
  if (n <= 2) {
    auto names = labels();
    CoverList covers;
    if (n == 2) covers.emplace_back("0", "1");
    return {share(FiniteLattice::from_covers(names, covers))};
  }
  // Any finite lattice is a bounded poset: bottom, top and a poset on the
  // k = n-2 inner points. Inner posets are generated with a natural labelling
  // (i < j whenever i is below j), which covers every isomorphism class.
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::map<CanonicalKey, LatticePtr> found;
  std::vector<std::string> scratch(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = std::to_string(i);
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      leq[0 * n + i] = 1;
      leq[i * n + (n - 1)] = 1;
      leq[i * n + i] = 1;
    }
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) leq[(pairs[b].first + 1) * n + pairs[b].second + 1] = 1;
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x)
      for (std::size_t y = 0; y < n && transitive; ++y)
        if (leq[x * n + y])
          for (std::size_t z = 0; z < n; ++z)
            if (leq[y * n + z] && !leq[x * n + z]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;
    std::optional<FiniteLattice> l;
    try {
      l = FiniteLattice::from_order(scratch, leq);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
      continue;
    }
    auto canon = detail::canonical_labelling(*l);
    if (found.contains(canon.key)) continue;
    std::vector<char> relabelled(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        relabelled[i * n + j] = l->leq(canon.order[i], canon.order[j]) ? 1 : 0;
    found.emplace(canon.key, share(FiniteLattice::from_order(labels(), std::move(relabelled))));
  }
  std::vector<LatticePtr> out;
  for (auto& [key, l] : found) out.push_back(std::move(l));
  return out;
}

/// First algebra over the given lattices (in order, then by table) meeting
/// `want`.
inline std::optional<UnaryAlgebra> find_example(const Constraints& want,
                                                std::span<const LatticePtr> lattices) {
  for (const auto& l : lattices) {
    std::optional<UnaryAlgebra> hit;
    for_each_unary_table(l->size(), [&](std::span<const Elem> t) {
      UnaryAlgebra a(l, {t.begin(), t.end()});
      if (!want.accepts(a)) return true;
      hit = std::move(a);
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

/// First of the given algebras meeting `want`; for fixed catalogs whose
/// carriers are too large to enumerate.
inline std::optional<UnaryAlgebra> find_example(const Constraints& want,
                                                std::span<const UnaryAlgebra> candidates) {
  for (const auto& a : candidates)
    if (want.accepts(a)) return a;
  return std::nullopt;
}

/// Scans all lattices with 1..max_n elements, by size then canonical key.
inline std::optional<UnaryAlgebra> find_example(const Constraints& want, std::size_t max_n) {
  if (max_n > kEnumerationCap)
    throw Error(ErrorKind::CapExceeded,
                "search limited to " + std::to_string(kEnumerationCap) + " elements");
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto ls = enumerate_lattices(n);
    if (auto hit = find_example(want, ls)) return hit;
  }
  return std::nullopt;
}

}  // namespace womlat
