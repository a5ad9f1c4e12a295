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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "womlat/error.hpp"
#include "womlat/lattice.hpp"
#include "womlat/report.hpp"

namespace womlat {

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr share(FiniteLattice l) {
  return std::make_shared<const FiniteLattice>(std::move(l));
}

/// A lattice with a unary operation table. No law is assumed; laws are
/// checked by the predicates below.
class UnaryAlgebra {
 public:
  UnaryAlgebra(LatticePtr lattice, std::vector<Elem> table)
      : lattice_(std::move(lattice)), table_(std::move(table)) {
    if (table_.size() != lattice_->size())
      throw Error(ErrorKind::InvalidTable, "unary table is not total");
    for (Elem v : table_)
      if (v >= lattice_->size())
        throw Error(ErrorKind::InvalidTable, "unary table value out of range");
  }

  /// Table given as labels in element order.
  static UnaryAlgebra from_labels(LatticePtr lattice,
                                  const std::vector<std::string>& images) {
    std::vector<Elem> t;
    for (const auto& s : images) t.push_back(lattice->index_of(s));
    return UnaryAlgebra(std::move(lattice), std::move(t));
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  Elem comp(Elem x) const { return table_[x]; }
  Elem operator()(Elem x) const { return table_[x]; }
  std::span<const Elem> table() const noexcept { return table_; }

  friend bool operator==(const UnaryAlgebra& a, const UnaryAlgebra& b) {
    return a.table_ == b.table_ &&
           (a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_);
  }

 private:
  LatticePtr lattice_;
  std::vector<Elem> table_;
};

enum class OpRole { Implication, Product, Other };

/// A total binary operation on a lattice, row-major `op(x, y) = table[x*n+y]`.
class BinaryOpTable {
 public:
  BinaryOpTable(LatticePtr lattice, std::vector<Elem> table, OpRole role)
      : lattice_(std::move(lattice)), table_(std::move(table)), role_(role) {
    const auto n = lattice_->size();
    if (table_.size() != n * n)
      throw Error(ErrorKind::InvalidTable, "binary table is not total");
    for (Elem v : table_)
      if (v >= n) throw Error(ErrorKind::InvalidTable, "binary table value out of range");
  }

  template <class Fn>
  static BinaryOpTable tabulate(LatticePtr lattice, OpRole role, Fn&& fn) {
    const auto n = lattice->size();
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) t[x * n + y] = fn(x, y);
    return BinaryOpTable(std::move(lattice), std::move(t), role);
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  OpRole role() const noexcept { return role_; }
  Elem operator()(Elem x, Elem y) const { return table_[x * lattice_->size() + y]; }
  std::span<const Elem> table() const noexcept { return table_; }

  /// Tables compare equal regardless of the role marker.
  friend bool operator==(const BinaryOpTable& a, const BinaryOpTable& b) {
    return a.table_ == b.table_ &&
           (a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_);
  }

 private:
  LatticePtr lattice_;
  std::vector<Elem> table_;
  OpRole role_;
};

namespace detail {

/// Scans every assignment of `vars` over the carrier in lexicographic id
/// order (first variable most significant). `violation` returns a message
/// for a failing instance; the first one becomes the report's witness.
template <class Fn>
CheckReport scan(std::string property, const FiniteLattice& l,
                 std::vector<std::string> vars, Fn&& violation) {
  const std::size_t n = l.size();
  const std::size_t k = vars.size();
  std::vector<Elem> v(k, 0);
  while (true) {
    if (std::optional<std::string> msg = violation(std::span<const Elem>(v))) {
      Assignment w;
      for (std::size_t i = 0; i < k; ++i) w.emplace_back(vars[i], l.name(v[i]));
      return CheckReport::fail(std::move(property), std::move(w), std::move(*msg));
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++v[i] < n) break;
      v[i] = 0;
      if (i == 0) return CheckReport::pass(std::move(property));
    }
    if (k == 0) return CheckReport::pass(std::move(property));
  }
}

/// Checks `lhs == rhs` at every assignment.
template <class Lhs, class Rhs>
CheckReport identity(std::string property, const FiniteLattice& l,
                     std::vector<std::string> vars, std::string_view text,
                     Lhs&& lhs, Rhs&& rhs) {
  return scan(std::move(property), l, std::move(vars),
              [&](std::span<const Elem> v) -> std::optional<std::string> {
                Elem a = lhs(v);
                Elem b = rhs(v);
                if (a == b) return std::nullopt;
                return std::string(text) + " fails: left side " + l.name(a) +
                       ", right side " + l.name(b);
              });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Structural predicates.

/// (x /\ y) \/ (x /\ (x /\ y)') = x
inline CheckReport is_weakly_orthomodular(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return detail::identity(
      "weakly orthomodular", l, {"x", "y"}, "(x /\\ y) \\/ (x /\\ (x /\\ y)') = x",
      [&](auto v) {
        Elem m = l.meet(v[0], v[1]);
        return l.join(m, l.meet(v[0], a(m)));
      },
      [&](auto v) { return v[0]; });
}

/// (x \/ y) /\ (x \/ (x \/ y)') = x
inline CheckReport is_dually_weakly_orthomodular(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return detail::identity(
      "dually weakly orthomodular", l, {"x", "y"},
      "(x \\/ y) /\\ (x \\/ (x \\/ y)') = x",
      [&](auto v) {
        Elem j = l.join(v[0], v[1]);
        return l.meet(j, l.join(v[0], a(j)));
      },
      [&](auto v) { return v[0]; });
}

inline CheckReport satisfies_double_negation(const UnaryAlgebra& a) {
  return detail::identity(
      "double negation", a.lattice(), {"x"}, "x'' = x",
      [&](auto v) { return a(a(v[0])); }, [&](auto v) { return v[0]; });
}

inline CheckReport satisfies_weak_double_negation(const UnaryAlgebra& a) {
  return detail::identity(
      "weak double negation", a.lattice(), {"x"}, "x''' = x'",
      [&](auto v) { return a(a(a(v[0]))); }, [&](auto v) { return a(v[0]); });
}

/// Same identity as double negation, reported under its own name.
inline CheckReport is_involution(const UnaryAlgebra& a) {
  auto r = satisfies_double_negation(a);
  r.property = "involution";
  return r;
}

inline CheckReport is_complementation(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return all_of(
      "complementation",
      {detail::identity(
           "x \\/ x' = 1", l, {"x"}, "x \\/ x' = 1",
           [&](auto v) { return l.join(v[0], a(v[0])); }, [&](auto) { return l.top(); }),
       detail::identity(
           "x /\\ x' = 0", l, {"x"}, "x /\\ x' = 0",
           [&](auto v) { return l.meet(v[0], a(v[0])); },
           [&](auto) { return l.bottom(); })});
}

/// x <= y implies y' <= x'
inline CheckReport is_antitone(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return detail::scan("antitone", l, {"x", "y"},
                      [&](auto v) -> std::optional<std::string> {
                        Elem x = v[0], y = v[1];
                        if (!l.leq(x, y) || l.leq(a(y), a(x))) return std::nullopt;
                        return l.name(x) + "<=" + l.name(y) + " but " + l.name(y) +
                               "'=" + l.name(a(y)) + " not<= " + l.name(a(x)) + "=" +
                               l.name(x) + "'";
                      });
}

inline CheckReport satisfies_de_morgan(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  return all_of(
      "de Morgan",
      {detail::identity(
           "(x \\/ y)' = x' /\\ y'", l, {"x", "y"}, "(x \\/ y)' = x' /\\ y'",
           [&](auto v) { return a(l.join(v[0], v[1])); },
           [&](auto v) { return l.meet(a(v[0]), a(v[1])); }),
       detail::identity(
           "(x /\\ y)' = x' \\/ y'", l, {"x", "y"}, "(x /\\ y)' = x' \\/ y'",
           [&](auto v) { return a(l.meet(v[0], v[1])); },
           [&](auto v) { return l.join(a(v[0]), a(v[1])); })});
}

namespace detail {

// Antitonicity follows from complementation, involution and de Morgan; it is
// checked ahead of de Morgan so that the reported witness is an order pair.
inline std::vector<CheckReport> orthocomplement_parts(const UnaryAlgebra& a) {
  return {is_complementation(a), satisfies_double_negation(a), is_antitone(a),
          satisfies_de_morgan(a)};
}

}  // namespace detail

inline CheckReport is_orthocomplementation(const UnaryAlgebra& a) {
  return all_of("orthocomplementation", detail::orthocomplement_parts(a));
}

inline CheckReport is_orthomodular(const UnaryAlgebra& a) {
  auto parts = detail::orthocomplement_parts(a);
  parts.push_back(is_weakly_orthomodular(a));
  return all_of("orthomodular", std::move(parts));
}

/// Executable form of the bounds lemma: WOM forces x \/ x' = 1 and 0' = 1,
/// dWOM forces x /\ x' = 0 and 1' = 0. Vacuous when neither property holds.
inline CheckReport check_lemma_bounds(const UnaryAlgebra& a) {
  const auto& l = a.lattice();
  std::vector<CheckReport> parts;
  const bool wom = is_weakly_orthomodular(a).holds;
  const bool dwom = is_dually_weakly_orthomodular(a).holds;
  if (wom) {
    parts.push_back(detail::identity(
        "wom: x \\/ x' = 1", l, {"x"}, "x \\/ x' = 1",
        [&](auto v) { return l.join(v[0], a(v[0])); }, [&](auto) { return l.top(); }));
    parts.push_back(detail::identity(
        "wom: 0' = 1", l, {}, "0' = 1", [&](auto) { return a(l.bottom()); },
        [&](auto) { return l.top(); }));
  }
  if (dwom) {
    parts.push_back(detail::identity(
        "dwom: x /\\ x' = 0", l, {"x"}, "x /\\ x' = 0",
        [&](auto v) { return l.meet(v[0], a(v[0])); },
        [&](auto) { return l.bottom(); }));
    parts.push_back(detail::identity(
        "dwom: 1' = 0", l, {}, "1' = 0", [&](auto) { return a(l.top()); },
        [&](auto) { return l.bottom(); }));
  }
  auto r = all_of("lemma bounds", std::move(parts));
  if (!wom && !dwom) r.detail = "vacuous: neither weakly nor dually weakly orthomodular";
  return r;
}

/// Upper bound on candidate tables visited by any exhaustive enumeration.
inline constexpr std::size_t kWorkCap = 10'000'000;

/// n^k, or nullopt when it exceeds `limit`.
inline std::optional<std::size_t> bounded_power(std::size_t n, std::size_t k,
                                                std::size_t limit = kWorkCap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && r > limit / n) return std::nullopt;
    r *= n;
  }
  return r <= limit ? std::optional(r) : std::nullopt;
}

/// Calls `fn(std::span<const Elem>)` on every unary table of an n-element
/// carrier in lexicographic order (value at element 0 most significant).
/// Stops early when `fn` returns false.
template <class Fn>
void for_each_unary_table(std::size_t n, Fn&& fn) {
  if (!bounded_power(n, n))
    throw Error(ErrorKind::CapExceeded,
                std::to_string(n) + "^" + std::to_string(n) + " tables exceed the work cap");
  std::vector<Elem> t(n, 0);
  while (true) {
    if (!fn(std::span<const Elem>(t))) return;
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
}

/// "0:1 a:b ..." in element order.
inline std::string table_string(const UnaryAlgebra& a) {
  std::string out;
  for (Elem x : a.lattice().elements()) {
    if (x) out += ' ';
    out += a.lattice().name(x) + ':' + a.lattice().name(a(x));
  }
  return out;
}

/// Throws PreconditionViolated carrying the failed report's witness.
inline void require(const CheckReport& r, std::string_view context) {
  if (r.holds) return;
  std::vector<std::string> w;
  if (r.witness)
    for (const auto& [var, label] : *r.witness) w.push_back(var + "=" + label);
  throw Error(ErrorKind::PreconditionViolated,
              std::string(context) + " requires " + r.property + " (" + r.detail + ")",
              std::move(w));
}

}  // namespace womlat
