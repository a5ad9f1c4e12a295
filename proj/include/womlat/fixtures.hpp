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

#include <string>
#include <string_view>
#include <vector>

#include "womlat/algebra.hpp"

namespace womlat {

namespace detail {

inline LatticePtr m3_lattice() {
  return share(FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

inline LatticePtr fig2_lattice() {
  return share(FiniteLattice::from_covers(
      {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"},
       {"a", "e"}, {"a", "f"}, {"b", "e"}, {"b", "g"}, {"c", "e"}, {"c", "h"},
       {"d", "f"}, {"d", "g"}, {"d", "h"},
       {"e", "1"}, {"f", "1"}, {"g", "1"}, {"h", "1"}}));
}

inline LatticePtr chain_lattice(std::vector<std::string> names) {
  CoverList covers;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) covers.emplace_back(names[i], names[i + 1]);
  return share(FiniteLattice::from_covers(std::move(names), covers));
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  return {"M3A", "M3B", "FIG2", "C2", "C3", "C4", "B4", "B8"};
}

/// Named example algebras:
///   M3A   M3, 0:1 a:b b:c c:a 1:0
///   M3B   M3, 0:1 a:b b:c c:b 1:0
///   FIG2  ten-element lattice with 0:1 a:g b:h c:f d:e e:d f:c g:a h:b 1:0
///   C2, C3, C4   chains with the order-reversing involution
///   B4, B8       Boolean algebras with their complement
inline UnaryAlgebra fixture(std::string_view name) {
  if (name == "M3A")
    return UnaryAlgebra::from_labels(detail::m3_lattice(), {"1", "b", "c", "a", "0"});
  if (name == "M3B")
    return UnaryAlgebra::from_labels(detail::m3_lattice(), {"1", "b", "c", "b", "0"});
  if (name == "FIG2")
    return UnaryAlgebra::from_labels(detail::fig2_lattice(),
                                     {"1", "g", "h", "f", "e", "d", "c", "a", "b", "0"});
  if (name == "C2")
    return UnaryAlgebra::from_labels(detail::chain_lattice({"0", "1"}), {"1", "0"});
  if (name == "C3")
    return UnaryAlgebra::from_labels(detail::chain_lattice({"0", "m", "1"}), {"1", "m", "0"});
  if (name == "C4")
    return UnaryAlgebra::from_labels(detail::chain_lattice({"0", "p", "q", "1"}),
                                     {"1", "q", "p", "0"});
  if (name == "B4") {
    auto l = share(FiniteLattice::from_covers(
        {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
    return UnaryAlgebra::from_labels(l, {"1", "b", "a", "0"});
  }
  if (name == "B8") {
    auto l = share(FiniteLattice::from_covers(
        {"0", "a", "b", "c", "ab", "ac", "bc", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"},
         {"a", "ab"}, {"a", "ac"}, {"b", "ab"}, {"b", "bc"}, {"c", "ac"}, {"c", "bc"},
         {"ab", "1"}, {"ac", "1"}, {"bc", "1"}}));
    return UnaryAlgebra::from_labels(l, {"1", "bc", "ac", "ab", "c", "b", "a", "0"});
  }
  throw Error(ErrorKind::UnknownFixture, "no fixture named '" + std::string(name) + "'",
              {std::string(name)});
}

/// Bare lattices by name: "M3", "FIG2L", or the carrier of any fixture.
inline LatticePtr fixture_lattice(std::string_view name) {
  if (name == "M3") return detail::m3_lattice();
  if (name == "FIG2L") return detail::fig2_lattice();
  return fixture(name).lattice_ptr();
}

}  // namespace womlat
