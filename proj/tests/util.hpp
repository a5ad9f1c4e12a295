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
#include <vector>

#include "womlat/womlat.hpp"

namespace testutil {

inline womlat::LatticePtr c2() { return womlat::fixture("C2").lattice_ptr(); }

/// Unary algebra on the 2-chain {0,1}.
inline womlat::UnaryAlgebra c2_op(std::string at0, std::string at1) {
  return womlat::UnaryAlgebra::from_labels(c2(), {std::move(at0), std::move(at1)});
}

/// Binary table on the 2-chain from a function of element ids.
template <class F>
womlat::BinaryOpTable c2_arrow(F&& f) {
  return womlat::BinaryOpTable::tabulate(c2(), womlat::OpRole::Implication, f);
}

inline womlat::Elem id(const womlat::UnaryAlgebra& a, const std::string& label) {
  return a.lattice().index_of(label);
}

/// Every algebra on every lattice with 1..max_n elements.
template <class F>
void for_each_algebra(std::size_t max_n, F&& f) {
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto& l : womlat::enumerate_lattices(n))
      womlat::for_each_unary_table(l->size(), [&](std::span<const womlat::Elem> t) {
        f(womlat::UnaryAlgebra(l, {t.begin(), t.end()}));
        return true;
      });
}

}  // namespace testutil
