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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace womlat {

/// Variable name to element label, in quantifier order.
using Assignment = std::vector<std::pair<std::string, std::string>>;

inline std::string format_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [var, label] : a) {
    if (!out.empty()) out += ' ';
    out += var + '=' + label;
  }
  return out;
}

/// Outcome of a property check. `holds == false` exactly when `witness` is
/// set. Composite checks keep their constituents in `parts`; enumeration
/// checks record what they visited in `counts`.
struct CheckReport {
  std::string property;
  bool holds = true;
  std::optional<Assignment> witness;
  std::string detail;
  std::vector<CheckReport> parts;
  std::vector<std::pair<std::string, std::size_t>> counts;

  static CheckReport pass(std::string property, std::string detail = {}) {
    CheckReport r;
    r.property = std::move(property);
    r.detail = std::move(detail);
    return r;
  }

  static CheckReport fail(std::string property, Assignment witness,
                          std::string detail) {
    CheckReport r;
    r.property = std::move(property);
    r.holds = false;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }

  const CheckReport* part(std::string_view name) const {
    for (const auto& p : parts)
      if (p.property == name) return &p;
    return nullptr;
  }

  std::optional<std::size_t> count(std::string_view name) const {
    for (const auto& [k, v] : counts)
      if (k == name) return v;
    return std::nullopt;
  }

  explicit operator bool() const { return holds; }
};

/// Conjunction of sub-checks. The witness and detail of the first failing
/// part become those of the combined report.
inline CheckReport all_of(std::string property, std::vector<CheckReport> parts) {
  CheckReport r = CheckReport::pass(std::move(property));
  for (const auto& p : parts) {
    if (!p.holds && r.holds) {
      r.holds = false;
      r.witness = p.witness ? *p.witness : Assignment{};
      r.detail = p.property + ": " + p.detail;
    }
  }
  r.parts = std::move(parts);
  return r;
}

}  // namespace womlat
