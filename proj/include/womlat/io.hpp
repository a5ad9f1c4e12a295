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

// Text formats.
//
// .lat (one lattice per file, '#' starts a comment, sections may span lines):
//   [elements] 0 a b c 1
//   [covers]   0 a ; 0 b ; 0 c ; a 1 ; b 1 ; c 1
//   [unary ']  0:1 a:b b:c c:a 1:0
//   [binary ->] (a,b):b (a,0):b ...
//   [binary *]  (a,b):0 ...
// Operation sections are optional but must be total when present.
//
// .msr: one "label: p/q" per line, total over the elements.

#pragma once

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "womlat/algebra.hpp"
#include "womlat/measures.hpp"
#include "womlat/term.hpp"

namespace womlat {

struct LatFile {
  LatticePtr lattice;
  std::optional<UnaryAlgebra> comp;
  std::optional<BinaryOpTable> arrow;
  std::optional<BinaryOpTable> prod;

  /// The unary algebra; fails with MissingOperation when the file has no
  /// [unary '] section.
  const UnaryAlgebra& algebra() const {
    if (!comp) throw Error(ErrorKind::MissingOperation, "file has no [unary '] section");
    return *comp;
  }

  EvalContext context() const { return {lattice, comp, arrow, prod}; }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::string strip_comments(std::string_view text) {
  std::string out;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) out += c;
  }
  return out;
}

[[noreturn]] inline void format_error(const std::string& msg) {
  throw Error(ErrorKind::FormatError, msg);
}

inline std::vector<Elem> parse_unary_section(const FiniteLattice& l, std::string_view body) {
  const auto n = l.size();
  std::vector<Elem> t(n, n);
  for (const auto& item : split_ws(body)) {
    auto colon = item.find(':');
    if (colon == std::string::npos) format_error("unary entry '" + item + "' lacks ':'");
    Elem x = l.index_of(item.substr(0, colon));
    Elem y = l.index_of(item.substr(colon + 1));
    if (t[x] != n) format_error("unary entry for '" + l.name(x) + "' repeated");
    t[x] = y;
  }
  for (Elem x = 0; x < n; ++x)
    if (t[x] == n) format_error("unary table has no entry for '" + l.name(x) + "'");
  return t;
}

inline std::vector<Elem> parse_binary_section(const FiniteLattice& l, std::string_view body) {
  const auto n = l.size();
  std::string s;
  for (char c : body)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<Elem> t(n * n, n);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') format_error("binary entry must start with '(' near '" + s.substr(i, 12) + "'");
    auto comma = s.find(',', i);
    auto close = s.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close ||
        close + 1 >= s.size() || s[close + 1] != ':')
      format_error("malformed binary entry near '" + s.substr(i, 12) + "'");
    auto next = s.find('(', close);
    if (next == std::string::npos) next = s.size();
    Elem x = l.index_of(s.substr(i + 1, comma - i - 1));
    Elem y = l.index_of(s.substr(comma + 1, close - comma - 1));
    Elem z = l.index_of(s.substr(close + 2, next - close - 2));
    if (t[x * n + y] != n)
      format_error("binary entry (" + l.name(x) + "," + l.name(y) + ") repeated");
    t[x * n + y] = z;
    i = next;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t[x * n + y] == n)
        format_error("binary table has no entry for (" + l.name(x) + "," + l.name(y) + ")");
  return t;
}

}  // namespace detail

inline LatFile parse_lat(std::string_view text) {
  const std::string clean = detail::strip_comments(text);
  std::map<std::string, std::string> sections;
  std::vector<std::string> order;
  std::size_t i = clean.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && clean[i] != '[')
    detail::format_error("content before the first section header");
  while (i != std::string::npos && i < clean.size()) {
    auto close = clean.find(']', i);
    if (close == std::string::npos) detail::format_error("unterminated section header");
    std::string header{detail::trim(std::string_view(clean).substr(i + 1, close - i - 1))};
    // collapse inner whitespace: "unary  '" -> "unary '"
    header = [&] {
      auto words = detail::split_ws(header);
      std::string h;
      for (const auto& w : words) h += (h.empty() ? "" : " ") + w;
      return h;
    }();
    auto next = clean.find('[', close);
    std::string body = clean.substr(close + 1, next == std::string::npos ? std::string::npos
                                                                          : next - close - 1);
    if (sections.contains(header)) detail::format_error("section [" + header + "] repeated");
    sections[header] = body;
    order.push_back(header);
    i = next;
  }
  for (const auto& h : order)
    if (h != "elements" && h != "covers" && h != "unary '" && h != "binary ->" &&
        h != "binary *")
      detail::format_error("unknown section [" + h + "]");
  if (!sections.contains("elements")) detail::format_error("missing [elements] section");

  auto names = detail::split_ws(sections["elements"]);
  CoverList covers;
  if (sections.contains("covers")) {
    std::string_view body = sections["covers"];
    std::size_t p = 0;
    while (p <= body.size()) {
      auto semi = body.find(';', p);
      if (semi == std::string_view::npos) semi = body.size();
      auto words = detail::split_ws(body.substr(p, semi - p));
      if (words.size() == 2) covers.emplace_back(words[0], words[1]);
      else if (!words.empty())
        detail::format_error("cover entry needs two labels: '" +
                             std::string(detail::trim(body.substr(p, semi - p))) + "'");
      p = semi + 1;
    }
  }
  LatFile f;
  f.lattice = share(FiniteLattice::from_covers(std::move(names), covers));
  if (sections.contains("unary '"))
    f.comp.emplace(f.lattice, detail::parse_unary_section(*f.lattice, sections["unary '"]));
  if (sections.contains("binary ->"))
    f.arrow.emplace(f.lattice, detail::parse_binary_section(*f.lattice, sections["binary ->"]),
                    OpRole::Implication);
  if (sections.contains("binary *"))
    f.prod.emplace(f.lattice, detail::parse_binary_section(*f.lattice, sections["binary *"]),
                   OpRole::Product);
  return f;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LatFile read_lat(const std::filesystem::path& path) { return parse_lat(read_text(path)); }

inline std::string write_lat(const FiniteLattice& l, const UnaryAlgebra* comp = nullptr,
                             const BinaryOpTable* arrow = nullptr,
                             const BinaryOpTable* prod = nullptr) {
  std::string out = "[elements]";
  for (const auto& s : l.names()) out += ' ' + s;
  out += "\n[covers]";
  bool first = true;
  for (auto [a, b] : l.covers()) {
    out += first ? " " : " ; ";
    out += l.name(a) + ' ' + l.name(b);
    first = false;
  }
  out += '\n';
  if (comp) out += "[unary '] " + table_string(*comp) + '\n';
  auto binary = [&](const BinaryOpTable& op, std::string_view symbol) {
    out += "[binary " + std::string(symbol) + "]";
    for (Elem x : l.elements()) {
      out += '\n';
      for (Elem y : l.elements()) {
        if (y) out += ' ';
        out += '(' + l.name(x) + ',' + l.name(y) + "):" + l.name(op(x, y));
      }
    }
    out += '\n';
  };
  if (arrow) binary(*arrow, "->");
  if (prod) binary(*prod, "*");
  return out;
}

inline std::string write_lat(const LatFile& f) {
  return write_lat(*f.lattice, f.comp ? &*f.comp : nullptr, f.arrow ? &*f.arrow : nullptr,
                   f.prod ? &*f.prod : nullptr);
}

inline Rational parse_rational(std::string_view s) {
  s = detail::trim(s);
  auto to_int = [&](std::string_view t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size() || t.empty())
      throw Error(ErrorKind::FormatError, "bad number '" + std::string(s) + "'");
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(s));
  auto den = to_int(detail::trim(s.substr(slash + 1)));
  if (den == 0) throw Error(ErrorKind::FormatError, "zero denominator in '" + std::string(s) + "'");
  return Rational(to_int(detail::trim(s.substr(0, slash))), den);
}

inline GeneralizedMeasure parse_msr(const FiniteLattice& l, std::string_view text) {
  const std::string clean = detail::strip_comments(text);
  std::vector<std::optional<Rational>> v(l.size());
  std::istringstream in(clean);
  for (std::string line; std::getline(in, line);) {
    auto t = detail::trim(line);
    if (t.empty()) continue;
    auto colon = t.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorKind::FormatError, "measure line '" + std::string(t) + "' lacks ':'");
    Elem x = l.index_of(detail::trim(t.substr(0, colon)));
    if (v[x]) throw Error(ErrorKind::FormatError, "measure value for '" + l.name(x) + "' repeated");
    v[x] = parse_rational(t.substr(colon + 1));
  }
  std::vector<Rational> values;
  for (Elem x : l.elements()) {
    if (!v[x]) throw Error(ErrorKind::FormatError, "measure has no value for '" + l.name(x) + "'");
    values.push_back(*v[x]);
  }
  return GeneralizedMeasure(std::move(values));
}

inline std::string write_msr(const FiniteLattice& l, const GeneralizedMeasure& s) {
  std::string out;
  for (Elem x : l.elements()) out += l.name(x) + ": " + to_string(s(x)) + '\n';
  return out;
}

/// Hasse diagram: one edge per cover, pointing upwards.
inline std::string to_dot(const FiniteLattice& l) {
  auto q = [](const std::string& s) { return '"' + s + '"'; };
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (const auto& s : l.names()) out += "  " + q(s) + ";\n";
  for (auto [a, b] : l.covers()) out += "  " + q(l.name(a)) + " -> " + q(l.name(b)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace womlat
