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

// Command-line front end. Exit codes: 0 success / property holds,
// 1 property fails (counterexample printed), 2 usage, parse or validation
// error.

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "womlat/womlat.hpp"

namespace womlat::cli {

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property;
  j["holds"] = r.holds;
  if (r.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [var, label] : *r.witness) w[var] = label;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["detail"] = r.detail;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = std::move(counts);
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& p : r.parts) j["parts"].push_back(to_json(p));
  return j;
}

inline void print_report(std::ostream& out, const CheckReport& r, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << r.property << ": " << (r.holds ? "holds" : "fails") << '\n';
  if (r.witness && !r.witness->empty())
    out << pad << "  witness: " << format_assignment(*r.witness) << '\n';
  if (!r.detail.empty()) out << pad << "  detail: " << r.detail << '\n';
  for (const auto& [k, v] : r.counts) out << pad << "  count " << k << ": " << v << '\n';
  for (const auto& p : r.parts) print_report(out, p, depth + 1);
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"womlat: finite lattices with a unary operation, implications and measures"};
    app.require_subcommand(1);
    app.add_flag("--json", json_, "print reports as JSON");
    app.fallthrough();

    std::string file, prop, formula, term, assign, impl, out_path, theorem, want, lattice_file,
        measure_file, check_kind, witness_spec, fixture_name;
    std::size_t all_n = 0, limit = 10;

    auto* check = app.add_subcommand("check", "check a structural property");
    check->add_option("file", file, ".lat file")->required();
    check->add_option("--prop", prop,
                      "wom|dwom|dnl|wdnl|comp|ortho|om|demorgan|antitone|involution|lemma-bounds")
        ->required();

    auto* holds_cmd = app.add_subcommand("holds", "check an identity or quasi-identity");
    holds_cmd->add_option("file", file)->required();
    holds_cmd->add_option("-f,--formula", formula)->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term");
    eval_cmd->add_option("file", file)->required();
    eval_cmd->add_option("-e,--expr", term)->required();
    eval_cmd->add_option("--assign", assign, "x=a,y=b");

    auto* derive = app.add_subcommand("derive", "derive a binary operation table");
    derive->add_option("file", file)->required();
    derive->add_option("--impl", impl, "d|w|sasaki|product")
        ->required()
        ->check(CLI::IsMember({"d", "w", "sasaki", "product"}));
    derive->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "verify a theorem on the file's structure");
    verify->add_option("file", file)->required();
    verify->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"d-bijection", "family-bijection", "w-bijection", "sasaki",
                               "half-adjunction", "weak-dnl-residuation", "residuation",
                               "converse", "measures", "d-properties", "w-properties"}));

    auto* search = app.add_subcommand("search", "enumerate unary tables meeting constraints");
    auto* lat_opt = search->add_option("--lattice", lattice_file);
    search->add_option("--all-n", all_n, "all lattices with 1..k elements")->excludes(lat_opt);
    search->add_option("--want", want, "wom,+dwom,-dnl,...")->required();
    search->add_option("--limit", limit);

    auto* measure = app.add_subcommand("measure", "generalized measures");
    measure->add_option("file", file)->required();
    auto* s_opt = measure->add_option("--s", measure_file, ".msr file");
    auto* check_opt = measure->add_option("--check", check_kind)
                          ->check(CLI::IsMember({"s1", "s2", "conditions", "proposition"}))
                          ->needs(s_opt);
    measure->add_option("--witness", witness_spec, "filter:<x> | ideal:<x>")->excludes(check_opt);

    auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
    dot->add_option("file", file)->required();

    auto* fixtures = app.add_subcommand("fixtures", "built-in example algebras");
    fixtures->require_subcommand(1);
    auto* fx_list = fixtures->add_subcommand("list");
    auto* fx_emit = fixtures->add_subcommand("emit");
    fx_emit->add_option("name", fixture_name)->required();

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << e.what() << '\n';
      return kUsage;
    }

    try {
      if (*check) return cmd_check(file, prop);
      if (*holds_cmd) return cmd_holds(file, formula);
      if (*eval_cmd) return cmd_eval(file, term, assign);
      if (*derive) return cmd_derive(file, impl, out_path);
      if (*verify) return cmd_verify(file, theorem);
      if (*search) return cmd_search(lattice_file, all_n, want, limit);
      if (*measure) {
        if (!witness_spec.empty()) return cmd_witness(file, witness_spec);
        if (check_kind.empty()) {
          err_ << "measure: give --s with --check, or --witness\n";
          return kUsage;
        }
        return cmd_measure(file, measure_file, check_kind);
      }
      if (*dot) {
        out_ << to_dot(*read_lat(file).lattice);
        return kOk;
      }
      if (*fx_list) {
        for (const auto& n : fixture_names()) out_ << n << '\n';
        return kOk;
      }
      if (*fx_emit) {
        auto a = fixture(fixture_name);
        out_ << write_lat(a.lattice(), &a);
        return kOk;
      }
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kUsage;
  }

 private:
  int report(const CheckReport& r) {
    if (json_) out_ << to_json(r).dump(2) << '\n';
    else print_report(out_, r);
    return r.holds ? kOk : kFails;
  }

  int cmd_check(const std::string& file, const std::string& prop) {
    auto f = read_lat(file);
    if (prop == "lemma-bounds") return report(check_lemma_bounds(f.algebra()));
    auto p = property_from_name(prop);
    if (!p) throw Error(ErrorKind::UnknownSymbol, "unknown property '" + prop + "'");
    return report(check_property(f.algebra(), *p));
  }

  int cmd_holds(const std::string& file, const std::string& formula) {
    auto f = read_lat(file);
    return report(holds(parse_formula(formula), f.context()));
  }

  int cmd_eval(const std::string& file, const std::string& text, const std::string& assign) {
    auto f = read_lat(file);
    std::map<std::string, Elem, std::less<>> values;
    std::size_t i = 0;
    while (i < assign.size()) {
      auto j = assign.find(',', i);
      if (j == std::string::npos) j = assign.size();
      std::string item = assign.substr(i, j - i);
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::FormatError, "assignment '" + item + "' lacks '='");
      values[std::string(detail::trim(item.substr(0, eq)))] =
          f.lattice->index_of(detail::trim(item.substr(eq + 1)));
      i = j + 1;
    }
    Elem v = eval(parse_term(text), f.context(), values);
    if (json_) {
      nlohmann::ordered_json j;
      j["term"] = text;
      j["value"] = f.lattice->name(v);
      out_ << j.dump(2) << '\n';
    } else {
      out_ << f.lattice->name(v) << '\n';
    }
    return kOk;
  }

  int cmd_derive(const std::string& file, const std::string& impl, const std::string& out_path) {
    auto f = read_lat(file);
    const auto& a = f.algebra();
    if (impl == "d") f.arrow = d_implication_from_complement(a);
    else if (impl == "w") f.arrow = w_implication_from_complement(a);
    else if (impl == "sasaki") f.arrow = sasaki_implication(a);
    else f.prod = sasaki_product(a);
    std::string text = write_lat(f);
    if (out_path.empty()) {
      out_ << text;
    } else {
      std::ofstream o(out_path, std::ios::binary);
      if (!o) throw Error(ErrorKind::FormatError, "cannot write '" + out_path + "'");
      o << text;
    }
    return kOk;
  }

  int cmd_verify(const std::string& file, const std::string& theorem) {
    auto f = read_lat(file);
    if (theorem == "d-bijection") return report(verify_d_bijection(f.lattice));
    if (theorem == "family-bijection") return report(verify_family_bijection(f.lattice));
    if (theorem == "w-bijection") return report(verify_w_bijection(f.lattice));
    if (theorem == "sasaki") return report(verify_sasaki_theorem(f.algebra()));
    if (theorem == "half-adjunction") return report(check_half_adjunction(f.algebra()));
    if (theorem == "weak-dnl-residuation") return report(check_weak_dnl_residuation(f.algebra()));
    if (theorem == "residuation") return report(verify_residuation(f.algebra()));
    if (theorem == "measures") return report(verify_measure_theorem(f.algebra()));
    if (theorem == "d-properties") return report(d_implication_properties(f.algebra()));
    if (theorem == "w-properties") return report(w_implication_properties(f.algebra()));
    // converse: use the file's own tables when both are present
    std::optional<LGroupoid> g;
    if (f.arrow && f.prod) g = LGroupoid{f.lattice, *f.prod, *f.arrow};
    else g = build_lgroupoid(f.algebra());
    auto result = verify_converse(*g);
    int rc = report(result.report);
    if (result.comp && !json_) out_ << "derived ': " << table_string(*result.comp) << '\n';
    return rc;
  }

  int cmd_search(const std::string& lattice_file, std::size_t all_n, const std::string& want,
                 std::size_t limit) {
    auto constraints = Constraints::parse(want);
    std::vector<LatticePtr> lattices;
    if (!lattice_file.empty()) {
      lattices.push_back(read_lat(lattice_file).lattice);
    } else {
      if (all_n == 0) throw Error(ErrorKind::FormatError, "search needs --lattice or --all-n");
      if (all_n > kEnumerationCap)
        throw Error(ErrorKind::CapExceeded, "--all-n limited to " + std::to_string(kEnumerationCap));
      for (std::size_t n = 1; n <= all_n; ++n)
        for (auto& l : enumerate_lattices(n)) lattices.push_back(std::move(l));
    }
    std::size_t found = 0;
    nlohmann::ordered_json matches = nlohmann::ordered_json::array();
    for (const auto& l : lattices) {
      if (found >= limit) break;
      for (const auto& a : enumerate_unary(l, constraints)) {
        if (found >= limit) break;
        ++found;
        if (json_) {
          nlohmann::ordered_json m;
          m["elements"] = l->names();
          m["lat"] = write_lat(*l, &a);
          matches.push_back(std::move(m));
        } else {
          out_ << "# match " << found << " (" << l->size() << " elements)\n"
               << write_lat(*l, &a) << '\n';
        }
      }
    }
    if (json_) {
      nlohmann::ordered_json j;
      j["constraints"] = constraints.to_string();
      j["matches"] = std::move(matches);
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "matches: " << found << '\n';
    }
    return found ? kOk : kFails;
  }

  int cmd_measure(const std::string& file, const std::string& measure_file,
                  const std::string& kind) {
    auto f = read_lat(file);
    const auto& a = f.algebra();
    auto s = parse_msr(*f.lattice, read_text(measure_file));
    if (kind == "s1") return report(in_S1(a, s));
    if (kind == "s2") return report(in_S2(a, s));
    if (kind == "proposition") return report(verify_conditions_proposition(a, s));
    return report(all_of("conditions", check_conditions(a, s).list()));
  }

  int cmd_witness(const std::string& file, const std::string& spec) {
    auto f = read_lat(file);
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::FormatError, "--witness expects filter:<x> or ideal:<x>");
    std::string kind = spec.substr(0, colon);
    Elem x = f.lattice->index_of(spec.substr(colon + 1));
    const auto& a = f.algebra();
    if (kind == "filter") out_ << write_msr(*f.lattice, witness_measure_filter(a, x));
    else if (kind == "ideal") out_ << write_msr(*f.lattice, witness_measure_ideal(a, x));
    else throw Error(ErrorKind::FormatError, "--witness expects filter:<x> or ideal:<x>");
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
};

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  return App(out, err).run(std::move(args));
}

}  // namespace womlat::cli
