#pragma once

// The `rheight` command line.  run_cli() takes the arguments without the
// program name and writes to the given streams, so tests can drive it
// in-process.
//
// Exit status: 0 success, 1 failure (a failing suite, bound or
// completeness check, or an I/O error), 2 usage or parse errors.

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rheight/rheight.hpp"

namespace rheight::cli {

  enum class InputKind { table, presentation };

  struct Input {
    InputKind                      kind;
    FiniteSemigroup                semigroup;
    std::optional<RewritingSystem> presentation;
  };

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  class IoError : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw IoError("cannot read '" + path + "'");
      }
      return {std::istreambuf_iterator<char>(in), {}};
    }

    // `-` writes to `out`.
    inline void write_file(std::string const& path,
                           std::string const& text,
                           std::ostream&      out) {
      if (path == "-") {
        out << text;
        return;
      }
      std::ofstream f(path, std::ios::binary);
      if (!f || !(f << text) || !f.flush()) {
        throw IoError("cannot write '" + path + "'");
      }
    }

    // From the first declaration: `letters:` or `order:`.
    inline InputKind infer_kind(std::string_view text) {
      std::size_t pos = 0;
      while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto line = rheight::detail::strip_comment(text.substr(pos, end - pos));
        pos       = end + 1;
        auto at   = line.find_first_not_of(" \t\r");
        if (at == std::string_view::npos) {
          continue;
        }
        line = line.substr(at);
        if (line.rfind("letters", 0) == 0) {
          return InputKind::presentation;
        }
        if (line.rfind("order", 0) == 0) {
          return InputKind::table;
        }
        break;
      }
      throw UsageError("cannot tell the input kind; it should start with "
                       "'letters:' or 'order:' (or pass --input-kind)");
    }

    inline Input load(std::string const& path,
                      std::string const& kind_flag,
                      std::size_t        cap) {
      auto const text = read_file(path);
      InputKind  kind;
      if (kind_flag.empty()) {
        kind = infer_kind(text);
      } else if (kind_flag == "table") {
        kind = InputKind::table;
      } else if (kind_flag == "presentation") {
        kind = InputKind::presentation;
      } else {
        throw UsageError("unknown input kind '" + kind_flag + "'");
      }
      if (kind == InputKind::table) {
        return {kind, parse_table_text(text), std::nullopt};
      }
      auto rs = parse_presentation_text(text);
      auto s  = semigroup_from_presentation(rs, cap);
      return {kind, std::move(s), std::move(rs)};
    }

    inline index_type element(Input const& in, std::string const& name) {
      if (auto i = in.semigroup.find(name)) {
        return *i;
      }
      if (in.presentation) {
        auto const nf = to_string(*in.presentation,
                                  reduce_word(*in.presentation,
                                              parse_word(*in.presentation,
                                                         name)));
        if (auto i = in.semigroup.find(nf)) {
          return *i;
        }
      }
      throw UsageError("no element named '" + name + "'");
    }

    inline std::vector<Relation> relations(std::string const& flag) {
      if (flag.empty()) {
        return {all_relations.begin(), all_relations.end()};
      }
      auto r = parse_relation(flag);
      if (!r) {
        throw UsageError("unknown relation '" + flag + "'");
      }
      return {*r};
    }

    inline std::pair<std::size_t, std::size_t> parse_range(std::string const& s) {
      auto bad = [&] {
        return UsageError("expected a range A..B or a number, got '" + s
                          + "'");
      };
      try {
        std::size_t used = 0;
        auto dots = s.find("..");
        if (dots == std::string::npos) {
          auto n = std::stoul(s, &used);
          if (used != s.size()) {
            throw bad();
          }
          return {n, n};
        }
        auto lo = std::stoul(s.substr(0, dots), &used);
        if (used != dots) {
          throw bad();
        }
        auto rest = s.substr(dots + 2);
        auto hi   = std::stoul(rest, &used);
        if (used != rest.size() || hi < lo) {
          throw bad();
        }
        return {lo, hi};
      } catch (std::logic_error const&) {
        throw bad();
      }
    }

    inline std::string names_of(FiniteSemigroup const& s, ElementSet const& xs) {
      std::string out;
      for (auto x : xs) {
        if (!out.empty()) {
          out += ' ';
        }
        out += s.name(x);
      }
      return out;
    }

    inline char const* yes_no(bool b) { return b ? "true" : "false"; }
  }  // namespace detail

  inline int run_cli(std::vector<std::string> const& args,
                     std::ostream&                   out,
                     std::ostream&                   err) {
    CLI::App app{"Green's relations, R-heights and bi-ideal bounds for finite "
                 "semigroups"};
    app.name("rheight");
    app.require_subcommand(1);

    std::string input, relation, kind_flag, dot_path, json_path, table_path,
        presentation_path, kind_name = "bi-ideal", suite, n_range, family;
    std::size_t cap = default_enumeration_cap;
    std::vector<std::string> gens;
    SuiteOptions             suite_opts;
    SearchOptions            search_opts;
    std::size_t              family_n = 2;

    auto add_input = [&](CLI::App* c) {
      c->add_option("input", input, "table or presentation file")->required();
      c->add_option("--input-kind", kind_flag,
                    "override the detected input kind")
          ->check(CLI::IsMember({"table", "presentation"}));
      c->add_option("--cap", cap,
                    "maximum number of normal forms for a presentation");
    };
    auto add_relation = [&](CLI::App* c, char const* help) {
      c->add_option("--relation", relation, help)
          ->check(CLI::IsMember({"R", "L", "J", "H"}));
    };

    auto* height_cmd = app.add_subcommand("height", "print Green heights");
    add_input(height_cmd);
    add_relation(height_cmd, "one relation (default: all four)");

    auto* classes_cmd = app.add_subcommand("classes", "list Green classes");
    add_input(classes_cmd);
    add_relation(classes_cmd, "relation (default R)");

    auto* poset_cmd
        = app.add_subcommand("poset", "export the class poset as DOT");
    add_input(poset_cmd);
    add_relation(poset_cmd, "relation (default R)");
    poset_cmd->add_option("--dot", dot_path, "output file (default stdout)");

    auto* complete_cmd = app.add_subcommand(
        "complete", "check a presentation for confluence");
    complete_cmd->add_option("input", input, "presentation file")->required();

    auto* elements_cmd
        = app.add_subcommand("elements", "list elements in index order");
    add_input(elements_cmd);
    elements_cmd->add_option("--table", table_path,
                             "also write the multiplication table here");

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "height bound report for a generated bi-ideal or ideal");
    add_input(bounds_cmd);
    bounds_cmd->add_option("--gen", gens, "generator (repeatable)")
        ->required();
    bounds_cmd->add_option("--kind", kind_name,
                           "bi-ideal, right-ideal, left-ideal or two-sided");
    bounds_cmd->add_option("--json", json_path, "JSON report ('-' = stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name")->required();
    verify_cmd->add_option("--n", n_range, "parameter range A..B");
    verify_cmd->add_option("--order", suite_opts.order,
                           "largest table order for the small-order oracle");
    verify_cmd->add_option("--samples", suite_opts.samples,
                           "random tables per sampled order");
    verify_cmd->add_option("--words", suite_opts.words,
                           "random words per rewriting system");
    verify_cmd->add_option("--seed", suite_opts.seed, "random seed");
    verify_cmd->add_option("--json", json_path, "JSON report ('-' = stdout)");

    auto* search_cmd = app.add_subcommand(
        "search-open1", "search small tables for bi-ideals above 3n-2");
    search_cmd->add_option("--max-order", search_opts.max_order,
                           "largest table order (at most 8)");
    search_cmd->add_option("--budget", search_opts.budget,
                           "number of tables to examine");
    search_cmd->add_option("--seed", search_opts.seed, "random seed");
    search_cmd->add_option("--json", json_path, "JSON report ('-' = stdout)");

    auto* export_cmd
        = app.add_subcommand("export", "write a family instance to files");
    export_cmd->add_option("family", family,
                           "bi-ideal-family, left-ideal-cs-family or "
                           "brandt-tower")
        ->required();
    export_cmd->add_option("--n", family_n, "family parameter")->required();
    export_cmd->add_option("--table", table_path, "table text output");
    export_cmd->add_option("--presentation", presentation_path,
                           "presentation text output");

    std::vector<char const*> argv{"rheight"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }

    try {
      if (height_cmd->parsed()) {
        auto const in = detail::load(input, kind_flag, cap);
        for (auto r : detail::relations(relation)) {
          out << "H_" << to_string(r) << ": " << height(in.semigroup, r)
              << '\n';
        }
        return 0;
      }
      if (classes_cmd->parsed() || poset_cmd->parsed()) {
        auto const in = detail::load(input, kind_flag, cap);
        auto const rel = relation.empty() ? Relation::R
                                          : detail::relations(relation)[0];
        ClassPoset const poset(in.semigroup, rel);
        if (poset_cmd->parsed()) {
          detail::write_file(dot_path.empty() ? "-" : dot_path, to_dot(poset),
                             out);
          return 0;
        }
        out << "relation: " << to_string(rel) << '\n'
            << "classes: " << poset.size() << '\n'
            << "height: " << poset.height() << '\n';
        for (std::size_t c = 0; c < poset.size(); ++c) {
          out << 'c' << c << ": " << class_label(poset, c) << '\n';
        }
        return 0;
      }
      if (complete_cmd->parsed()) {
        auto const rs     = parse_presentation_text(detail::read_file(input));
        auto const report = is_complete(rs);
        out << "complete: " << detail::yes_no(report.complete) << '\n'
            << "critical_pairs: " << report.pairs_checked << '\n';
        if (report.witness) {
          auto const& w = *report.witness;
          out << "witness_source: " << to_string(rs, w.source) << '\n'
              << "witness_left: " << to_string(rs, reduce_word(rs, w.left_result))
              << '\n'
              << "witness_right: "
              << to_string(rs, reduce_word(rs, w.right_result)) << '\n';
        }
        return report.complete ? 0 : 1;
      }
      if (elements_cmd->parsed()) {
        auto const in = detail::load(input, kind_flag, cap);
        auto const& s = in.semigroup;
        out << "order: " << s.order() << '\n';
        if (auto e = s.identity()) {
          out << "identity: " << s.name(*e) << '\n';
        }
        for (index_type i = 0; i < s.order(); ++i) {
          out << i << ": " << s.name(i) << '\n';
        }
        if (!table_path.empty()) {
          detail::write_file(table_path, to_table_text(s), out);
        }
        return 0;
      }
      if (bounds_cmd->parsed()) {
        auto const in   = detail::load(input, kind_flag, cap);
        auto const kind = parse_subset_kind(kind_name);
        if (!kind || *kind == SubsetKind::subsemigroup) {
          throw UsageError("unknown kind '" + kind_name + "'");
        }
        ElementSet xs;
        for (auto const& g : gens) {
          xs.push_back(detail::element(in, g));
        }
        auto const h      = generate(in.semigroup, xs, *kind);
        auto const report = bound_report(h);
        out << "members: " << detail::names_of(in.semigroup, h.members())
            << '\n'
            << to_record(report);
        if (!json_path.empty()) {
          detail::write_file(json_path, to_json(report).dump(2) + "\n", out);
        }
        return report.pass && report.sanity_pass ? 0 : 1;
      }
      if (verify_cmd->parsed()) {
        if (!n_range.empty()) {
          suite_opts.n_range = detail::parse_range(n_range);
        }
        auto const result = run_suite(suite, suite_opts);
        out << "suite: " << result.suite << '\n';
        for (auto const& c : result.cases) {
          out << c.id << ": " << (c.pass ? "pass" : "FAIL") << '\n';
          if (!c.pass) {
            out << "  expected: " << c.expected.dump() << '\n'
                << "  computed: " << c.computed.dump() << '\n';
          }
        }
        auto const passed = std::count_if(result.cases.begin(),
                                          result.cases.end(),
                                          [](auto const& c) { return c.pass; });
        out << "cases: " << result.cases.size() << '\n'
            << "passed: " << passed << '\n'
            << "pass: " << detail::yes_no(result.pass()) << '\n';
        if (!json_path.empty()) {
          detail::write_file(json_path, to_json(result).dump(2) + "\n", out);
        }
        return result.pass() ? 0 : 1;
      }
      if (search_cmd->parsed()) {
        auto const report = search_open_problem(search_opts);
        out << to_record(report);
        if (!json_path.empty()) {
          detail::write_file(json_path, to_json(report).dump(2) + "\n", out);
        }
        return 0;
      }
      if (export_cmd->parsed()) {
        FamilyInstance inst = [&] {
          if (family == "bi-ideal-family") {
            return bi_ideal_family(family_n);
          }
          if (family == "left-ideal-cs-family") {
            return left_ideal_cs_family(family_n);
          }
          if (family == "brandt-tower") {
            return right_ideal_tower(family_n);
          }
          throw UsageError("unknown family '" + family + "'");
        }();
        if (!presentation_path.empty()) {
          if (!inst.presentation) {
            throw UsageError("family '" + family
                             + "' has no presentation");
          }
          detail::write_file(presentation_path,
                             to_presentation_text(*inst.presentation), out);
        }
        if (!table_path.empty() || presentation_path.empty()) {
          detail::write_file(table_path.empty() ? "-" : table_path,
                             to_table_text(inst.semigroup), out);
        }
        return 0;
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (NotAssociative const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (DimensionMismatch const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (InvalidPresentation const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (UnknownSuite const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return 2;
  }

}  // namespace rheight::cli
