#pragma once

// Named verification suites.  Each suite builds its instances from scratch,
// compares an expected record (from the closed formulas) with the record
// computed by the engine field by field, and reports one case per instance.
// Suites share no state, so any subset may run in any order.

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rheight/constructions.hpp"
#include "rheight/enumerate.hpp"
#include "rheight/green.hpp"
#include "rheight/ideals.hpp"
#include "rheight/invariants.hpp"
#include "rheight/rewriting.hpp"

namespace rheight {

  using json = nlohmann::ordered_json;

  inline constexpr std::uint64_t default_seed = 20240611;

  struct CaseResult {
    std::string id;
    json        expected;
    json        computed;
    json        info = json::object();  // diagnostics, not compared
    bool        pass = false;
  };

  struct SuiteResult {
    std::string             suite;
    std::vector<CaseResult> cases;
    double                  elapsed_seconds = 0;

    bool pass() const {
      return std::all_of(cases.begin(), cases.end(),
                         [](auto const& c) { return c.pass; });
    }
  };

  inline json to_json(SuiteResult const& r) {
    json j;
    j["suite"]           = r.suite;
    j["pass"]            = r.pass();
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["cases"]           = json::array();
    for (auto const& c : r.cases) {
      j["cases"].push_back({{"id", c.id},
                            {"pass", c.pass},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"info", c.info}});
    }
    return j;
  }

  inline SuiteResult suite_result_from_json(json const& j) {
    SuiteResult r;
    r.suite           = j.at("suite").get<std::string>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    for (auto const& c : j.at("cases")) {
      r.cases.push_back({c.at("id").get<std::string>(), c.at("expected"),
                         c.at("computed"), c.at("info"),
                         c.at("pass").get<bool>()});
    }
    return r;
  }

  struct SuiteOptions {
    // Inclusive parameter range; each suite has its own default.
    std::optional<std::pair<std::size_t, std::size_t>> n_range;
    std::size_t   order   = exhaustive_order_limit;
    std::size_t   samples = 100'000;
    std::size_t   words   = 10'000;
    std::uint64_t seed    = default_seed;
  };

  namespace detail {
    inline CaseResult make_case(std::string id, json expected, json computed,
                                json info = json::object()) {
      bool const pass = expected == computed;
      return {std::move(id), std::move(expected), std::move(computed),
              std::move(info), pass};
    }

    inline std::vector<std::string> sorted_names(FiniteSemigroup const& s,
                                                 ElementSet const&      xs) {
      std::vector<std::string> out;
      for (auto x : xs) {
        out.push_back(s.name(x));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    inline std::vector<std::string> sorted(std::vector<std::string> xs) {
      std::sort(xs.begin(), xs.end());
      return xs;
    }

    inline std::pair<std::size_t, std::size_t>
    range_or(SuiteOptions const& o, std::size_t lo, std::size_t hi) {
      return o.n_range.value_or(std::pair{lo, hi});
    }

    // One rewrite at a uniformly random match, repeated to a normal form.
    template <typename Rng>
    Word reduce_randomly(RewritingSystem const& rs, Word w, Rng& rng) {
      while (!w.is_zero()) {
        std::vector<std::pair<std::size_t, std::size_t>> matches;
        auto const& ls = w.letters();
        for (std::size_t pos = 0; pos < ls.size(); ++pos) {
          for (std::size_t r = 0; r < rs.rules().size(); ++r) {
            if (matches_at(ls, pos, rs.rules()[r].lhs.letters())) {
              matches.emplace_back(pos, r);
            }
          }
        }
        if (matches.empty()) {
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
        auto [pos, r] = matches[pick(rng)];
        w             = rewrite_at(ls, pos, rs.rules()[r]);
      }
      return w;
    }

    // Words of length 1..12 on which deterministic and random reduction
    // disagree.
    inline std::size_t strategy_disagreements(RewritingSystem const& rs,
                                              std::size_t           words,
                                              std::uint64_t         seed) {
      std::mt19937_64                            rng(seed);
      std::uniform_int_distribution<std::size_t> len(1, 12);
      std::uniform_int_distribution<Letter>      letter(
          0, static_cast<Letter>(rs.alphabet().size() - 1));
      std::size_t bad = 0;
      for (std::size_t i = 0; i < words; ++i) {
        std::vector<Letter> ls(len(rng));
        for (auto& l : ls) {
          l = letter(rng);
        }
        Word w(std::move(ls));
        if (reduce_word(rs, w) != reduce_randomly(rs, w, rng)) {
          ++bad;
        }
      }
      return bad;
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    inline std::vector<CaseResult> bi_ideal_family_cases(SuiteOptions const& o) {
      std::vector<CaseResult> out;
      auto [lo, hi] = range_or(o, 2, 6);
      for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n) {
        auto       inst = bi_ideal_family(n);
        auto const& s   = inst.semigroup;
        auto const& b   = inst.distinguished;
        auto const  rep = bound_report(b);
        json expected{{"order", 12 * (n - 1) + 1},
                      {"complete", true},
                      {"H_R(S)", n},
                      {"H_R(B)", 3 * n - 2},
                      {"chain_param", n},
                      {"complement", sorted({"t", "zt", "ty", "yzt", "tyz"})},
                      {"bound_pass", true},
                      {"bound_tight", true}};
        json computed{
            {"order", s.order()},
            {"complete", is_complete(*inst.presentation).complete},
            {"H_R(S)", height(s, Relation::R)},
            {"H_R(B)", rep.relative_height},
            {"chain_param", rep.chain_param},
            {"complement", sorted_names(s, set_difference(s.all(), b.members()))},
            {"bound_pass", rep.pass},
            {"bound_tight", rep.tight}};
        out.push_back(make_case("n=" + std::to_string(n), expected, computed,
                                {{"theorem_id", rep.theorem_id},
                                 {"bound", rep.bound}}));
      }
      return out;
    }

    inline std::vector<CaseResult>
    left_ideal_cs_family_cases(SuiteOptions const& o) {
      std::vector<CaseResult> out;
      auto [lo, hi] = range_or(o, 2, 8);
      for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n) {
        auto        inst = left_ideal_cs_family(n);
        auto const& s    = inst.semigroup;
        auto const& a    = inst.distinguished;
        auto const  rep  = bound_report(a);
        auto const  j    = class_poset(s, Relation::J);
        json expected{{"order", 6 * (n - 1) + 1},
                      {"complete", true},
                      {"H_R(S)", n},
                      {"H_R(A)", 2 * n - 1},
                      {"chain_param", n},
                      {"complement", sorted({"z", "yz"})},
                      {"H_J(S)", 2 * n - 1},
                      {"J_classes_form_chain", true},
                      {"bound_pass", true},
                      {"bound_tight", true}};
        json computed{
            {"order", s.order()},
            {"complete", is_complete(*inst.presentation).complete},
            {"H_R(S)", height(s, Relation::R)},
            {"H_R(A)", rep.relative_height},
            {"chain_param", rep.chain_param},
            {"complement", sorted_names(s, set_difference(s.all(), a.members()))},
            {"H_J(S)", j.height()},
            {"J_classes_form_chain", j.is_chain()},
            {"bound_pass", rep.pass},
            {"bound_tight", rep.tight}};
        out.push_back(make_case("n=" + std::to_string(n), expected, computed,
                                {{"theorem_id", rep.theorem_id}}));
      }
      return out;
    }

    // (i,s,j) <_T (k,t,l) iff i = k and s <_S t, over all pairs.
    inline bool brandt_order_law(FiniteSemigroup const& s,
                                 FiniteSemigroup const& t,
                                 std::size_t            k) {
      auto strict = [](FiniteSemigroup const& u, index_type a, index_type b) {
        return leq(u, a, b, Relation::R) && !leq(u, b, a, Relation::R);
      };
      std::size_t const m = s.order();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t p = 0; p < k; ++p) {
            for (std::size_t q = 0; q < k; ++q) {
              for (index_type a = 0; a < m; ++a) {
                for (index_type b = 0; b < m; ++b) {
                  bool const lhs = strict(t, brandt_index(m, k, i, a, j),
                                          brandt_index(m, k, p, b, q));
                  bool const rhs = i == p && strict(s, a, b);
                  if (lhs != rhs) {
                    return false;
                  }
                }
              }
            }
          }
        }
      }
      return true;
    }

    inline std::vector<CaseResult> brandt_theorem_cases(SuiteOptions const&) {
      std::vector<CaseResult> out;
      std::vector<std::pair<std::string, FiniteSemigroup>> bases{
          {"trivial", trivial_semigroup()},
          {"left-zero-2", left_zero_semigroup(2)},
          {"bi-ideal-family-2", bi_ideal_family(2).semigroup}};
      for (auto const& [label, s] : bases) {
        auto const t    = brandt_extension(s, 2);
        auto const hr_s = height(s, Relation::R);
        auto const hr_t = height(t, Relation::R);
        bool const law  = brandt_order_law(s, t, 2);
        for (index_type a = 0; a < s.order(); ++a) {
          auto const hr_a
              = relative_height(generate(s, {a}, SubsetKind::right_ideal));
          auto const hr_b = relative_height(generate(
              t, {brandt_index(s.order(), 2, 0, a, 0)},
              SubsetKind::right_ideal));
          json expected{{"order", 4 * s.order() + 1},
                        {"H_R(T)", hr_s + 1},
                        {"H_R(B)", hr_a + 2},
                        {"order_law", true}};
          json computed{{"order", t.order()},
                        {"H_R(T)", hr_t},
                        {"H_R(B)", hr_b},
                        {"order_law", law}};
          out.push_back(make_case(label + " a=" + s.name(a), expected,
                                  computed));
        }
      }
      return out;
    }

    // Maps (i,e,j) of the doubled trivial semigroup to (i,j) of the example.
    inline bool tower_matches_example(FiniteSemigroup const& s) {
      auto const              example = brandt_example();
      std::vector<index_type> map;
      for (auto const& name : s.names()) {
        std::string target = name;
        if (auto pos = target.find(",e,"); pos != std::string::npos) {
          target.replace(pos, 3, ",");
        }
        auto idx = example.find(target);
        if (!idx) {
          return false;
        }
        map.push_back(*idx);
      }
      return is_isomorphism(s, example, map);
    }

    inline std::vector<CaseResult> brandt_tower_cases(SuiteOptions const& o) {
      std::vector<CaseResult> out;
      auto [lo, hi] = range_or(o, 1, 4);
      std::size_t order = 1;
      for (std::size_t n = 1; n <= hi; ++n) {
        if (n > 1) {
          order = 4 * order + 1;
        }
        if (n < lo) {
          continue;
        }
        auto       inst = right_ideal_tower(n);
        auto const rep  = bound_report(inst.distinguished);
        json expected{{"order", order},
                      {"H_R(S)", n},
                      {"H_R(A)", 2 * n - 1},
                      {"chain_param", n},
                      {"bound_tight", true}};
        json computed{{"order", inst.semigroup.order()},
                      {"H_R(S)", height(inst.semigroup, Relation::R)},
                      {"H_R(A)", rep.relative_height},
                      {"chain_param", rep.chain_param},
                      {"bound_tight", rep.tight}};
        if (n == 2) {
          expected["isomorphic_to_example"] = true;
          computed["isomorphic_to_example"]
              = tower_matches_example(inst.semigroup);
        }
        out.push_back(make_case("n=" + std::to_string(n), expected, computed));
      }
      return out;
    }

    inline std::vector<CaseResult> null_extension_cases(SuiteOptions const&) {
      std::vector<CaseResult> out;
      std::vector<std::pair<std::string, FiniteSemigroup>> bases{
          {"left-ideal-cs-family-3", left_ideal_cs_family(3).semigroup},
          {"trivial", trivial_semigroup()},
          {"left-zero-2", left_zero_semigroup(2)}};
      for (auto const& [label, t] : bases) {
        auto const ext  = null_extension(t);
        auto const hr_t = height(t, Relation::R);
        auto const rep  = bound_report(ext.ideal);
        json expected{{"order", 2 * t.order() + 1},
                      {"H_R(N)", 2},
                      {"chain_param", hr_t + 1},
                      {"bound_pass", true}};
        json computed{{"order", ext.semigroup.order()},
                      {"H_R(N)", rep.relative_height},
                      {"chain_param", rep.chain_param},
                      {"bound_pass", rep.pass}};
        out.push_back(make_case(label, expected, computed,
                                {{"H_R(T)", hr_t}}));
      }
      return out;
    }

    inline std::vector<CaseResult> brandt_example_cases(SuiteOptions const&) {
      auto const s       = brandt_example();
      auto const a       = brandt_example_right_ideal();
      auto const s_poset = class_poset(s, Relation::R);
      auto const a_poset
          = class_poset(restrict_to_subsemigroup(a).semigroup, Relation::R);
      std::vector<std::string> bottom;
      for (auto c : s_poset.minimal_classes()) {
        bottom.push_back(class_label(s_poset, c));
      }
      auto const rep = bound_report(a);
      json expected{{"H_R(S)", 2},
                    {"H_R(A)", 3},
                    {"A", sorted({"(1,1)", "(1,2)", "0"})},
                    {"A_poset_is_chain", true},
                    {"S_maximal_classes", 2},
                    {"S_minimal_classes", {"{0}"}},
                    {"chain_param", 2},
                    {"regular_elements", 5},
                    {"inverse", true},
                    {"bound_tight", true}};
      json computed{
          {"H_R(S)", s_poset.height()},
          {"H_R(A)", a_poset.height()},
          {"A", sorted_names(s, a.members())},
          {"A_poset_is_chain", a_poset.is_chain()},
          {"S_maximal_classes", s_poset.maximal_classes().size()},
          {"S_minimal_classes", bottom},
          {"chain_param", rep.chain_param},
          {"regular_elements", regular_elements(s).size()},
          {"inverse",
           inverse_structure(s).kind == InverseStructure::Kind::inverse},
          {"bound_tight", rep.tight}};
      return {make_case("example", expected, computed)};
    }

    inline std::vector<CaseResult>
    reference_monoid_cases(SuiteOptions const& o) {
      std::vector<CaseResult> out;
      auto [lo, hi] = range_or(o, 1, 3);
      for (std::size_t n = std::max<std::size_t>(lo, 1); n <= std::min<std::size_t>(hi, 4); ++n) {
        auto const s = full_transformation_monoid(n);
        std::size_t order = 1;
        for (std::size_t i = 0; i < n; ++i) {
          order *= n;
        }
        json expected{{"order", order}};
        json computed{{"order", s.order()}};
        for (auto rel : all_relations) {
          auto key      = "H_" + std::string(to_string(rel));
          expected[key] = n;
          computed[key] = height(s, rel);
        }
        out.push_back(make_case("T_" + std::to_string(n), expected, computed));
      }
      for (std::size_t n = std::max<std::size_t>(lo, 1); n <= std::min<std::size_t>(hi, 3); ++n) {
        auto const s   = symmetric_inverse_monoid(n);
        auto const inv = inverse_structure(s);
        json expected{{"kind", "inverse"},
                      {"idempotent_height", n + 1},
                      {"H_R", n + 1}};
        json computed{{"kind", std::string(to_string(inv.kind))},
                      {"idempotent_height", inv.idempotent_height},
                      {"H_R", height(s, Relation::R)}};
        out.push_back(make_case("I_" + std::to_string(n), expected, computed,
                                {{"order", s.order()}}));
      }
      return out;
    }

    inline CaseResult oracle_case(std::string id, InvariantReport const& r) {
      json info{{"semigroups", r.semigroups},
                {"handles", r.handles},
                {"first_violations", r.violations}};
      return make_case(std::move(id), {{"violations", 0}},
                       {{"violations", r.violation_count}}, info);
    }

    inline std::vector<CaseResult> small_order_cases(SuiteOptions const& o) {
      std::vector<CaseResult> out;
      for (std::size_t m = 1; m <= std::min(o.order, exhaustive_order_limit);
           ++m) {
        InvariantReport report;
        for_each_associative_table(m, [&](FiniteSemigroup const& s) {
          report.merge(check_semigroup(s));
        });
        out.push_back(oracle_case("order=" + std::to_string(m) + " exhaustive",
                                  report));
      }
      for (std::size_t m = exhaustive_order_limit + 1; m <= o.order; ++m) {
        if (m > 5) {
          throw OutOfRange("the small-order oracle samples orders up to 5");
        }
        std::mt19937_64 rng(o.seed + m);
        InvariantReport report;
        for (std::size_t i = 0; i < o.samples; ++i) {
          report.merge(check_semigroup(random_associative_table(m, rng)));
        }
        out.push_back(oracle_case("order=" + std::to_string(m) + " sampled",
                                  report));
      }
      return out;
    }

    inline std::vector<CaseResult> rewriting_cases(SuiteOptions const& o) {
      std::vector<CaseResult> out;
      auto [lo, hi] = range_or(o, 2, 8);
      for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n) {
        for (auto const& [label, rs] :
             {std::pair{std::string("bi-ideal-family"),
                        bi_ideal_family_presentation(n)},
              std::pair{std::string("left-ideal-cs-family"),
                        left_ideal_cs_family_presentation(n)}}) {
          auto const report = is_complete(rs);
          json expected{{"complete", true}, {"strategy_disagreements", 0}};
          json computed{{"complete", report.complete},
                        {"strategy_disagreements",
                         strategy_disagreements(rs, o.words, o.seed + n)}};
          out.push_back(make_case(label + " n=" + std::to_string(n), expected,
                                  computed,
                                  {{"critical_pairs", report.pairs_checked}}));
        }
      }
      RewritingSystem const bad(Alphabet({"a", "b"}),
                                {{Word{0, 1}, Word{0}}, {Word{1, 0}, Word{1}}},
                                false);
      auto const report = is_complete(bad);
      json expected{{"complete", false}, {"witness_source", "aba"},
                    {"witness_resolves", false}};
      json computed{{"complete", report.complete},
                    {"witness_source",
                     report.witness ? to_string(bad, report.witness->source)
                                    : std::string()},
                    {"witness_resolves",
                     report.witness
                         && reduce_word(bad, report.witness->left_result)
                                == reduce_word(bad,
                                               report.witness->right_result)}};
      out.push_back(make_case("ab->a, ba->b", expected, computed));
      return out;
    }
  }  // namespace detail

  inline std::vector<std::string> suite_names() {
    return {"bi-ideal-family", "left-ideal-cs-family", "brandt-theorem",
            "brandt-tower",    "null-extension",       "brandt-example",
            "reference-monoids", "small-order-oracle", "rewriting"};
  }

  class UnknownSuite : public Error {
   public:
    using Error::Error;
  };

  inline SuiteResult run_suite(std::string_view name, SuiteOptions const& o) {
    auto const start = std::chrono::steady_clock::now();
    SuiteResult result;
    result.suite = std::string(name);
    if (name == "bi-ideal-family") {
      result.cases = detail::bi_ideal_family_cases(o);
    } else if (name == "left-ideal-cs-family") {
      result.cases = detail::left_ideal_cs_family_cases(o);
    } else if (name == "brandt-theorem") {
      result.cases = detail::brandt_theorem_cases(o);
    } else if (name == "brandt-tower") {
      result.cases = detail::brandt_tower_cases(o);
    } else if (name == "null-extension") {
      result.cases = detail::null_extension_cases(o);
    } else if (name == "brandt-example") {
      result.cases = detail::brandt_example_cases(o);
    } else if (name == "reference-monoids") {
      result.cases = detail::reference_monoid_cases(o);
    } else if (name == "small-order-oracle") {
      result.cases = detail::small_order_cases(o);
    } else if (name == "rewriting") {
      result.cases = detail::rewriting_cases(o);
    } else {
      throw UnknownSuite("unknown suite '" + std::string(name) + "'");
    }
    result.elapsed_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    return result;
  }

}  // namespace rheight
