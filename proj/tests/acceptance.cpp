// Acceptance checks: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rheight/rheight.hpp"

using namespace rheight;

namespace {

  using clock_type = std::chrono::steady_clock;

  struct Check {
    std::ostringstream problems;
    std::size_t        failures = 0;

    template <typename T, typename U>
    void equal(std::string const& what, T const& got, U const& want) {
      if (!(got == want)) {
        if (++failures <= 5) {
          problems << "\n    " << what << ": got " << got << ", expected "
                   << want;
        }
      }
    }

    void that(std::string const& what, bool ok) {
      if (!ok && ++failures <= 5) {
        problems << "\n    " << what;
      }
    }
  };

  bool run(std::string const&                  id,
           std::string const&                  title,
           double                              limit_seconds,
           std::function<void(Check&)> const& body) {
    Check      c;
    auto const start = clock_type::now();
    try {
      body(c);
    } catch (std::exception const& e) {
      c.that(std::string("exception: ") + e.what(), false);
    }
    double const secs
        = std::chrono::duration<double>(clock_type::now() - start).count();
    if (secs >= limit_seconds) {
      c.that("took " + std::to_string(secs) + " s, limit "
                 + std::to_string(limit_seconds) + " s",
             false);
    }
    bool const ok = c.failures == 0;
    char       buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s / %.0f s", secs, limit_seconds);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " ("
              << buf << ")" << c.problems.str() << std::endl;
    return ok;
  }

  std::vector<std::string> sorted_names(FiniteSemigroup const& s,
                                        ElementSet const&      xs) {
    std::vector<std::string> out;
    for (auto x : xs) {
      out.push_back(s.name(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::string> all_but(FiniteSemigroup const&          s,
                                   std::vector<std::string> const& removed) {
    std::vector<std::string> out;
    for (auto const& n : s.names()) {
      if (std::find(removed.begin(), removed.end(), n) == removed.end()) {
        out.push_back(n);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string join(std::vector<std::string> const& xs) {
    std::string out = "{";
    for (auto const& x : xs) {
      out += (out.size() > 1 ? ", " : "") + x;
    }
    return out + "}";
  }

  // Brute force over all bijections.
  bool isomorphic(FiniteSemigroup const& a, FiniteSemigroup const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    std::vector<index_type> p(a.order());
    std::iota(p.begin(), p.end(), index_type{0});
    do {
      bool ok = true;
      for (index_type x = 0; x < a.order() && ok; ++x) {
        for (index_type y = 0; y < a.order() && ok; ++y) {
          ok = p[a.product(x, y)] == b.product(p[x], p[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  std::size_t subset_height(SubsetHandle const& h) {
    auto const t = oracle::table_of(h.parent());
    std::vector<std::uint32_t> b(h.members().begin(), h.members().end());
    return oracle::relative_height(t, b);
  }

  // All m^(m*m) tables, filtered by the oracle's associativity test.
  std::vector<std::vector<index_type>> every_associative_table(std::size_t m) {
    std::vector<std::vector<index_type>> out;
    std::size_t                          cells = m * m;
    std::size_t                          total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= m;
    }
    oracle::Table t;
    t.m = m;
    t.cells.assign(cells, 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < cells; ++i) {
        t.cells[i] = static_cast<std::uint32_t>(c % m);
        c /= m;
      }
      if (oracle::associative(t)) {
        out.emplace_back(t.cells.begin(), t.cells.end());
      }
    }
    return out;
  }

  void ac1(Check& c) {
    for (std::size_t n = 2; n <= 6; ++n) {
      auto const f  = bi_ideal_family(n);
      auto const& s = f.semigroup;
      auto const tag = "n=" + std::to_string(n) + " ";
      c.equal(tag + "order", s.order(), 12 * (n - 1) + 1);
      c.equal(tag + "H_R(S)", height(s, Relation::R), n);
      c.equal(tag + "H_R(B)", relative_height(f.distinguished), 3 * n - 2);
      c.equal(tag + "H_R(B) by brute force", subset_height(f.distinguished),
              3 * n - 2);
      c.equal(tag + "B",
              join(sorted_names(s, f.distinguished.members())),
              join(all_but(s, {"t", "zt", "ty", "yzt", "tyz"})));
    }
  }

  void ac2(Check& c) {
    for (std::size_t n = 2; n <= 8; ++n) {
      auto const  f   = left_ideal_cs_family(n);
      auto const& s   = f.semigroup;
      auto const  tag = "n=" + std::to_string(n) + " ";
      c.equal(tag + "order", s.order(), 6 * (n - 1) + 1);
      c.equal(tag + "H_R(S)", height(s, Relation::R), n);
      c.equal(tag + "H_R(A)", relative_height(f.distinguished), 2 * n - 1);
      c.equal(tag + "A", join(sorted_names(s, f.distinguished.members())),
              join(all_but(s, {"z", "yz"})));
      ClassPoset const j(s, Relation::J);
      c.equal(tag + "H_J(S)", j.height(), 2 * n - 1);
      c.that(tag + "J-classes do not form a chain", j.is_chain());
      c.equal(tag + "number of J-classes", j.classes().size(), 2 * n - 1);
      auto const t = oracle::table_of(s);
      c.equal(tag + "H_J(S) by brute force",
              oracle::height(t, oracle::Rel::J), 2 * n - 1);
    }
  }

  void ac3(Check& c) {
    std::vector<std::pair<std::string, FiniteSemigroup>> bases{
        {"trivial", trivial_semigroup()},
        {"left-zero(2)", left_zero_semigroup(2)},
        {"bi-ideal family n=2", bi_ideal_family(2).semigroup}};
    std::size_t const k = 2;
    for (auto const& [label, s] : bases) {
      auto const t = brandt_extension(s, k);
      c.equal(label + " H_R(B(S,2))", height(t, Relation::R),
              height(s, Relation::R) + 1);
      for (index_type a = 0; a < s.order(); ++a) {
        auto const a_ideal = generate(s, {a}, SubsetKind::right_ideal);
        auto const lifted  = generate(t, {brandt_index(s.order(), k, 0, a, 0)},
                                      SubsetKind::right_ideal);
        c.equal(label + " a=" + s.name(a) + " H_R((1,a,1)T^1)",
                relative_height(lifted), relative_height(a_ideal) + 2);
        c.equal(label + " a=" + s.name(a) + " brute force",
                subset_height(lifted), subset_height(a_ideal) + 2);
      }
    }
  }

  void ac4(Check& c) {
    std::size_t const orders[] = {1, 5, 21, 85};
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const f   = right_ideal_tower(n);
      auto const tag = "n=" + std::to_string(n) + " ";
      c.equal(tag + "order", f.semigroup.order(), orders[n - 1]);
      c.equal(tag + "H_R(S_n)", height(f.semigroup, Relation::R), n);
      c.equal(tag + "H_R(A_n)", relative_height(f.distinguished), 2 * n - 1);
      if (n <= 3) {
        c.equal(tag + "H_R(A_n) by brute force",
                subset_height(f.distinguished), 2 * n - 1);
      }
    }
    c.that("n=2 is not isomorphic to the 5-element Brandt semigroup",
           isomorphic(right_ideal_tower(2).semigroup, brandt_example()));
  }

  void ac5(Check& c) {
    auto const s = brandt_example();
    auto const a = brandt_example_right_ideal();
    c.equal("H_R(S)", height(s, Relation::R), 2);
    c.equal("H_R(A)", relative_height(a), 3);
    c.equal("H_R(A) by brute force", subset_height(a), 3);

    auto const      sub = restrict_to_subsemigroup(a);
    ClassPoset const ap(sub.semigroup, Relation::R);
    c.equal("A-poset classes", ap.classes().size(), 3);
    c.that("A-poset is not a chain", ap.is_chain());

    ClassPoset const sp(s, Relation::R);
    c.equal("S-poset maximal classes", sp.maximal_classes().size(), 2);
    auto const zero = *s.find("0");
    auto const bottom = sp.minimal_classes();
    c.equal("S-poset minimal classes", bottom.size(), 1);
    if (bottom.size() == 1) {
      c.equal("S-poset bottom", join(sorted_names(s, sp.classes()[bottom[0]])),
              "{0}");
      for (auto m : sp.maximal_classes()) {
        c.that("a maximal class is not above {0}",
               sp.less(sp.class_of(zero), m));
      }
    }
  }

  void ac6(Check& c) {
    auto const t   = left_ideal_cs_family(3).semigroup;
    auto const ext = null_extension(t);
    c.equal("H_R(N)", relative_height(ext.ideal), 2);
    c.equal("H_R(N) by brute force", subset_height(ext.ideal), 2);
    c.equal("chain_param(S, N)", chain_param(ext.ideal), 4);
    c.equal("H_R(T) + 1", height(t, Relation::R) + 1, 4);
    std::vector<std::uint32_t> n(ext.ideal.members().begin(),
                                 ext.ideal.members().end());
    c.equal("chain_param by brute force",
            oracle::chain_param(oracle::table_of(ext.semigroup), n, true), 4);
  }

  void ac7(Check& c) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const s = full_transformation_monoid(n);
      auto const t = oracle::table_of(s);
      for (auto rel : all_relations) {
        auto const tag
            = "T_" + std::to_string(n) + " H_" + std::string(to_string(rel));
        c.equal(tag, height(s, rel), n);
      }
      c.equal("T_" + std::to_string(n) + " H_R by brute force",
              oracle::height(t, oracle::Rel::R), n);
    }
    auto const i3  = symmetric_inverse_monoid(3);
    auto const inv = inverse_structure(i3);
    c.that("I_3 is not inverse", inv.kind == InverseStructure::Kind::inverse);
    c.equal("I_3 idempotent height", inv.idempotent_height, 4);
    c.equal("I_3 H_R", height(i3, Relation::R), 4);
  }

  void ac8(Check& c) {
    std::size_t const expected_counts[] = {1, 8, 113};
    InvariantReport   report;
    std::size_t       bi_checked = 0;
    for (std::size_t m = 1; m <= exhaustive_order_limit; ++m) {
      auto const tables = every_associative_table(m);
      c.equal("associative tables of order " + std::to_string(m),
              tables.size(), expected_counts[m - 1]);
      auto library = associative_tables(m);
      std::vector<std::vector<index_type>> lib_flat;
      for (auto const& s : library) {
        lib_flat.push_back(s.flat_table());
      }
      std::sort(lib_flat.begin(), lib_flat.end());
      auto sorted_tables = tables;
      std::sort(sorted_tables.begin(), sorted_tables.end());
      c.that("library enumeration differs at order " + std::to_string(m),
             lib_flat == sorted_tables);

      for (auto const& s : library) {
        report.merge(check_semigroup(s));
        auto const t = oracle::table_of(s);
        c.equal("H_R by brute force", height(s, Relation::R),
                oracle::height(t, oracle::Rel::R));
        c.equal("H_J by brute force", height(s, Relation::J),
                oracle::height(t, oracle::Rel::J));
        for (auto const& sub : nonempty_subsets(m)) {
          std::vector<std::uint32_t> b(sub.begin(), sub.end());
          if (!oracle::is_bi_ideal(t, b)) {
            continue;
          }
          ++bi_checked;
          SubsetHandle const h(s, sub, SubsetKind::bi_ideal);
          c.equal("bi-ideal relative height by brute force",
                  relative_height(h), oracle::relative_height(t, b));
        }
      }
    }
    c.equal("semigroups checked", report.semigroups, 122);
    c.that("no bi-ideals examined", bi_checked > 0);
    c.equal("invariant violations", report.violation_count, 0);
    for (auto const& v : report.violations) {
      c.that(v, false);
    }
  }

  void ac9(Check& c) {
    std::vector<std::pair<std::string, RewritingSystem>> systems;
    for (std::size_t n = 2; n <= 8; ++n) {
      systems.emplace_back("bi-ideal n=" + std::to_string(n),
                           bi_ideal_family_presentation(n));
      systems.emplace_back("left-ideal n=" + std::to_string(n),
                           left_ideal_cs_family_presentation(n));
    }
    std::uint64_t seed = default_seed;
    for (auto const& [label, rs] : systems) {
      c.that(label + " is not complete", is_complete(rs).complete);
      c.equal(label + " strategy disagreements",
              rheight::detail::strategy_disagreements(rs, 10'000, seed++), 0);
    }

    RewritingSystem const bad(
        Alphabet({"a", "b"}),
        {{Word{0, 1}, Word{0}}, {Word{1, 0}, Word{1}}}, false);
    auto const report = is_complete(bad);
    c.that("{ab->a, ba->b} reported complete", !report.complete);
    c.that("no witness", report.witness.has_value());
    if (report.witness) {
      auto const& w = *report.witness;
      // both results must be one-step reducts of the source
      std::vector<Word> reducts;
      auto const&       ls = w.source.letters();
      for (std::size_t pos = 0; pos < ls.size(); ++pos) {
        for (auto const& r : bad.rules()) {
          if (rheight::detail::matches_at(ls, pos, r.lhs.letters())) {
            reducts.push_back(rheight::detail::rewrite_at(ls, pos, r));
          }
        }
      }
      auto is_reduct = [&](Word const& x) {
        return std::find(reducts.begin(), reducts.end(), x) != reducts.end();
      };
      c.that("left result is not a one-step reduct",
             is_reduct(w.left_result));
      c.that("right result is not a one-step reduct",
             is_reduct(w.right_result));
      c.that("witness results have the same normal form",
             reduce_word(bad, w.left_result)
                 != reduce_word(bad, w.right_result));
    }
  }

}  // namespace

int main() {
  bool ok = true;
  ok &= run("AC1", "bi-ideal family n=2..6", 5, ac1);
  ok &= run("AC2", "left-ideal family n=2..8 with J-chain", 5, ac2);
  ok &= run("AC3", "Brandt extension adds 1 to H_R and 2 to principal right "
                   "ideals", 5, ac3);
  ok &= run("AC4", "right-ideal tower n=1..4", 5, ac4);
  ok &= run("AC5", "5-element Brandt example", 5, ac5);
  ok &= run("AC6", "null extension of the left-ideal family n=3", 5, ac6);
  ok &= run("AC7", "T_1..T_3 and I_3", 10, ac7);
  ok &= run("AC8", "every semigroup of order <= 3", 120, ac8);
  ok &= run("AC9", "rewriting completeness and strategy independence", 30,
            ac9);
  std::cout << (ok ? "all acceptance criteria pass" : "acceptance FAILED")
            << std::endl;
  return ok ? 0 : 1;
}
