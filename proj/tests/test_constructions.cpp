#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "rheight/rheight.hpp"

using namespace rheight;

namespace {

  index_type el(FiniteSemigroup const& s, std::string const& name) {
    auto i = s.find(name);
    REQUIRE(i);
    return *i;
  }

  std::string triple(std::size_t i, std::string const& s, std::size_t j) {
    return "(" + std::to_string(i) + "," + s + "," + std::to_string(j) + ")";
  }

  // Every product of brandt_extension(s, k) checked against the defining
  // rule, addressing elements by name only.
  void check_brandt_products(FiniteSemigroup const& s, std::size_t k) {
    auto const t = brandt_extension(s, k);
    REQUIRE(t.order() == k * k * s.order() + 1);
    auto const zero = el(t, "0");
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t p = 1; p <= k; ++p) {
          for (std::size_t q = 1; q <= k; ++q) {
            for (index_type a = 0; a < s.order(); ++a) {
              for (index_type b = 0; b < s.order(); ++b) {
                auto const x = el(t, triple(i, s.name(a), j));
                auto const y = el(t, triple(p, s.name(b), q));
                auto const expected
                    = j == p ? el(t, triple(i, s.name(s.product(a, b)), q))
                             : zero;
                REQUIRE(t.product(x, y) == expected);
              }
            }
            REQUIRE(t.product(zero, el(t, triple(i, s.name(0), j))) == zero);
          }
        }
      }
    }
  }

  // (i,s,j) <_T (k,t,l) iff i = k and s <_S t, using the oracle's preorder.
  bool brandt_order_law(FiniteSemigroup const& s) {
    auto const t   = brandt_extension(s, 2);
    auto const ot  = oracle::table_of(t);
    auto const os  = oracle::table_of(s);
    auto const all_t = oracle::everything(ot);
    auto const all_s = oracle::everything(os);
    auto strict = [](oracle::Table const& tab,
                     std::vector<std::uint32_t> const& all, std::uint32_t a,
                     std::uint32_t b) {
      return oracle::below(tab, all, a, b, oracle::Rel::R)
             && !oracle::below(tab, all, b, a, oracle::Rel::R);
    };
    for (std::size_t i = 1; i <= 2; ++i) {
      for (std::size_t j = 1; j <= 2; ++j) {
        for (std::size_t p = 1; p <= 2; ++p) {
          for (std::size_t q = 1; q <= 2; ++q) {
            for (index_type a = 0; a < s.order(); ++a) {
              for (index_type b = 0; b < s.order(); ++b) {
                auto x = *t.find(triple(i, s.name(a), j));
                auto y = *t.find(triple(p, s.name(b), q));
                if (strict(ot, all_t, x, y)
                    != (i == p && strict(os, all_s, a, b))) {
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

}  // namespace

TEST_CASE("bi-ideal family", "[constructions]") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto const inst = bi_ideal_family(n);
    CHECK(inst.n == n);
    CHECK(inst.semigroup.order() == 12 * (n - 1) + 1);
    CHECK(inst.expected.order == 12 * (n - 1) + 1);
    CHECK(height(inst.semigroup, Relation::R) == n);
    CHECK(relative_height(inst.distinguished) == 3 * n - 2);
    CHECK(chain_param(inst.distinguished) == n);
    CHECK(inst.distinguished.kind() == SubsetKind::bi_ideal);
    REQUIRE(inst.presentation);
    if (n <= 3) {
      auto const t = oracle::table_of(inst.semigroup);
      CHECK(oracle::height(t, oracle::Rel::R) == n);
      std::vector<std::uint32_t> b(inst.distinguished.members().begin(),
                                   inst.distinguished.members().end());
      CHECK(oracle::relative_height(t, b) == 3 * n - 2);
    }
  }
  CHECK_THROWS_AS(bi_ideal_family(1), OutOfRange);
}

TEST_CASE("left-ideal family", "[constructions]") {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto const inst = left_ideal_cs_family(n);
    CHECK(inst.semigroup.order() == 6 * (n - 1) + 1);
    CHECK(height(inst.semigroup, Relation::R) == n);
    CHECK(height(inst.semigroup, Relation::J) == 2 * n - 1);
    CHECK(class_poset(inst.semigroup, Relation::J).is_chain());
    CHECK(relative_height(inst.distinguished) == 2 * n - 1);
    CHECK(inst.distinguished.kind() == SubsetKind::left_ideal);
  }
  auto const two = left_ideal_cs_family(2);
  CHECK(two.semigroup.order() == 7);
  CHECK(relative_height(two.distinguished) == 3);
  auto const t = oracle::table_of(left_ideal_cs_family(3).semigroup);
  CHECK(oracle::height(t, oracle::Rel::J) == 5);
  CHECK(oracle::class_count(t, oracle::Rel::J) == 5);
}

TEST_CASE("Brandt extension", "[constructions]") {
  check_brandt_products(trivial_semigroup(), 2);
  check_brandt_products(left_zero_semigroup(2), 3);
  check_brandt_products(cyclic_group(3), 2);
  check_brandt_products(null_semigroup(2), 1);

  auto const t = brandt_extension(trivial_semigroup(), 2);
  CHECK(t.order() == 5);
  CHECK(t.names()
        == std::vector<std::string>{"(1,e,1)", "(1,e,2)", "(2,e,1)",
                                    "(2,e,2)", "0"});
  CHECK(brandt_extension(t, 2).order() == 21);
  CHECK(height(brandt_extension(left_zero_semigroup(2), 2), Relation::R)
        == height(left_zero_semigroup(2), Relation::R) + 1);
  CHECK_THROWS_AS(brandt_extension(t, 0), OutOfRange);
}

TEST_CASE("Brandt order law", "[constructions][property]") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for_each_associative_table(
        m, [](FiniteSemigroup const& s) { REQUIRE(brandt_order_law(s)); });
  }
  std::mt19937_64 rng(606);
  for (std::size_t m = 4; m <= 6; ++m) {
    for (int i = 0; i < 10; ++i) {
      REQUIRE(brandt_order_law(random_associative_table(m, rng)));
    }
  }
}

TEST_CASE("Brandt theorem on small tables", "[constructions][property]") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for_each_associative_table(m, [](FiniteSemigroup const& s) {
      auto const t = brandt_extension(s, 2);
      REQUIRE(height(t, Relation::R) == height(s, Relation::R) + 1);
      for (index_type a = 0; a < s.order(); ++a) {
        auto const ha = relative_height(generate(s, {a}, SubsetKind::right_ideal));
        auto const hb = relative_height(generate(
            t, {brandt_index(s.order(), 2, 0, a, 0)}, SubsetKind::right_ideal));
        REQUIRE(hb == ha + 2);
      }
    });
  }
}

TEST_CASE("right-ideal tower", "[constructions]") {
  std::size_t const orders[] = {1, 5, 21, 85};
  std::size_t       prev_s = 0, prev_a = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const inst = right_ideal_tower(n);
    CHECK(inst.semigroup.order() == orders[n - 1]);
    auto const hs = height(inst.semigroup, Relation::R);
    auto const ha = relative_height(inst.distinguished);
    CHECK(hs == n);
    CHECK(ha == 2 * n - 1);
    if (n > 1) {
      CHECK(hs == prev_s + 1);
      CHECK(ha == prev_a + 2);
    }
    prev_s = hs;
    prev_a = ha;
  }
  auto const one = right_ideal_tower(1);
  CHECK(one.distinguished.members() == one.semigroup.all());

  auto const two = right_ideal_tower(2);
  CHECK(rheight::detail::tower_matches_example(two.semigroup));
  CHECK(two.distinguished.member_names()
        == std::vector<std::string>{"(1,e,1)", "(1,e,2)", "0"});
  CHECK_THROWS_AS(right_ideal_tower(0), OutOfRange);
}

TEST_CASE("Brandt example", "[constructions]") {
  auto const s = brandt_example();
  CHECK(s.order() == 5);
  auto const oracle_table = oracle::table_of(s);
  CHECK(oracle::height(oracle_table, oracle::Rel::R) == 2);
  auto const a = brandt_example_right_ideal();
  CHECK(a.member_names() == std::vector<std::string>{"(1,1)", "(1,2)", "0"});
  // (i,j)(k,l) = (i,l) if j = k
  CHECK(s.product(el(s, "(1,2)"), el(s, "(2,1)")) == el(s, "(1,1)"));
  CHECK(s.product(el(s, "(1,2)"), el(s, "(1,2)")) == el(s, "0"));
}

TEST_CASE("null extension", "[constructions]") {
  SECTION("products") {
    auto const t   = left_zero_semigroup(2);
    auto const ext = null_extension(t);
    auto const& s  = ext.semigroup;
    CHECK(s.order() == 5);
    auto const zero = el(s, "0");
    for (index_type a = 0; a < 2; ++a) {
      for (index_type b = 0; b < 2; ++b) {
        auto const ab = t.name(t.product(a, b));
        auto const xa = el(s, "x_" + t.name(a));
        auto const xb = el(s, "x_" + t.name(b));
        CHECK(s.product(el(s, t.name(a)), el(s, t.name(b))) == el(s, ab));
        CHECK(s.product(el(s, t.name(a)), xb) == el(s, "x_" + ab));
        CHECK(s.product(xa, el(s, t.name(b))) == el(s, "x_" + ab));
        CHECK(s.product(xa, xb) == zero);
      }
    }
    CHECK(ext.ideal.kind() == SubsetKind::two_sided_ideal);
    CHECK(ext.ideal.member_names()
          == std::vector<std::string>{"x_a1", "x_a2", "0"});
  }
  SECTION("order in S mirrors order in T") {
    for (auto const& t :
         {left_zero_semigroup(2), left_ideal_cs_family(2).semigroup}) {
      auto const ext = null_extension(t);
      auto const& s  = ext.semigroup;
      for (index_type a = 0; a < t.order(); ++a) {
        auto const xa   = el(s, "x_" + t.name(a));
        auto const zero = static_cast<index_type>(s.order() - 1);
        CHECK(leq(s, zero, xa, Relation::R));
        CHECK_FALSE(leq(s, xa, zero, Relation::R));
        for (index_type b = 0; b < t.order(); ++b) {
          auto const xb = el(s, "x_" + t.name(b));
          bool const lt_t = leq(t, a, b, Relation::R) && !leq(t, b, a, Relation::R);
          bool const lt_s = leq(s, xa, xb, Relation::R) && !leq(s, xb, xa, Relation::R);
          CHECK(lt_t == lt_s);
        }
      }
    }
  }
  SECTION("trivial base") {
    auto const ext = null_extension(trivial_semigroup());
    CHECK(ext.semigroup.order() == 3);
    CHECK(ext.ideal.member_names() == std::vector<std::string>{"x_e", "0"});
    CHECK(chain_param(ext.ideal) == 2);
    CHECK(relative_height(ext.ideal) == 2);
  }
  SECTION("left-ideal family at n = 3") {
    auto const ext = null_extension(left_ideal_cs_family(3).semigroup);
    CHECK(ext.semigroup.order() == 27);
    CHECK(relative_height(ext.ideal) == 2);
    CHECK(chain_param(ext.ideal) == 4);
    auto const t = oracle::table_of(ext.semigroup);
    std::vector<std::uint32_t> n(ext.ideal.members().begin(),
                                 ext.ideal.members().end());
    CHECK(oracle::chain_param(t, n, true) == 4);
    CHECK(oracle::relative_height(t, n) == 2);
  }
  SECTION("zero names stay unique") {
    auto const ext = null_extension(null_semigroup(2));
    CHECK(ext.semigroup.names().back() == "0'");
  }
}

TEST_CASE("full transformation monoids", "[constructions]") {
  CHECK(full_transformation_monoid(1).order() == 1);
  CHECK(full_transformation_monoid(2).order() == 4);
  auto const t3 = full_transformation_monoid(3);
  CHECK(t3.order() == 27);
  CHECK(t3.identity() == el(t3, "123"));
  // x(fg) = (xf)g, composing the image strings directly
  for (index_type f = 0; f < t3.order(); ++f) {
    for (index_type g = 0; g < t3.order(); ++g) {
      std::string fg;
      for (char c : t3.name(f)) {
        fg += t3.name(g)[c - '1'];
      }
      REQUIRE(t3.name(t3.product(f, g)) == fg);
    }
  }
  for (auto r : all_relations) {
    CHECK(height(t3, r) == 3);
  }
  CHECK_THROWS_AS(full_transformation_monoid(5), OutOfRange);
  CHECK_THROWS_AS(full_transformation_monoid(0), OutOfRange);
}

TEST_CASE("symmetric inverse monoids", "[constructions]") {
  CHECK(symmetric_inverse_monoid(1).order() == 2);
  CHECK(symmetric_inverse_monoid(2).order() == 7);
  auto const i3 = symmetric_inverse_monoid(3);
  CHECK(i3.order() == 34);
  for (index_type f = 0; f < i3.order(); ++f) {
    for (index_type g = 0; g < i3.order(); ++g) {
      std::string fg;
      for (char c : i3.name(f)) {
        fg += c == '-' ? '-' : i3.name(g)[c - '1'];
      }
      REQUIRE(i3.name(i3.product(f, g)) == fg);
    }
  }
  for (auto r : all_relations) {
    CHECK(height(symmetric_inverse_monoid(1), r) == 2);
  }
  CHECK_THROWS_AS(symmetric_inverse_monoid(4), OutOfRange);
}

TEST_CASE("infinite constructions are stubs", "[constructions]") {
  CHECK_THROWS_AS(baer_levi_semigroup(), UnsupportedInfinite);
  CHECK_THROWS_AS(left_ideal_extension_by_right_simple(), UnsupportedInfinite);
  CHECK_THROWS_AS(bicyclic_monoid(), UnsupportedInfinite);
}

TEST_CASE("family instances export and re-import", "[constructions]") {
  for (auto const& inst : {bi_ideal_family(3), left_ideal_cs_family(3),
                           right_ideal_tower(3)}) {
    auto const text = to_table_text(inst.semigroup);
    CHECK(parse_table_text(text) == inst.semigroup);
    if (inst.presentation) {
      auto const rs = parse_presentation_text(
          to_presentation_text(*inst.presentation));
      CHECK(semigroup_from_presentation(rs) == inst.semigroup);
    }
  }
}
