#pragma once

// Concrete semigroups: the two presentation families attaining the bi-ideal
// and left-ideal height bounds, Brandt extensions and the right-ideal tower
// built from them, the null extension of a semigroup, and a handful of
// reference semigroups (transformation monoids, symmetric inverse monoids,
// left-zero and null semigroups, the 5-element Brandt semigroup).

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rheight/errors.hpp"
#include "rheight/green.hpp"
#include "rheight/ideals.hpp"
#include "rheight/rewriting.hpp"
#include "rheight/semigroup.hpp"

namespace rheight {

  struct ExpectedValues {
    std::size_t order;
    std::size_t hr_semigroup;
    std::size_t relative_height;
    std::size_t chain_param;
  };

  struct FamilyInstance {
    std::string                    family;
    std::size_t                    n;
    FiniteSemigroup                semigroup;
    SubsetHandle                   distinguished;
    ExpectedValues                 expected;
    std::optional<RewritingSystem> presentation;
  };

  namespace detail {
    inline Word power(Letter a, std::size_t k) {
      return Word(std::vector<Letter>(k, a));
    }

    inline Word word_of(std::initializer_list<Word> parts) {
      Word out;
      for (auto const& p : parts) {
        out = concat(out, p);
      }
      return out;
    }

    // Adds primes until `name` is not in `taken`.
    inline std::string fresh_name(std::string name,
                                  std::set<std::string> const& taken) {
      while (taken.count(name)) {
        name += '\'';
      }
      return name;
    }

    inline index_type element_of(PresentedSemigroup const& p,
                                 RewritingSystem const&    rs,
                                 Word const&               w) {
      auto nf = reduce_word(rs, w);
      auto it = std::find(p.normal_forms.begin(), p.normal_forms.end(), nf);
      if (it == p.normal_forms.end()) {
        throw InternalError("word has no normal form among the elements");
      }
      return static_cast<index_type>(it - p.normal_forms.begin());
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Presentation families
  ////////////////////////////////////////////////////////////////////////

  // <x, y, z, t | xyzt = x, yzty = y, ztyz = z, tyzt = t, w = 0> with w
  // ranging over x^n, y^2, z^2, t^2, xz, xt, yx, yt, zx, zy, tz, tx^(n-1).
  inline RewritingSystem bi_ideal_family_presentation(std::size_t n) {
    if (n < 2) {
      throw OutOfRange("the bi-ideal family needs n >= 2");
    }
    Letter const x = 0, y = 1, z = 2, t = 3;
    auto const   zero = Word::zero();
    std::vector<Rule> rules{
        {Word{x, y, z, t}, Word{x}},
        {Word{y, z, t, y}, Word{y}},
        {Word{z, t, y, z}, Word{z}},
        {Word{t, y, z, t}, Word{t}},
        {detail::power(x, n), zero},
        {Word{y, y}, zero},
        {Word{z, z}, zero},
        {Word{t, t}, zero},
        {Word{x, z}, zero},
        {Word{x, t}, zero},
        {Word{y, x}, zero},
        {Word{y, t}, zero},
        {Word{z, x}, zero},
        {Word{z, y}, zero},
        {Word{t, z}, zero},
        {concat(Word{t}, detail::power(x, n - 1)), zero},
    };
    return RewritingSystem(Alphabet({"x", "y", "z", "t"}), std::move(rules),
                           true);
  }

  // <x, y, z | xyz = x, yzy = y, zyz = z, w = 0> with w ranging over x^n,
  // y^2, z^2, xz, yx, zx^(n-1).
  inline RewritingSystem left_ideal_cs_family_presentation(std::size_t n) {
    if (n < 2) {
      throw OutOfRange("the left-ideal family needs n >= 2");
    }
    Letter const x = 0, y = 1, z = 2;
    auto const   zero = Word::zero();
    std::vector<Rule> rules{
        {Word{x, y, z}, Word{x}},
        {Word{y, z, y}, Word{y}},
        {Word{z, y, z}, Word{z}},
        {detail::power(x, n), zero},
        {Word{y, y}, zero},
        {Word{z, z}, zero},
        {Word{x, z}, zero},
        {Word{y, x}, zero},
        {concat(Word{z}, detail::power(x, n - 1)), zero},
    };
    return RewritingSystem(Alphabet({"x", "y", "z"}), std::move(rules), true);
  }

  // B is the bi-ideal generated by {x, y, z, tx}.
  inline FamilyInstance bi_ideal_family(std::size_t n) {
    auto       rs = bi_ideal_family_presentation(n);
    auto       p  = present(rs);
    ElementSet gens;
    for (auto const& w : {Word{0}, Word{1}, Word{2}, Word{3, 0}}) {
      gens.push_back(detail::element_of(p, rs, w));
    }
    auto handle = generate(p.semigroup, gens, SubsetKind::bi_ideal);
    return {"bi-ideal-family",
            n,
            p.semigroup,
            std::move(handle),
            {12 * (n - 1) + 1, n, 3 * n - 2, n},
            std::move(rs)};
  }

  // A is the left ideal generated by {x, y}.
  inline FamilyInstance left_ideal_cs_family(std::size_t n) {
    auto       rs = left_ideal_cs_family_presentation(n);
    auto       p  = present(rs);
    ElementSet gens{detail::element_of(p, rs, Word{0}),
                    detail::element_of(p, rs, Word{1})};
    auto handle = generate(p.semigroup, gens, SubsetKind::left_ideal);
    return {"left-ideal-cs-family",
            n,
            p.semigroup,
            std::move(handle),
            {6 * (n - 1) + 1, n, 2 * n - 1, n},
            std::move(rs)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Reference semigroups
  ////////////////////////////////////////////////////////////////////////

  inline FiniteSemigroup trivial_semigroup() {
    return FiniteSemigroup::from_flat({"e"}, {0});
  }

  // xy = x
  inline FiniteSemigroup left_zero_semigroup(std::size_t m) {
    if (m == 0) {
      throw OutOfRange("order must be positive");
    }
    std::vector<std::string> names;
    std::vector<index_type>  flat(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      names.push_back("a" + std::to_string(a + 1));
      for (std::size_t b = 0; b < m; ++b) {
        flat[a * m + b] = static_cast<index_type>(a);
      }
    }
    return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
  }

  // All products equal the zero, element 0.
  inline FiniteSemigroup null_semigroup(std::size_t m) {
    if (m == 0) {
      throw OutOfRange("order must be positive");
    }
    std::vector<std::string> names{"0"};
    for (std::size_t a = 1; a < m; ++a) {
      names.push_back("n" + std::to_string(a));
    }
    return FiniteSemigroup::from_flat(std::move(names),
                                      std::vector<index_type>(m * m, 0));
  }

  inline FiniteSemigroup cyclic_group(std::size_t m) {
    if (m == 0) {
      throw OutOfRange("order must be positive");
    }
    std::vector<std::string> names;
    std::vector<index_type>  flat(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      names.push_back("g" + std::to_string(a));
      for (std::size_t b = 0; b < m; ++b) {
        flat[a * m + b] = static_cast<index_type>((a + b) % m);
      }
    }
    return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
  }

  // {(1,1), (1,2), (2,1), (2,2), 0} with (i,j)(k,l) = (i,l) if j = k and 0
  // otherwise.
  inline FiniteSemigroup brandt_example() {
    std::vector<std::string> names{"(1,1)", "(1,2)", "(2,1)", "(2,2)", "0"};
    std::vector<index_type>  flat(25, 4);
    for (index_type i = 0; i < 2; ++i) {
      for (index_type j = 0; j < 2; ++j) {
        for (index_type k = 0; k < 2; ++k) {
          for (index_type l = 0; l < 2; ++l) {
            if (j == k) {
              flat[(i * 2 + j) * 5 + (k * 2 + l)] = i * 2 + l;
            }
          }
        }
      }
    }
    return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
  }

  // The right ideal (1,1)S^1 of brandt_example().
  inline SubsetHandle brandt_example_right_ideal() {
    auto s = brandt_example();
    return generate(s, {0}, SubsetKind::right_ideal);
  }

  // All self-maps of {1..n} under composition, acting on the right: x(fg) =
  // (xf)g.  Names list the images, e.g. "312".
  inline FiniteSemigroup full_transformation_monoid(std::size_t n) {
    if (n < 1 || n > 4) {
      throw OutOfRange("full transformation monoids are built for 1 <= n <= 4");
    }
    std::size_t m = 1;
    for (std::size_t i = 0; i < n; ++i) {
      m *= n;
    }
    auto image = [n](std::size_t code, std::size_t x) {
      for (std::size_t i = 0; i < x; ++i) {
        code /= n;
      }
      return code % n;
    };
    std::vector<std::string> names;
    std::vector<index_type>  flat(m * m);
    for (std::size_t f = 0; f < m; ++f) {
      std::string name;
      for (std::size_t x = 0; x < n; ++x) {
        name += static_cast<char>('1' + image(f, x));
      }
      names.push_back(std::move(name));
      for (std::size_t g = 0; g < m; ++g) {
        std::size_t code = 0, place = 1;
        for (std::size_t x = 0; x < n; ++x) {
          code += image(g, image(f, x)) * place;
          place *= n;
        }
        flat[f * m + g] = static_cast<index_type>(code);
      }
    }
    return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
  }

  // All partial bijections of {1..n}, acting on the right.  Names list the
  // images with '-' for undefined points.
  inline FiniteSemigroup symmetric_inverse_monoid(std::size_t n) {
    if (n < 1 || n > 3) {
      throw OutOfRange("symmetric inverse monoids are built for 1 <= n <= 3");
    }
    constexpr int                 undefined = -1;
    std::vector<std::vector<int>> maps;
    std::vector<int>              f(n, undefined);
    std::function<void(std::size_t)> fill = [&](std::size_t x) {
      if (x == n) {
        maps.push_back(f);
        return;
      }
      for (int v = undefined; v < static_cast<int>(n); ++v) {
        if (v != undefined
            && std::find(f.begin(), f.begin() + x, v) != f.begin() + x) {
          continue;
        }
        f[x] = v;
        fill(x + 1);
      }
      f[x] = undefined;
    };
    fill(0);
    std::size_t const        m = maps.size();
    std::vector<std::string> names;
    for (auto const& g : maps) {
      std::string name;
      for (int v : g) {
        name += v == undefined ? '-' : static_cast<char>('1' + v);
      }
      names.push_back(std::move(name));
    }
    std::vector<index_type> flat(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<int> h(n, undefined);
        for (std::size_t x = 0; x < n; ++x) {
          if (maps[a][x] != undefined) {
            h[x] = maps[b][maps[a][x]];
          }
        }
        auto it        = std::find(maps.begin(), maps.end(), h);
        flat[a * m + b] = static_cast<index_type>(it - maps.begin());
      }
    }
    return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
  }

  ////////////////////////////////////////////////////////////////////////
  // Brandt extensions and the right-ideal tower
  ////////////////////////////////////////////////////////////////////////

  // Index of (i, s, j) in brandt_extension(s, k), with i, j 0-based.
  inline index_type brandt_index(std::size_t order,
                                 std::size_t k,
                                 std::size_t i,
                                 index_type  s,
                                 std::size_t j) {
    return static_cast<index_type>((i * order + s) * k + j);
  }

  // (I x S x I) u {0}, |I| = k, with (i,s,j)(k,t,l) = (i,st,l) if j = k and 0
  // otherwise.  The zero is the last element.
  inline FiniteSemigroup brandt_extension(FiniteSemigroup const& s,
                                          std::size_t            k) {
    if (k < 1) {
      throw OutOfRange("a Brandt extension needs a non-empty index set");
    }
    std::size_t const m     = s.order();
    std::size_t const order = k * k * m + 1;
    auto const        zero  = static_cast<index_type>(order - 1);
    std::vector<std::string> names(order);
    for (std::size_t i = 0; i < k; ++i) {
      for (index_type a = 0; a < m; ++a) {
        for (std::size_t j = 0; j < k; ++j) {
          names[brandt_index(m, k, i, a, j)] = "(" + std::to_string(i + 1)
                                               + "," + s.name(a) + ","
                                               + std::to_string(j + 1) + ")";
        }
      }
    }
    names[zero] = "0";
    std::vector<index_type> flat(order * order, zero);
    for (std::size_t i = 0; i < k; ++i) {
      for (index_type a = 0; a < m; ++a) {
        for (std::size_t j = 0; j < k; ++j) {
          auto const x = brandt_index(m, k, i, a, j);
          for (index_type b = 0; b < m; ++b) {
            for (std::size_t l = 0; l < k; ++l) {
              flat[x * order + brandt_index(m, k, j, b, l)]
                  = brandt_index(m, k, i, s.product(a, b), l);
            }
          }
        }
      }
    }
    return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
  }

  // S_1 trivial; S_(m+1) = B(S_m, {1, 2}) with a_(m+1) = (1, a_m, 1); the
  // distinguished handle is the principal right ideal a_n S_n^1.
  inline FamilyInstance right_ideal_tower(std::size_t n) {
    if (n < 1) {
      throw OutOfRange("the tower starts at n = 1");
    }
    auto        s     = trivial_semigroup();
    index_type  a     = 0;
    std::size_t order = 1;
    for (std::size_t level = 1; level < n; ++level) {
      a     = brandt_index(s.order(), 2, 0, a, 0);
      s     = brandt_extension(s, 2);
      order = 4 * order + 1;
    }
    auto handle = generate(s, {a}, SubsetKind::right_ideal);
    return {"brandt-tower", n, s, std::move(handle),
            {order, n, 2 * n - 1, n}, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Null extension
  ////////////////////////////////////////////////////////////////////////

  struct NullExtension {
    FiniteSemigroup semigroup;
    SubsetHandle    ideal;  // N = {x_a : a in T} u {0}
  };

  // S = T u {x_a : a in T} u {0} with a x_b = x_a b = x_(ab), N null, and 0
  // absorbing.  Element order: T, then x_a in the order of T, then 0.
  inline NullExtension null_extension(FiniteSemigroup const& t) {
    std::size_t const     m     = t.order();
    std::size_t const     order = 2 * m + 1;
    auto const            zero  = static_cast<index_type>(2 * m);
    std::set<std::string> taken(t.names().begin(), t.names().end());
    std::vector<std::string> names(t.names());
    for (index_type a = 0; a < m; ++a) {
      auto name = detail::fresh_name("x_" + t.name(a), taken);
      taken.insert(name);
      names.push_back(std::move(name));
    }
    names.push_back(detail::fresh_name("0", taken));
    std::vector<index_type> flat(order * order, zero);
    for (index_type a = 0; a < m; ++a) {
      for (index_type b = 0; b < m; ++b) {
        auto const ab                     = t.product(a, b);
        flat[a * order + b]               = ab;
        flat[a * order + (m + b)]         = static_cast<index_type>(m + ab);
        flat[(m + a) * order + b]         = static_cast<index_type>(m + ab);
      }
    }
    auto       s = FiniteSemigroup::from_flat(std::move(names), std::move(flat));
    ElementSet n_members;
    for (index_type a = 0; a < m; ++a) {
      n_members.push_back(static_cast<index_type>(m + a));
    }
    n_members.push_back(zero);
    SubsetHandle ideal(s, std::move(n_members), SubsetKind::two_sided_ideal);
    return {std::move(s), std::move(ideal)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Infinite constructions
  ////////////////////////////////////////////////////////////////////////

  [[noreturn]] inline void baer_levi_semigroup() {
    throw UnsupportedInfinite("Baer-Levi semigroups are infinite and cannot be "
                              "represented by a multiplication table");
  }

  [[noreturn]] inline void left_ideal_extension_by_right_simple() {
    throw UnsupportedInfinite("the left-ideal construction requires a right "
                              "simple semigroup without idempotents, which "
                              "is necessarily infinite");
  }

  [[noreturn]] inline void bicyclic_monoid() {
    throw UnsupportedInfinite("the bicyclic monoid is infinite");
  }

}  // namespace rheight
