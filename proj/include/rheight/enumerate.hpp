#pragma once

// Small multiplication tables: exhaustive enumeration of every associative
// table of a given (tiny) order, and random associative tables produced by
// randomised backtracking.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rheight/errors.hpp"
#include "rheight/semigroup.hpp"

namespace rheight {

  inline constexpr std::size_t exhaustive_order_limit = 3;

  namespace detail {
    inline std::vector<std::string> letter_names(std::size_t m) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < m; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
      }
      return names;
    }

    inline bool flat_associative(std::vector<index_type> const& t,
                                 std::size_t                    m) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          auto const ab = t[a * m + b];
          for (std::size_t c = 0; c < m; ++c) {
            if (t[ab * m + c] != t[a * m + t[b * m + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // Calls f(s) for every associative table on {0, ..., m-1}, found by
  // running through all m^(m*m) tables; returns the number found.
  template <typename F>
  std::size_t for_each_associative_table(std::size_t m, F&& f) {
    if (m < 1 || m > exhaustive_order_limit) {
      throw OutOfRange("exhaustive table enumeration is limited to orders 1.."
                       + std::to_string(exhaustive_order_limit));
    }
    std::size_t const       cells = m * m;
    std::vector<index_type> t(cells, 0);
    std::size_t             found = 0;
    while (true) {
      if (detail::flat_associative(t, m)) {
        ++found;
        f(FiniteSemigroup::from_flat(detail::letter_names(m), t));
      }
      std::size_t i = 0;
      while (i < cells && ++t[i] == m) {
        t[i++] = 0;
      }
      if (i == cells) {
        break;
      }
    }
    return found;
  }

  inline std::vector<FiniteSemigroup> associative_tables(std::size_t m) {
    std::vector<FiniteSemigroup> out;
    for_each_associative_table(m,
                               [&](FiniteSemigroup s) { out.push_back(s); });
    return out;
  }

  // A random associative table of order m: cells are filled in row-major
  // order with values tried in random order, backtracking whenever a fully
  // determined triple violates associativity.  The distribution is not
  // uniform over tables.
  template <typename Rng>
  FiniteSemigroup random_associative_table(std::size_t m, Rng& rng) {
    if (m < 1 || m > 8) {
      throw OutOfRange("random tables are generated for orders 1..8");
    }
    constexpr index_type    unset = static_cast<index_type>(-1);
    std::size_t const       cells = m * m;
    std::vector<index_type> t(cells, unset);
    std::vector<std::vector<index_type>> choices(cells);

    auto consistent = [&] {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          auto const ab = t[a * m + b];
          if (ab == unset) {
            continue;
          }
          for (std::size_t c = 0; c < m; ++c) {
            auto const bc = t[b * m + c];
            if (bc == unset) {
              continue;
            }
            auto const left  = t[ab * m + c];
            auto const right = t[a * m + bc];
            if (left != unset && right != unset && left != right) {
              return false;
            }
          }
        }
      }
      return true;
    };

    // Deep dead ends are common from order 6 on, so the search restarts
    // from scratch once a backtracking budget is spent.
    std::size_t const budget     = 64 * cells;
    std::size_t       backtracks = 0;
    std::size_t       cell       = 0;
    auto restart = [&] {
      std::fill(t.begin(), t.end(), unset);
      backtracks = 0;
      cell       = 0;
      choices[0].resize(m);
      std::iota(choices[0].begin(), choices[0].end(), 0);
      std::shuffle(choices[0].begin(), choices[0].end(), rng);
    };
    restart();
    while (cell < cells) {
      if (choices[cell].empty()) {
        t[cell] = unset;
        if (cell == 0) {
          throw InternalError("no associative table found");
        }
        --cell;
        if (++backtracks > budget) {
          restart();
        }
        continue;
      }
      t[cell] = choices[cell].back();
      choices[cell].pop_back();
      if (!consistent()) {
        continue;
      }
      ++cell;
      if (cell < cells) {
        choices[cell].resize(m);
        std::iota(choices[cell].begin(), choices[cell].end(), 0);
        std::shuffle(choices[cell].begin(), choices[cell].end(), rng);
      }
    }
    return FiniteSemigroup::from_flat(detail::letter_names(m), std::move(t));
  }

  // All non-empty subsets of {0, ..., m-1}, by increasing bitmask.
  inline std::vector<ElementSet> nonempty_subsets(std::size_t m) {
    if (m > 20) {
      throw OutOfRange("subset enumeration is limited to 20 elements");
    }
    std::vector<ElementSet> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      ElementSet xs;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) {
          xs.push_back(static_cast<index_type>(i));
        }
      }
      out.push_back(std::move(xs));
    }
    return out;
  }

}  // namespace rheight
