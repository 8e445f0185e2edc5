#pragma once

// Search for a bi-ideal whose R-height exceeds the completely-simple-kernel
// bound 3n - 2, where n is its chain parameter.  Finite semigroups always
// have completely simple kernels, so a positive gap would indicate a bug;
// the search only ever reports the best witness it has seen and never
// claims that none exists.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rheight/enumerate.hpp"
#include "rheight/green.hpp"
#include "rheight/ideals.hpp"

namespace rheight {

  struct SearchOptions {
    std::size_t   max_order = exhaustive_order_limit;
    std::size_t   budget    = 1000;  // number of tables examined
    std::uint64_t seed      = 1;
  };

  struct SearchWitness {
    FiniteSemigroup semigroup;
    ElementSet      bi_ideal;
    std::size_t     hr_semigroup;
    std::size_t     chain_param;
    std::size_t     hr_bi_ideal;
    long long       gap;  // hr_bi_ideal - (3 * chain_param - 2)
  };

  struct SearchReport {
    std::size_t                  tables_examined     = 0;
    std::size_t                  bi_ideals_examined  = 0;
    std::size_t                  positive_gaps_found = 0;
    std::optional<SearchWitness> best;
  };

  namespace detail {
    inline void search_table(SearchReport& report, FiniteSemigroup const& s) {
      ++report.tables_examined;
      std::optional<std::size_t> hr;
      for (auto const& m : nonempty_subsets(s.order())) {
        if (!satisfies_kind(s, m, SubsetKind::bi_ideal)) {
          continue;
        }
        ++report.bi_ideals_examined;
        SubsetHandle h(s, m, SubsetKind::bi_ideal);
        auto const   n   = chain_param(h);
        auto const   hb  = relative_height(h);
        auto const   gap = static_cast<long long>(hb)
                         - (3 * static_cast<long long>(n) - 2);
        if (gap > 0) {
          ++report.positive_gaps_found;
        }
        if (!report.best || gap > report.best->gap) {
          if (!hr) {
            hr = height(s, Relation::R);
          }
          report.best = SearchWitness{s, m, *hr, n, hb, gap};
        }
      }
    }
  }  // namespace detail

  // Exhaustive over orders 1..min(max_order, 3), then random tables of
  // orders 4..max_order in rotation, until `budget` tables have been seen.
  inline SearchReport search_open_problem(SearchOptions const& o) {
    SearchReport report;
    if (o.budget == 0) {
      return report;
    }
    struct BudgetSpent {};
    try {
      for (std::size_t m = 1; m <= std::min(o.max_order, exhaustive_order_limit);
           ++m) {
        for_each_associative_table(m, [&](FiniteSemigroup const& s) {
          if (report.tables_examined == o.budget) {
            throw BudgetSpent{};
          }
          detail::search_table(report, s);
        });
      }
    } catch (BudgetSpent const&) {
      return report;
    }
    if (o.max_order <= exhaustive_order_limit) {
      return report;
    }
    if (o.max_order > 8) {
      throw OutOfRange("random search is limited to order 8");
    }
    std::mt19937_64 rng(o.seed);
    std::size_t     m = exhaustive_order_limit + 1;
    while (report.tables_examined < o.budget) {
      detail::search_table(report, random_associative_table(m, rng));
      m = m == o.max_order ? exhaustive_order_limit + 1 : m + 1;
    }
    return report;
  }

  inline nlohmann::ordered_json to_json(SearchReport const& r) {
    nlohmann::ordered_json j;
    j["tables_examined"]     = r.tables_examined;
    j["bi_ideals_examined"]  = r.bi_ideals_examined;
    j["positive_gaps_found"] = r.positive_gaps_found;
    if (r.best) {
      auto const& w = *r.best;
      std::vector<std::string> members;
      for (auto x : w.bi_ideal) {
        members.push_back(w.semigroup.name(x));
      }
      j["best"] = {{"order", w.semigroup.order()},
                   {"names", w.semigroup.names()},
                   {"table", w.semigroup.flat_table()},
                   {"bi_ideal", members},
                   {"H_R(S)", w.hr_semigroup},
                   {"chain_param", w.chain_param},
                   {"H_R(B)", w.hr_bi_ideal},
                   {"gap", w.gap}};
    } else {
      j["best"] = nullptr;
    }
    return j;
  }

  inline std::string to_record(SearchReport const& r) {
    std::ostringstream out;
    out << "tables_examined: " << r.tables_examined << '\n'
        << "bi_ideals_examined: " << r.bi_ideals_examined << '\n'
        << "positive_gaps_found: " << r.positive_gaps_found << '\n';
    if (!r.best) {
      out << "best: none\n";
      return out.str();
    }
    auto const& w = *r.best;
    out << "best_order: " << w.semigroup.order() << '\n'
        << "best_bi_ideal:";
    for (auto x : w.bi_ideal) {
      out << ' ' << w.semigroup.name(x);
    }
    out << '\n'
        << "best_H_R(S): " << w.hr_semigroup << '\n'
        << "best_chain_param: " << w.chain_param << '\n'
        << "best_H_R(B): " << w.hr_bi_ideal << '\n'
        << "best_gap: " << w.gap << '\n'
        << "best_table:\n"
        << to_table_text(w.semigroup);
    return out.str();
  }

}  // namespace rheight
