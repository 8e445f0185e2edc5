#pragma once

// Structural checks run over whole corpora of small semigroups: the height
// bounds for every bi-ideal and ideal, the kernel and minimal-right-ideal
// lemmas, the stable-semigroup inequality between R- and J-heights, and the
// equalities that hold under local-right-identity or regularity hypotheses.

#include <string>
#include <vector>

#include "rheight/enumerate.hpp"
#include "rheight/green.hpp"
#include "rheight/ideals.hpp"
#include "rheight/semigroup.hpp"

namespace rheight {

  struct InvariantReport {
    std::size_t              semigroups = 0;
    std::size_t              handles    = 0;
    std::size_t              violation_count = 0;
    std::vector<std::string> violations;  // first few, for diagnostics

    void fail(FiniteSemigroup const& s, std::string const& what) {
      ++violation_count;
      if (violations.size() < 20) {
        violations.push_back(what + " in\n" + to_table_text(s));
      }
    }

    void merge(InvariantReport const& other) {
      semigroups += other.semigroups;
      handles += other.handles;
      violation_count += other.violation_count;
      for (auto const& v : other.violations) {
        if (violations.size() < 20) {
          violations.push_back(v);
        }
      }
    }
  };

  namespace detail {
    inline constexpr std::array<SubsetKind, 4> ideal_kinds{
        SubsetKind::bi_ideal, SubsetKind::right_ideal, SubsetKind::left_ideal,
        SubsetKind::two_sided_ideal};

    inline void check_handle(InvariantReport&       report,
                             FiniteSemigroup const& s,
                             SubsetHandle const&    h,
                             KernelInfo const&      kernel_info,
                             ElementSet const&      reg) {
      auto const& ker = kernel_info.members;
      ++report.handles;
      auto const kind  = std::string(to_string(h.kind()));
      auto const bound = bound_report(h, kernel_info.is_completely_simple);
      if (!bound.pass || !bound.sanity_pass) {
        report.fail(s, kind + " violates its height bound");
      }
      auto const hb = bound.relative_height;
      if (h.kind() == SubsetKind::right_ideal
          && chain_param(h, ChainMode::intersect)
                 != chain_param(h, ChainMode::contained)) {
        report.fail(s, "right ideal: intersecting and contained R-classes "
                       "give different chain parameters");
      }
      auto const& m = h.members();
      bool all_lri  = std::all_of(m.begin(), m.end(), [&](index_type a) {
        return has_local_right_identity(s, m, a);
      });
      if (h.kind() == SubsetKind::bi_ideal && all_lri
          && hb != chain_param(h, ChainMode::intersect)) {
        report.fail(s, "bi-ideal with local right identities has relative "
                       "height different from its chain parameter");
      }
      if (h.kind() == SubsetKind::left_ideal && is_subset(m, reg)
          && hb != chain_param(h, ChainMode::intersect)) {
        report.fail(s, "regular left ideal has relative height different "
                       "from its chain parameter");
      }
      if (h.kind() == SubsetKind::bi_ideal) {
        auto const b = restrict_to_subsemigroup(h).semigroup;
        for (index_type i = 0; i < m.size(); ++i) {
          for (index_type j = 0; j < m.size(); ++j) {
            bool const in_b = leq(b, i, j, Relation::R);
            bool const in_s = leq(s, m[i], m[j], Relation::R);
            bool const lri  = has_local_right_identity(s, m, m[i])
                             && has_local_right_identity(s, m, m[j]);
            bool const both_kernel = contains(ker, m[i]) && contains(ker, m[j]);
            if ((lri || both_kernel) && in_b != in_s) {
              report.fail(s, "order inside a bi-ideal differs from the "
                             "parent order on elements with local right "
                             "identities");
            }
          }
        }
      }
      auto chain = chain_into_kernel(h, hb, ker);
      if (chain.size() != hb || !contains(ker, chain.front())) {
        report.fail(s, "no chain of full length starting in the kernel");
      }
    }
  }  // namespace detail

  // Runs every check on `s`; subsets are enumerated exhaustively, so keep the
  // order small (at most 8 or so).
  inline InvariantReport check_semigroup(FiniteSemigroup const& s) {
    InvariantReport report;
    report.semigroups = 1;

    KernelInfo ker;
    try {
      ker = kernel(s);
    } catch (InternalError const& e) {
      report.fail(s, std::string("kernel: ") + e.what());
      return report;
    }
    if (!ker.is_completely_simple) {
      report.fail(s, "kernel is not completely simple");
    }

    auto const r_poset = class_poset(s, Relation::R);
    auto const l_poset = class_poset(s, Relation::L);
    auto const h_poset = class_poset(s, Relation::H);
    auto const hr      = r_poset.height();
    auto const hj      = height(s, Relation::J);

    ElementSet minimal_union;
    for (auto const& r : ker.minimal_right_ideals) {
      minimal_union = set_union(minimal_union, r);
    }
    if ((hr == 1) != (minimal_union.size() == s.order())) {
      report.fail(s, "R-height 1 does not match being a union of minimal "
                     "right ideals");
    }
    if (hr > hj) {
      report.fail(s, "R-height exceeds J-height");
    }
    for (auto const& cls : h_poset.classes()) {
      auto const r = r_poset.class_of(cls.front());
      auto const l = l_poset.class_of(cls.front());
      for (auto a : cls) {
        if (r_poset.class_of(a) != r || l_poset.class_of(a) != l) {
          report.fail(s, "H-class not contained in an R-class and an "
                         "L-class");
        }
      }
    }
    auto const inv = inverse_structure(s);
    if (inv.kind == InverseStructure::Kind::inverse
        && inv.idempotent_height != hr) {
      report.fail(s, "inverse semigroup with R-height different from the "
                     "height of its idempotents");
    }

    auto const reg     = regular_elements(s);
    auto const subsets = nonempty_subsets(s.order());
    std::array<std::vector<ElementSet>, 4> of_kind;
    for (auto const& m : subsets) {
      for (std::size_t k = 0; k < detail::ideal_kinds.size(); ++k) {
        auto const kind = detail::ideal_kinds[k];
        if (!satisfies_kind(s, m, kind)) {
          continue;
        }
        of_kind[k].push_back(m);
        detail::check_handle(report, s, SubsetHandle(s, m, kind), ker, reg);
      }
    }
    // generated substructures are the least ones containing the generators
    for (auto const& x : subsets) {
      for (std::size_t k = 0; k < detail::ideal_kinds.size(); ++k) {
        auto const g = generate(s, x, detail::ideal_kinds[k]).members();
        if (!is_subset(x, g)) {
          report.fail(s, "generated substructure misses a generator");
        }
        for (auto const& m : of_kind[k]) {
          if (is_subset(x, m) && !is_subset(g, m)) {
            report.fail(s, "generated substructure is not the least one");
          }
        }
      }
    }
    return report;
  }

}  // namespace rheight
