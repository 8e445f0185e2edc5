#pragma once

// Bi-ideals and one- and two-sided ideals: generation, recognition, R-height
// measured inside the substructure, the chain parameter that bounds it, and
// a per-kind report checking the height bounds.
//
// Green's order inside a substructure B is always computed on B as a
// semigroup in its own right; it generally differs from the restriction of
// the order of the parent.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rheight/errors.hpp"
#include "rheight/green.hpp"
#include "rheight/semigroup.hpp"

namespace rheight {

  // The smallest substructure of `kind` containing `gens`:
  //   right      X u XS
  //   left       X u SX
  //   two-sided  X u XS u SX u SXS
  //   bi         X u XS^1X
  //   subsemigroup  closure of X under products
  inline SubsetHandle generate(FiniteSemigroup const& s,
                               ElementSet             gens,
                               SubsetKind             kind) {
    gens = make_set(std::move(gens));
    if (gens.empty()) {
      throw EmptyOperand("empty generating set");
    }
    if (gens.back() >= s.order()) {
      throw InvalidSubset("generator out of range");
    }
    ElementSet members;
    switch (kind) {
      case SubsetKind::right_ideal:
        members = right_multiples(s, gens);
        break;
      case SubsetKind::left_ideal:
        members = left_multiples(s, gens);
        break;
      case SubsetKind::two_sided_ideal:
        members = left_multiples(s, right_multiples(s, gens));
        break;
      case SubsetKind::bi_ideal:
        members = set_union(gens, product_of_sets(s, gens, gens, true));
        break;
      case SubsetKind::subsemigroup: {
        members = gens;
        while (true) {
          auto next = set_union(members,
                                product_of_sets(s, members, members, false));
          if (next.size() == members.size()) {
            break;
          }
          members = std::move(next);
        }
        break;
      }
    }
    return SubsetHandle(s, std::move(members), kind);
  }

  inline bool is_kind(FiniteSemigroup const& s,
                      ElementSet const&      members,
                      SubsetKind             kind) {
    return satisfies_kind(s, members, kind);
  }

  inline std::size_t relative_height(SubsetHandle const& h) {
    return height(restrict_to_subsemigroup(h).semigroup, Relation::R);
  }

  // Which R-classes of the parent count towards the chain parameter.
  enum class ChainMode { intersect, contained };

  inline ChainMode default_chain_mode(SubsetKind kind) noexcept {
    return kind == SubsetKind::right_ideal
                   || kind == SubsetKind::two_sided_ideal
               ? ChainMode::contained
               : ChainMode::intersect;
  }

  // Longest chain of R-classes of the parent that intersect (or lie inside)
  // the handle's members.
  inline std::size_t chain_param(SubsetHandle const& h, ChainMode mode) {
    auto                     poset = class_poset(h.parent(), Relation::R);
    std::vector<std::size_t> selected;
    for (std::size_t c = 0; c < poset.size(); ++c) {
      auto const& cls = poset.classes()[c];
      bool const  take
          = mode == ChainMode::contained
                ? is_subset(cls, h.members())
                : std::any_of(cls.begin(), cls.end(),
                              [&](index_type a) { return h.contains(a); });
      if (take) {
        selected.push_back(c);
      }
    }
    return detail::longest_chain(selected.size(),
                                 [&](auto x, auto y) {
                                   return poset.less(selected[x], selected[y]);
                                 })
        .first;
  }

  inline std::size_t chain_param(SubsetHandle const& h) {
    return chain_param(h, default_chain_mode(h.kind()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Bound reports
  ////////////////////////////////////////////////////////////////////////

  struct BoundReport {
    SubsetKind  kind = SubsetKind::bi_ideal;
    std::string theorem_id;
    std::size_t relative_height = 0;
    std::size_t chain_param     = 0;
    std::size_t bound           = 0;
    bool        cs_kernel       = false;
    bool        pass            = false;
    bool        tight           = false;
    // The bound that holds without a completely simple kernel (3n-1 for
    // bi-ideals, 2n for left ideals).  Finite kernels are always completely
    // simple, so at finite scale this line is a sanity check only.
    std::optional<std::size_t> sanity_bound;
    bool                       sanity_pass = true;

    friend bool operator==(BoundReport const&, BoundReport const&) = default;
  };

  // `cs_kernel` states whether the parent's kernel is completely simple.
  inline BoundReport bound_report(SubsetHandle const& h, bool cs_kernel) {
    BoundReport r;
    r.kind            = h.kind();
    r.relative_height = relative_height(h);
    r.chain_param     = chain_param(h);
    r.cs_kernel       = cs_kernel;
    std::size_t const n = r.chain_param;
    switch (h.kind()) {
      case SubsetKind::bi_ideal:
        r.sanity_bound = 3 * n - 1;
        r.bound        = r.cs_kernel ? 3 * n - 2 : 3 * n - 1;
        r.theorem_id   = r.cs_kernel ? "bi-ideal-cs-kernel" : "bi-ideal";
        break;
      case SubsetKind::right_ideal:
        r.bound      = 2 * n - 1;
        r.theorem_id = "right-ideal";
        break;
      case SubsetKind::left_ideal:
        r.sanity_bound = 2 * n;
        r.bound        = r.cs_kernel ? 2 * n - 1 : 2 * n;
        r.theorem_id   = r.cs_kernel ? "left-ideal-cs-kernel" : "left-ideal";
        break;
      case SubsetKind::two_sided_ideal:
        r.bound      = n;
        r.theorem_id = "two-sided-ideal";
        break;
      case SubsetKind::subsemigroup:
        throw PreconditionViolated("no height bound applies to an arbitrary "
                                   "subsemigroup");
    }
    r.pass        = r.relative_height <= r.bound;
    r.tight       = r.relative_height == r.bound;
    r.sanity_pass = !r.sanity_bound || r.relative_height <= *r.sanity_bound;
    return r;
  }

  inline BoundReport bound_report(SubsetHandle const& h) {
    return bound_report(h, kernel(h.parent()).is_completely_simple);
  }

  inline nlohmann::ordered_json to_json(BoundReport const& r) {
    nlohmann::ordered_json j;
    j["kind"]            = std::string(to_string(r.kind));
    j["theorem_id"]      = r.theorem_id;
    j["relative_height"] = r.relative_height;
    j["chain_param"]     = r.chain_param;
    j["bound"]           = r.bound;
    j["cs_kernel"]       = r.cs_kernel;
    j["pass"]            = r.pass;
    j["tight"]           = r.tight;
    if (r.sanity_bound) {
      j["sanity_bound"] = *r.sanity_bound;
      j["sanity_pass"]  = r.sanity_pass;
    }
    return j;
  }

  inline BoundReport bound_report_from_json(nlohmann::json const& j) {
    BoundReport r;
    auto kind = parse_subset_kind(j.at("kind").get<std::string>());
    if (!kind) {
      throw Error("unknown subset kind in bound report");
    }
    r.kind            = *kind;
    r.theorem_id      = j.at("theorem_id").get<std::string>();
    r.relative_height = j.at("relative_height").get<std::size_t>();
    r.chain_param     = j.at("chain_param").get<std::size_t>();
    r.bound           = j.at("bound").get<std::size_t>();
    r.cs_kernel       = j.at("cs_kernel").get<bool>();
    r.pass            = j.at("pass").get<bool>();
    r.tight           = j.at("tight").get<bool>();
    if (j.contains("sanity_bound")) {
      r.sanity_bound = j.at("sanity_bound").get<std::size_t>();
      r.sanity_pass  = j.at("sanity_pass").get<bool>();
    }
    return r;
  }

  // `key: value` lines.
  inline std::string to_record(BoundReport const& r) {
    std::ostringstream out;
    out << "kind: " << to_string(r.kind) << '\n'
        << "theorem_id: " << r.theorem_id << '\n'
        << "relative_height: " << r.relative_height << '\n'
        << "chain_param: " << r.chain_param << '\n'
        << "bound: " << r.bound << '\n'
        << "cs_kernel: " << (r.cs_kernel ? "true" : "false") << '\n'
        << "pass: " << (r.pass ? "true" : "false") << '\n'
        << "tight: " << (r.tight ? "true" : "false") << '\n';
    if (r.sanity_bound) {
      out << "sanity_bound: " << *r.sanity_bound << " (sanity only)\n"
          << "sanity_pass: " << (r.sanity_pass ? "true" : "false") << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Chains starting in the kernel
  ////////////////////////////////////////////////////////////////////////

  // The lexicographically smallest chain b1 <_B b2 <_B ... <_B bk (strict in
  // B's own R-order) with b1 in the kernel of the parent.  Indices are those
  // of the parent.
  inline std::vector<index_type> chain_into_kernel(SubsetHandle const& h,
                                                   std::size_t         k,
                                                   ElementSet const&   ker) {
    if (k == 0) {
      throw PreconditionViolated("chain length must be positive");
    }
    auto const restricted = restrict_to_subsemigroup(h);
    auto const& b         = restricted.semigroup;
    if (height(b, Relation::R) < k) {
      throw PreconditionViolated("relative height is below the requested "
                                 "chain length");
    }
    std::size_t n = b.order();
    auto lt = [&](std::size_t x, std::size_t y) {
      return leq(b, static_cast<index_type>(x), static_cast<index_type>(y),
                 Relation::R)
             && !leq(b, static_cast<index_type>(y),
                     static_cast<index_type>(x), Relation::R);
    };
    // up[x]: longest strict chain starting at x and going up
    auto const up
        = detail::longest_chain(n, [&](auto x, auto y) { return lt(y, x); })
              .second;
    std::vector<index_type> chain;
    std::optional<std::size_t> prev;
    for (std::size_t remaining = k; remaining > 0; --remaining) {
      std::optional<std::size_t> next;
      for (std::size_t y = 0; y < n && !next; ++y) {
        if (up[y] < remaining) {
          continue;
        }
        if (prev ? lt(*prev, y) : contains(ker, restricted.to_parent[y])) {
          next = y;
        }
      }
      if (!next) {
        throw InternalError("no chain into the kernel of the requested "
                            "length");
      }
      chain.push_back(restricted.to_parent[*next]);
      prev = next;
    }
    return chain;
  }

  inline std::vector<index_type> chain_into_kernel(SubsetHandle const& h,
                                                   std::size_t         k) {
    return chain_into_kernel(h, k, kernel(h.parent()).members);
  }

}  // namespace rheight
