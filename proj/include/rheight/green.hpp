#pragma once

// Green's preorders R, L, J and H on a finite semigroup, the induced class
// posets and their heights, the kernel, regular elements, local right
// identities and the idempotent semilattice of inverse semigroups.
//
// Heights count classes: a chain's length is its cardinality, so a semigroup
// with a single class has height 1.

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rheight/errors.hpp"
#include "rheight/semigroup.hpp"

namespace rheight {

  enum class Relation { R, L, J, H };

  inline constexpr std::array<Relation, 4> all_relations{
      Relation::R, Relation::L, Relation::J, Relation::H};

  inline std::string_view to_string(Relation r) noexcept {
    switch (r) {
      case Relation::R:
        return "R";
      case Relation::L:
        return "L";
      case Relation::J:
        return "J";
      case Relation::H:
        return "H";
    }
    return "?";
  }

  inline std::optional<Relation> parse_relation(std::string_view s) {
    if (s == "R" || s == "r") {
      return Relation::R;
    }
    if (s == "L" || s == "l") {
      return Relation::L;
    }
    if (s == "J" || s == "j") {
      return Relation::J;
    }
    if (s == "H" || s == "h") {
      return Relation::H;
    }
    return std::nullopt;
  }

  namespace detail {
    // mask[b * m + a] != 0 iff a lies in the principal ideal of b
    // (bS^1, S^1b or S^1bS^1 for slots 0, 1, 2).
    inline std::vector<std::uint8_t> const&
    principal_ideals(FiniteSemigroup const& s, std::size_t slot) {
      auto& memo = s.memo();
      std::call_once(memo.once[slot], [&] {
        std::size_t const         m = s.order();
        std::vector<std::uint8_t> mask(m * m, 0);
        for (index_type b = 0; b < m; ++b) {
          auto* row = mask.data() + b * m;
          row[b]    = 1;
          if (slot == 0) {
            for (auto v : s.row(b)) {
              row[v] = 1;
            }
          } else {
            for (index_type x = 0; x < m; ++x) {
              row[s.product(x, b)] = 1;
            }
            if (slot == 2) {
              // S^1bS^1 is the union of cS^1 over c in S^1b
              std::vector<index_type> left;
              for (index_type c = 0; c < m; ++c) {
                if (row[c]) {
                  left.push_back(c);
                }
              }
              for (auto c : left) {
                for (auto v : s.row(c)) {
                  row[v] = 1;
                }
              }
            }
          }
        }
        memo.principal[slot] = std::move(mask);
      });
      return memo.principal[slot];
    }

    // Longest chain (in nodes) of a strict partial order on n nodes given by
    // `less(x, y)`; also returns, for each node, the longest chain ending at
    // it from below.
    template <typename Less>
    std::pair<std::size_t, std::vector<std::size_t>>
    longest_chain(std::size_t n, Less&& less) {
      // Sorting by down-set size gives a linear extension.
      std::vector<std::size_t> below(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (less(y, x)) {
            ++below[x];
          }
        }
      }
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](auto x, auto y) { return below[x] < below[y]; });
      std::vector<std::size_t> depth(n, 1);
      std::size_t              best = n == 0 ? 0 : 1;
      for (std::size_t i = 0; i < n; ++i) {
        auto const x = order[i];
        for (std::size_t j = 0; j < i; ++j) {
          auto const y = order[j];
          if (less(y, x)) {
            depth[x] = std::max(depth[x], depth[y] + 1);
          }
        }
        best = std::max(best, depth[x]);
      }
      return {best, std::move(depth)};
    }
  }  // namespace detail

  // a <= b in the preorder of `rel`, with the S^1 convention: a <=_R b iff
  // a = b or a in bS.
  inline bool leq(FiniteSemigroup const& s,
                  index_type             a,
                  index_type             b,
                  Relation               rel) {
    std::size_t const m = s.order();
    switch (rel) {
      case Relation::R:
        return detail::principal_ideals(s, 0)[b * m + a] != 0;
      case Relation::L:
        return detail::principal_ideals(s, 1)[b * m + a] != 0;
      case Relation::J:
        return detail::principal_ideals(s, 2)[b * m + a] != 0;
      case Relation::H:
        return detail::principal_ideals(s, 0)[b * m + a] != 0
               && detail::principal_ideals(s, 1)[b * m + a] != 0;
    }
    return false;
  }

  inline bool related(FiniteSemigroup const& s,
                      index_type             a,
                      index_type             b,
                      Relation               rel) {
    return leq(s, a, b, rel) && leq(s, b, a, rel);
  }

  class ClassPoset {
   public:
    ClassPoset(FiniteSemigroup s, Relation rel)
        : semigroup_(std::move(s)), relation_(rel) {
      std::size_t const m = semigroup_.order();
      class_of_.assign(m, 0);
      for (index_type a = 0; a < m; ++a) {
        bool placed = false;
        for (std::size_t c = 0; c < classes_.size(); ++c) {
          if (related(semigroup_, a, classes_[c].front(), rel)) {
            classes_[c].push_back(a);
            class_of_[a] = c;
            placed       = true;
            break;
          }
        }
        if (!placed) {
          class_of_[a] = classes_.size();
          classes_.push_back({a});
        }
      }
      std::size_t const c = classes_.size();
      less_.assign(c * c, 0);
      for (std::size_t x = 0; x < c; ++x) {
        for (std::size_t y = 0; y < c; ++y) {
          less_[x * c + y]
              = x != y
                && leq(semigroup_, classes_[x].front(), classes_[y].front(),
                       rel);
        }
      }
      for (std::size_t lo = 0; lo < c; ++lo) {
        for (std::size_t hi = 0; hi < c; ++hi) {
          if (!less(lo, hi)) {
            continue;
          }
          bool covered = true;
          for (std::size_t z = 0; z < c && covered; ++z) {
            covered = !(less(lo, z) && less(z, hi));
          }
          if (covered) {
            covers_.emplace_back(hi, lo);
          }
        }
      }
      std::sort(covers_.begin(), covers_.end());
      height_ = detail::longest_chain(
                    c, [this](auto x, auto y) { return less(x, y); })
                    .first;
    }

    FiniteSemigroup const& semigroup() const noexcept { return semigroup_; }
    Relation               relation() const noexcept { return relation_; }

    // Classes ordered by smallest member index; members sorted.
    std::vector<ElementSet> const& classes() const noexcept {
      return classes_;
    }

    std::size_t size() const noexcept { return classes_.size(); }

    std::size_t class_of(index_type a) const { return class_of_.at(a); }

    // Strict order between classes.
    bool less(std::size_t x, std::size_t y) const noexcept {
      return less_[x * classes_.size() + y] != 0;
    }

    // Covering pairs (upper, lower), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> const&
    covers() const noexcept {
      return covers_;
    }

    std::size_t height() const noexcept { return height_; }

    std::vector<std::size_t> maximal_classes() const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < size(); ++x) {
        bool top = true;
        for (std::size_t y = 0; y < size() && top; ++y) {
          top = !less(x, y);
        }
        if (top) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::vector<std::size_t> minimal_classes() const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < size(); ++x) {
        bool bottom = true;
        for (std::size_t y = 0; y < size() && bottom; ++y) {
          bottom = !less(y, x);
        }
        if (bottom) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool is_chain() const noexcept { return height_ == classes_.size(); }

   private:
    FiniteSemigroup                                  semigroup_;
    Relation                                         relation_;
    std::vector<ElementSet>                          classes_;
    std::vector<std::size_t>                         class_of_;
    std::vector<std::uint8_t>                        less_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::size_t                                      height_ = 0;
  };

  inline ClassPoset class_poset(FiniteSemigroup const& s, Relation rel) {
    return ClassPoset(s, rel);
  }

  inline std::size_t height(FiniteSemigroup const& s, Relation rel) {
    return class_poset(s, rel).height();
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel
  ////////////////////////////////////////////////////////////////////////

  struct KernelInfo {
    ElementSet              members;
    bool                    is_completely_simple = false;
    std::vector<ElementSet> minimal_right_ideals;
    std::vector<ElementSet> minimal_left_ideals;
  };

  namespace detail {
    inline std::vector<ElementSet> minimal_one_sided(FiniteSemigroup const& s,
                                                     Relation rel,
                                                     SubsetKind kind) {
      auto                    poset = class_poset(s, rel);
      std::vector<ElementSet> out;
      for (auto c : poset.minimal_classes()) {
        if (!satisfies_kind(s, poset.classes()[c], kind)) {
          throw InternalError("minimal " + std::string(to_string(rel))
                              + "-class is not a one-sided ideal");
        }
        out.push_back(poset.classes()[c]);
      }
      return out;
    }
  }  // namespace detail

  inline KernelInfo kernel(FiniteSemigroup const& s) {
    auto j       = class_poset(s, Relation::J);
    auto minimal = j.minimal_classes();
    if (minimal.size() != 1) {
      throw InternalError("finite semigroup with "
                          + std::to_string(minimal.size())
                          + " minimal J-classes");
    }
    KernelInfo info;
    info.members = j.classes()[minimal.front()];
    if (!satisfies_kind(s, info.members, SubsetKind::two_sided_ideal)) {
      throw InternalError("minimal J-class is not an ideal");
    }
    info.minimal_right_ideals
        = detail::minimal_one_sided(s, Relation::R, SubsetKind::right_ideal);
    info.minimal_left_ideals
        = detail::minimal_one_sided(s, Relation::L, SubsetKind::left_ideal);
    ElementSet right_union;
    for (auto const& r : info.minimal_right_ideals) {
      right_union = set_union(right_union, r);
    }
    if (right_union != info.members) {
      throw InternalError("kernel differs from the union of the minimal right "
                          "ideals");
    }
    // A simple semigroup is completely simple iff it is a union of groups,
    // i.e. every a is H-related to a^2.
    auto k      = restrict_to_subsemigroup(s, info.members).semigroup;
    bool simple = class_poset(k, Relation::J).size() == 1;
    bool groups = true;
    for (index_type a = 0; a < k.order() && groups; ++a) {
      groups = related(k, a, k.product(a, a), Relation::H);
    }
    info.is_completely_simple = simple && groups
                                && !info.minimal_right_ideals.empty()
                                && !info.minimal_left_ideals.empty();
    return info;
  }

  ////////////////////////////////////////////////////////////////////////
  // Regularity and local right identities
  ////////////////////////////////////////////////////////////////////////

  inline bool is_regular_element(FiniteSemigroup const& s, index_type a) {
    for (index_type b = 0; b < s.order(); ++b) {
      if (s.product(s.product(a, b), a) == a) {
        return true;
      }
    }
    return false;
  }

  inline ElementSet regular_elements(FiniteSemigroup const& s) {
    ElementSet out;
    for (index_type a = 0; a < s.order(); ++a) {
      if (is_regular_element(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  // a in a*T, where T is the given member set.
  inline bool has_local_right_identity(FiniteSemigroup const& s,
                                       ElementSet const&      within,
                                       index_type             a) {
    return std::any_of(within.begin(), within.end(),
                       [&](index_type b) { return s.product(a, b) == a; });
  }

  inline bool has_local_right_identity(FiniteSemigroup const& s,
                                       index_type             a) {
    for (index_type b = 0; b < s.order(); ++b) {
      if (s.product(a, b) == a) {
        return true;
      }
    }
    return false;
  }

  inline bool has_local_right_identity(SubsetHandle const& h, index_type a) {
    return has_local_right_identity(h.parent(), h.members(), a);
  }

  inline ElementSet idempotents(FiniteSemigroup const& s) {
    ElementSet out;
    for (index_type e = 0; e < s.order(); ++e) {
      if (s.product(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  struct InverseStructure {
    enum class Kind { not_regular, regular_not_inverse, inverse };
    Kind kind = Kind::not_regular;
    // Longest chain of idempotents under e <= f iff ef = fe = e; only set
    // for inverse semigroups.
    std::size_t idempotent_height = 0;
  };

  inline std::string_view to_string(InverseStructure::Kind k) noexcept {
    switch (k) {
      case InverseStructure::Kind::not_regular:
        return "not_regular";
      case InverseStructure::Kind::regular_not_inverse:
        return "regular_not_inverse";
      case InverseStructure::Kind::inverse:
        return "inverse";
    }
    return "?";
  }

  inline InverseStructure inverse_structure(FiniteSemigroup const& s) {
    InverseStructure result;
    if (regular_elements(s).size() != s.order()) {
      return result;
    }
    auto const m = s.order();
    for (index_type a = 0; a < m; ++a) {
      std::size_t inverses = 0;
      for (index_type b = 0; b < m; ++b) {
        if (s.product(s.product(a, b), a) == a
            && s.product(s.product(b, a), b) == b) {
          ++inverses;
        }
      }
      if (inverses != 1) {
        result.kind = InverseStructure::Kind::regular_not_inverse;
        return result;
      }
    }
    result.kind  = InverseStructure::Kind::inverse;
    auto const e = idempotents(s);
    result.idempotent_height
        = detail::longest_chain(e.size(), [&](auto x, auto y) {
            return x != y && s.product(e[x], e[y]) == e[x]
                   && s.product(e[y], e[x]) == e[x];
          }).first;
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT export
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string dot_escape(std::string_view s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace detail

  inline std::string class_label(ClassPoset const& p, std::size_t c) {
    std::string label = "{";
    bool        first = true;
    for (auto a : p.classes()[c]) {
      label += (first ? "" : ", ") + p.semigroup().name(a);
      first = false;
    }
    return label + "}";
  }

  // One node per class, one edge per covering pair drawn from the larger
  // class down to the smaller.
  inline std::string to_dot(ClassPoset const& p) {
    std::ostringstream out;
    out << "digraph " << to_string(p.relation()) << "_classes {\n"
        << "  rankdir=TB;\n"
        << "  node [shape=box];\n";
    for (std::size_t c = 0; c < p.size(); ++c) {
      out << "  c" << c << " [label=\"" << detail::dot_escape(class_label(p, c))
          << "\"];\n";
    }
    for (auto [hi, lo] : p.covers()) {
      out << "  c" << hi << " -> c" << lo << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace rheight
