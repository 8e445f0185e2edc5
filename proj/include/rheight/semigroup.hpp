#pragma once

// The finite semigroup value every analysis consumes: an indexed universe, a
// total multiplication table and display names.  Subsets of a semigroup are
// carried as SubsetHandle values tagged with the kind of substructure they
// are known to be.

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rheight/errors.hpp"

namespace rheight {

  // Sorted, duplicate-free list of element indices.
  using ElementSet = std::vector<index_type>;

  inline ElementSet make_set(std::vector<index_type> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  inline bool contains(ElementSet const& xs, index_type x) {
    return std::binary_search(xs.begin(), xs.end(), x);
  }

  inline bool is_subset(ElementSet const& xs, ElementSet const& ys) {
    return std::includes(ys.begin(), ys.end(), xs.begin(), xs.end());
  }

  inline ElementSet set_union(ElementSet const& xs, ElementSet const& ys) {
    ElementSet out;
    out.reserve(xs.size() + ys.size());
    std::set_union(
        xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(out));
    return out;
  }

  inline ElementSet set_difference(ElementSet const& xs, ElementSet const& ys) {
    ElementSet out;
    std::set_difference(
        xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(out));
    return out;
  }

  namespace detail {
    // Per-semigroup cache of principal ideals, filled lazily by green.hpp.
    // Slot 0 holds aS^1 membership, slot 1 S^1a, slot 2 S^1aS^1.
    struct GreenMemo {
      std::array<std::once_flag, 3>              once;
      std::array<std::vector<std::uint8_t>, 3> principal;
    };

    struct SemigroupData {
      std::size_t                order = 0;
      std::vector<index_type>    table;
      std::vector<std::string>   names;
      std::optional<index_type>  identity;
      mutable GreenMemo          memo;
    };
  }  // namespace detail

  // Order at or below which associativity is checked on every triple.
  inline constexpr std::size_t exhaustive_associativity_limit = 256;
  inline constexpr std::size_t sampled_associativity_triples  = 1'000'000;

  class FiniteSemigroup {
   public:
    // Rows of `table` list a*b for b = 0..m-1.
    static FiniteSemigroup from_table(
        std::vector<std::string>                    names,
        std::vector<std::vector<index_type>> const& table) {
      std::size_t const m = table.size();
      std::vector<index_type> flat;
      flat.reserve(m * m);
      for (std::size_t a = 0; a < m; ++a) {
        if (table[a].size() != m) {
          throw DimensionMismatch("row " + std::to_string(a) + " has "
                                  + std::to_string(table[a].size())
                                  + " entries, expected "
                                  + std::to_string(m));
        }
        flat.insert(flat.end(), table[a].begin(), table[a].end());
      }
      return from_flat(std::move(names), std::move(flat));
    }

    // Row-major m*m table.
    static FiniteSemigroup from_flat(std::vector<std::string> names,
                                     std::vector<index_type>  flat) {
      std::size_t const m = names.size();
      if (m == 0) {
        throw DimensionMismatch("a semigroup must have at least one element");
      }
      if (flat.size() != m * m) {
        throw DimensionMismatch("table has " + std::to_string(flat.size())
                                + " entries, expected "
                                + std::to_string(m * m));
      }
      for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i] >= m) {
          throw DimensionMismatch("table entry " + std::to_string(flat[i])
                                  + " at row " + std::to_string(i / m)
                                  + ", column " + std::to_string(i % m)
                                  + " is out of range");
        }
      }
      {
        std::unordered_set<std::string> seen;
        for (auto const& n : names) {
          if (n.empty()) {
            throw InvalidSubset("element names must be non-empty");
          }
          if (!seen.insert(n).second) {
            throw DimensionMismatch("duplicate element name '" + n + "'");
          }
        }
      }
      auto data   = std::make_shared<detail::SemigroupData>();
      data->order = m;
      data->table = std::move(flat);
      data->names = std::move(names);
      check_associative(*data);
      data->identity = find_identity(*data);
      FiniteSemigroup s;
      s.data_ = std::move(data);
      return s;
    }

    std::size_t order() const noexcept { return data_->order; }

    index_type product(index_type a, index_type b) const noexcept {
      return data_->table[a * data_->order + b];
    }

    std::span<index_type const> row(index_type a) const noexcept {
      return {data_->table.data() + a * data_->order, data_->order};
    }

    std::vector<index_type> const& flat_table() const noexcept {
      return data_->table;
    }

    std::string const& name(index_type a) const { return data_->names.at(a); }

    std::vector<std::string> const& names() const noexcept {
      return data_->names;
    }

    std::optional<index_type> identity() const noexcept {
      return data_->identity;
    }

    std::optional<index_type> find(std::string_view name) const {
      auto const& ns = data_->names;
      auto it = std::find(ns.begin(), ns.end(), name);
      if (it == ns.end()) {
        return std::nullopt;
      }
      return static_cast<index_type>(it - ns.begin());
    }

    ElementSet all() const {
      ElementSet out(order());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<index_type>(i);
      }
      return out;
    }

    // Same table and names.
    friend bool operator==(FiniteSemigroup const& x, FiniteSemigroup const& y) {
      return x.data_ == y.data_
             || (x.data_->table == y.data_->table
                 && x.data_->names == y.data_->names);
    }

    detail::GreenMemo& memo() const noexcept { return data_->memo; }

   private:
    FiniteSemigroup() = default;

    static void check_associative(detail::SemigroupData const& d) {
      std::size_t const m  = d.order;
      auto const        mul = [&](std::size_t a, std::size_t b) {
        return d.table[a * m + b];
      };
      if (m <= exhaustive_associativity_limit) {
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            std::size_t const ab = mul(a, b);
            for (std::size_t c = 0; c < m; ++c) {
              if (mul(ab, c) != mul(a, mul(b, c))) {
                throw NotAssociative(static_cast<index_type>(a),
                                     static_cast<index_type>(b),
                                     static_cast<index_type>(c));
              }
            }
          }
        }
        return;
      }
      std::mt19937_64                            rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      for (std::size_t i = 0; i < sampled_associativity_triples; ++i) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw NotAssociative(static_cast<index_type>(a),
                               static_cast<index_type>(b),
                               static_cast<index_type>(c));
        }
      }
    }

    static std::optional<index_type>
    find_identity(detail::SemigroupData const& d) {
      std::size_t const m = d.order;
      for (std::size_t e = 0; e < m; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < m && ok; ++x) {
          ok = d.table[e * m + x] == x && d.table[x * m + e] == x;
        }
        if (ok) {
          return static_cast<index_type>(e);
        }
      }
      return std::nullopt;
    }

    std::shared_ptr<detail::SemigroupData const> data_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Set products
  ////////////////////////////////////////////////////////////////////////

  // X*Y, or X*S^1*Y when through_identity is set.  The adjoined identity of
  // S^1 is never materialised; it simply contributes X*Y.
  inline ElementSet product_of_sets(FiniteSemigroup const& s,
                                    ElementSet const&      xs,
                                    ElementSet const&      ys,
                                    bool                   through_identity) {
    if (xs.empty() || ys.empty()) {
      throw EmptyOperand("set product with an empty operand");
    }
    std::vector<std::uint8_t> hit(s.order(), 0);
    for (auto x : xs) {
      for (auto y : ys) {
        hit[s.product(x, y)] = 1;
      }
    }
    if (through_identity) {
      // X*S*Y = union over x of (xS)*Y
      std::vector<std::uint8_t> xs_s(s.order(), 0);
      for (auto x : xs) {
        for (auto v : s.row(x)) {
          xs_s[v] = 1;
        }
      }
      for (index_type u = 0; u < s.order(); ++u) {
        if (xs_s[u]) {
          for (auto y : ys) {
            hit[s.product(u, y)] = 1;
          }
        }
      }
    }
    ElementSet out;
    for (index_type i = 0; i < s.order(); ++i) {
      if (hit[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  // X*S^1 as a set, i.e. X union X*S.
  inline ElementSet right_multiples(FiniteSemigroup const& s,
                                    ElementSet const&      xs) {
    return set_union(xs, product_of_sets(s, xs, s.all(), false));
  }

  // S^1*X
  inline ElementSet left_multiples(FiniteSemigroup const& s,
                                   ElementSet const&      xs) {
    return set_union(xs, product_of_sets(s, s.all(), xs, false));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets
  ////////////////////////////////////////////////////////////////////////

  enum class SubsetKind {
    bi_ideal,
    right_ideal,
    left_ideal,
    two_sided_ideal,
    subsemigroup
  };

  inline std::string_view to_string(SubsetKind k) noexcept {
    switch (k) {
      case SubsetKind::bi_ideal:
        return "bi_ideal";
      case SubsetKind::right_ideal:
        return "right_ideal";
      case SubsetKind::left_ideal:
        return "left_ideal";
      case SubsetKind::two_sided_ideal:
        return "two_sided_ideal";
      case SubsetKind::subsemigroup:
        return "subsemigroup";
    }
    return "unknown";
  }

  inline std::optional<SubsetKind> parse_subset_kind(std::string_view s) {
    if (s == "bi" || s == "bi_ideal" || s == "bi-ideal") {
      return SubsetKind::bi_ideal;
    }
    if (s == "right" || s == "right_ideal" || s == "right-ideal") {
      return SubsetKind::right_ideal;
    }
    if (s == "left" || s == "left_ideal" || s == "left-ideal") {
      return SubsetKind::left_ideal;
    }
    if (s == "two-sided" || s == "two_sided" || s == "two_sided_ideal"
        || s == "ideal") {
      return SubsetKind::two_sided_ideal;
    }
    if (s == "subsemigroup") {
      return SubsetKind::subsemigroup;
    }
    return std::nullopt;
  }

  // Witness pair (x, y) with x*y outside `members`, if any.
  inline std::optional<std::pair<index_type, index_type>>
  closure_witness(FiniteSemigroup const& s, ElementSet const& members) {
    std::vector<std::uint8_t> in(s.order(), 0);
    for (auto x : members) {
      in[x] = 1;
    }
    for (auto x : members) {
      for (auto y : members) {
        if (!in[s.product(x, y)]) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_closed(FiniteSemigroup const& s, ElementSet const& members) {
    return !closure_witness(s, members).has_value();
  }

  // Kind-specific closure: bi M*S^1*M, right M*S, left S*M, two-sided both,
  // subsemigroup M*M.
  inline bool satisfies_kind(FiniteSemigroup const& s,
                             ElementSet const&      members,
                             SubsetKind             kind) {
    if (members.empty()) {
      return false;
    }
    auto const all = s.all();
    switch (kind) {
      case SubsetKind::bi_ideal:
        return is_subset(product_of_sets(s, members, members, true), members);
      case SubsetKind::right_ideal:
        return is_subset(product_of_sets(s, members, all, false), members);
      case SubsetKind::left_ideal:
        return is_subset(product_of_sets(s, all, members, false), members);
      case SubsetKind::two_sided_ideal:
        return is_subset(product_of_sets(s, members, all, false), members)
               && is_subset(product_of_sets(s, all, members, false), members);
      case SubsetKind::subsemigroup:
        return is_closed(s, members);
    }
    return false;
  }

  class SubsetHandle {
   public:
    SubsetHandle(FiniteSemigroup parent, ElementSet members, SubsetKind kind)
        : parent_(std::move(parent)),
          members_(make_set(std::move(members))),
          kind_(kind) {
      if (members_.empty()) {
        throw InvalidSubset("a subset handle must be non-empty");
      }
      if (members_.back() >= parent_.order()) {
        throw InvalidSubset("subset member out of range");
      }
      if (auto w = closure_witness(parent_, members_)) {
        throw NotClosed(w->first, w->second);
      }
      if (!satisfies_kind(parent_, members_, kind_)) {
        throw InvalidSubset("subset is not a "
                            + std::string(to_string(kind_)));
      }
    }

    FiniteSemigroup const& parent() const noexcept { return parent_; }
    ElementSet const&      members() const noexcept { return members_; }
    SubsetKind             kind() const noexcept { return kind_; }
    std::size_t            size() const noexcept { return members_.size(); }

    bool contains(index_type x) const { return rheight::contains(members_, x); }

    std::vector<std::string> member_names() const {
      std::vector<std::string> out;
      for (auto x : members_) {
        out.push_back(parent_.name(x));
      }
      return out;
    }

   private:
    FiniteSemigroup parent_;
    ElementSet      members_;
    SubsetKind      kind_;
  };

  struct Restriction {
    FiniteSemigroup         semigroup;
    std::vector<index_type> to_parent;
  };

  // The subsemigroup on `members` as a standalone semigroup; element i of the
  // result is to_parent[i] in the parent.
  inline Restriction restrict_to_subsemigroup(FiniteSemigroup const& s,
                                              ElementSet const&      members) {
    if (members.empty()) {
      throw InvalidSubset("cannot restrict to an empty subset");
    }
    if (auto w = closure_witness(s, members)) {
      throw NotClosed(w->first, w->second);
    }
    std::vector<index_type> local(s.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = static_cast<index_type>(i);
    }
    std::size_t const        k = members.size();
    std::vector<index_type>  flat(k * k);
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(s.name(members[i]));
      for (std::size_t j = 0; j < k; ++j) {
        flat[i * k + j] = local[s.product(members[i], members[j])];
      }
    }
    return {FiniteSemigroup::from_flat(std::move(names), std::move(flat)),
            members};
  }

  inline Restriction restrict_to_subsemigroup(SubsetHandle const& h) {
    return restrict_to_subsemigroup(h.parent(), h.members());
  }

  // True iff `map` (indexed by elements of x) is a bijective homomorphism
  // x -> y.
  inline bool is_isomorphism(FiniteSemigroup const&         x,
                             FiniteSemigroup const&         y,
                             std::vector<index_type> const& map) {
    if (x.order() != y.order() || map.size() != x.order()) {
      return false;
    }
    std::vector<std::uint8_t> hit(y.order(), 0);
    for (auto v : map) {
      if (v >= y.order() || hit[v]) {
        return false;
      }
      hit[v] = 1;
    }
    for (index_type a = 0; a < x.order(); ++a) {
      for (index_type b = 0; b < x.order(); ++b) {
        if (map[x.product(a, b)] != y.product(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Table text format
  //
  //   order: m
  //   names: n0 n1 ... n(m-1)
  //   m rows of m whitespace-separated indices
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_table_text(FiniteSemigroup const& s) {
    std::ostringstream out;
    out << "order: " << s.order() << '\n' << "names:";
    for (auto const& n : s.names()) {
      if (std::any_of(n.begin(), n.end(), [](unsigned char c) {
            return std::isspace(c);
          })) {
        throw InvalidSubset("element name '" + n
                            + "' contains whitespace and cannot be exported");
      }
      out << ' ' << n;
    }
    out << '\n';
    for (index_type a = 0; a < s.order(); ++a) {
      for (index_type b = 0; b < s.order(); ++b) {
        out << (b == 0 ? "" : " ") << s.product(a, b);
      }
      out << '\n';
    }
    return out.str();
  }

  namespace detail {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    inline std::vector<Token> split_tokens(std::string_view line,
                                           std::size_t      offset = 0) {
      std::vector<Token> out;
      std::size_t        i = offset;
      while (i < line.size()) {
        while (i < line.size()
               && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::size_t const start = i;
        while (i < line.size()
               && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back({std::string(line.substr(start, i - start)),
                         start + 1});
        }
      }
      return out;
    }

    inline bool blank_or_comment(std::string_view line) {
      for (char c : line) {
        if (c == '#') {
          return true;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }

    inline std::string_view strip_comment(std::string_view line) {
      auto pos = line.find('#');
      return pos == std::string_view::npos ? line : line.substr(0, pos);
    }
  }  // namespace detail

  inline FiniteSemigroup parse_table_text(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
      std::size_t lineno = 0;
      std::size_t pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++lineno;
        auto line = text.substr(pos, end - pos);
        if (!detail::blank_or_comment(line)) {
          lines.emplace_back(lineno, std::string(detail::strip_comment(line)));
        }
        pos = end + 1;
      }
    }
    auto expect_key = [&](std::size_t idx, std::string_view key)
        -> std::pair<std::size_t, std::string_view> {
      if (idx >= lines.size()) {
        throw ParseError(lines.empty() ? 1 : lines.back().first + 1,
                         1,
                         "expected '" + std::string(key) + ":' declaration");
      }
      std::string_view line = lines[idx].second;
      auto             at   = line.find_first_not_of(" \t\r");
      if (at == std::string_view::npos
          || line.substr(at, key.size() + 1) != std::string(key) + ":") {
        throw ParseError(lines[idx].first,
                         at == std::string_view::npos ? 1 : at + 1,
                         "expected '" + std::string(key) + ":' declaration");
      }
      return {at + key.size() + 1, line};
    };

    auto [order_off, order_line] = expect_key(0, "order");
    auto order_tokens            = detail::split_tokens(order_line, order_off);
    if (order_tokens.size() != 1) {
      throw ParseError(lines[0].first,
                       order_off + 1,
                       "expected a single order value");
    }
    std::size_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoul(order_tokens[0].text, &used);
      if (used != order_tokens[0].text.size() || m == 0) {
        throw std::invalid_argument("order");
      }
    } catch (std::exception const&) {
      throw ParseError(lines[0].first,
                       order_tokens[0].column,
                       "order must be a positive integer");
    }

    auto [names_off, names_line] = expect_key(1, "names");
    auto name_tokens             = detail::split_tokens(names_line, names_off);
    if (name_tokens.size() != m) {
      throw ParseError(lines[1].first,
                       names_off + 1,
                       "expected " + std::to_string(m) + " names, found "
                           + std::to_string(name_tokens.size()));
    }
    std::vector<std::string> names;
    for (auto& t : name_tokens) {
      names.push_back(t.text);
    }
    if (lines.size() != m + 2) {
      std::size_t const where
          = lines.size() > m + 2 ? lines[m + 2].first : lines.back().first + 1;
      throw ParseError(where,
                       1,
                       "expected " + std::to_string(m) + " table rows, found "
                           + std::to_string(lines.size() - 2));
    }
    std::vector<index_type> flat;
    flat.reserve(m * m);
    for (std::size_t r = 0; r < m; ++r) {
      auto const& [lineno, line] = lines[r + 2];
      auto tokens                = detail::split_tokens(line);
      if (tokens.size() != m) {
        throw ParseError(lineno,
                         1,
                         "row " + std::to_string(r) + " has "
                             + std::to_string(tokens.size())
                             + " entries, expected " + std::to_string(m));
      }
      for (auto const& t : tokens) {
        std::size_t used = 0;
        std::size_t v    = 0;
        try {
          v = std::stoul(t.text, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != t.text.size() || v >= m) {
          throw ParseError(lineno,
                           t.column,
                           "entry '" + t.text + "' is not an index below "
                               + std::to_string(m));
        }
        flat.push_back(static_cast<index_type>(v));
      }
    }
    try {
      return FiniteSemigroup::from_flat(std::move(names), std::move(flat));
    } catch (DimensionMismatch const& e) {
      throw ParseError(lines[1].first, names_off + 1, e.what());
    }
  }

}  // namespace rheight
