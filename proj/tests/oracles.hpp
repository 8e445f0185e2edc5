#pragma once

// Brute-force reference computations used as test oracles.  They work on a
// raw multiplication table and share no code with the library's algorithms:
// Green's preorders are decided by searching for a multiplier, heights are
// longest strict chains of elements found by memoised depth-first search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

  struct Table {
    std::size_t                m = 0;
    std::vector<std::uint32_t> cells;  // row-major

    std::uint32_t at(std::size_t a, std::size_t b) const {
      return cells[a * m + b];
    }
  };

  template <typename S>
  Table table_of(S const& s) {
    Table t;
    t.m = s.order();
    for (auto v : s.flat_table()) {
      t.cells.push_back(static_cast<std::uint32_t>(v));
    }
    return t;
  }

  inline bool associative(Table const& t) {
    for (std::size_t a = 0; a < t.m; ++a) {
      for (std::size_t b = 0; b < t.m; ++b) {
        for (std::size_t c = 0; c < t.m; ++c) {
          if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Number of associative binary operations on an m-element set, counted by
  // filling cells one at a time and checking each complete triple as soon
  // as it is determined.
  inline std::size_t count_associative(std::size_t m) {
    std::vector<int> t(m * m, -1);
    std::size_t      count = 0;
    auto ok = [&] {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          int ab = t[a * m + b];
          if (ab < 0) continue;
          for (std::size_t c = 0; c < m; ++c) {
            int bc = t[b * m + c];
            if (bc < 0) continue;
            int l = t[ab * m + c], r = t[a * m + bc];
            if (l >= 0 && r >= 0 && l != r) return false;
          }
        }
      }
      return true;
    };
    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
      if (cell == m * m) {
        ++count;
        return;
      }
      for (std::size_t v = 0; v < m; ++v) {
        t[cell] = static_cast<int>(v);
        if (ok()) fill(cell + 1);
      }
      t[cell] = -1;
    };
    fill(0);
    return count;
  }

  enum class Rel { R, L, J, H };

  // a <= b in the preorder of `rel`, computed inside `within` (a subset
  // closed under the product); multipliers range over `within` plus the
  // adjoined identity.
  inline bool below(Table const&                      t,
                    std::vector<std::uint32_t> const& within,
                    std::uint32_t                     a,
                    std::uint32_t                     b,
                    Rel                               rel) {
    if (a == b) return true;
    switch (rel) {
      case Rel::R:
        for (auto x : within) {
          if (t.at(b, x) == a) return true;
        }
        return false;
      case Rel::L:
        for (auto x : within) {
          if (t.at(x, b) == a) return true;
        }
        return false;
      case Rel::J:
        for (auto x : within) {
          if (t.at(x, b) == a || t.at(b, x) == a) return true;
          for (auto y : within) {
            if (t.at(t.at(x, b), y) == a) return true;
          }
        }
        return false;
      case Rel::H:
        return below(t, within, a, b, Rel::R)
               && below(t, within, a, b, Rel::L);
    }
    return false;
  }

  inline std::vector<std::uint32_t> everything(Table const& t) {
    std::vector<std::uint32_t> all(t.m);
    for (std::size_t i = 0; i < t.m; ++i) all[i] = static_cast<std::uint32_t>(i);
    return all;
  }

  // Longest chain a1 < a2 < ... (strict in the preorder) with every ai in
  // `candidates`, the order being computed inside `within`.
  inline std::size_t longest_chain(Table const&                      t,
                                   std::vector<std::uint32_t> const& within,
                                   std::vector<std::uint32_t> const& candidates,
                                   Rel                               rel) {
    std::size_t const n = candidates.size();
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        lt[i][j] = below(t, within, candidates[i], candidates[j], rel)
                   && !below(t, within, candidates[j], candidates[i], rel);
      }
    }
    std::vector<std::size_t> memo(n, 0);
    std::function<std::size_t(std::size_t)> up = [&](std::size_t i) {
      if (memo[i]) return memo[i];
      std::size_t best = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (lt[i][j]) best = std::max(best, 1 + up(j));
      }
      return memo[i] = best;
    };
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, up(i));
    return best;
  }

  inline std::size_t height(Table const& t, Rel rel) {
    auto all = everything(t);
    return longest_chain(t, all, all, rel);
  }

  // R-height of the subsemigroup `b`, measured inside b.
  inline std::size_t relative_height(Table const&               t,
                                     std::vector<std::uint32_t> b) {
    std::sort(b.begin(), b.end());
    return longest_chain(t, b, b, Rel::R);
  }

  // Longest chain of R-classes of S meeting `b` (or, with `contained`,
  // lying inside it).
  inline std::size_t chain_param(Table const&                      t,
                                 std::vector<std::uint32_t> const& b,
                                 bool                              contained) {
    auto all = everything(t);
    std::vector<std::uint32_t> reps;
    for (auto a : b) {
      bool keep = true;
      if (contained) {
        for (auto c : all) {
          if (below(t, all, a, c, Rel::R) && below(t, all, c, a, Rel::R)
              && std::find(b.begin(), b.end(), c) == b.end()) {
            keep = false;
          }
        }
      }
      if (keep) reps.push_back(a);
    }
    return longest_chain(t, all, reps, Rel::R);
  }

  inline std::size_t class_count(Table const& t, Rel rel) {
    auto all = everything(t);
    std::vector<char> seen(t.m, 0);
    std::size_t       count = 0;
    for (std::size_t a = 0; a < t.m; ++a) {
      if (seen[a]) continue;
      ++count;
      for (std::size_t b = a; b < t.m; ++b) {
        if (below(t, all, a, b, rel) && below(t, all, b, a, rel)) seen[b] = 1;
      }
    }
    return count;
  }

  // Brute-force generation directly from the defining formulas.
  inline std::vector<std::uint32_t> bi_ideal(Table const&                      t,
                                             std::vector<std::uint32_t> const& x) {
    std::vector<char> in(t.m, 0);
    for (auto a : x) {
      in[a] = 1;
      for (auto b : x) {
        in[t.at(a, b)] = 1;
        for (std::size_t s = 0; s < t.m; ++s) in[t.at(t.at(a, s), b)] = 1;
      }
    }
    std::vector<std::uint32_t> out;
    for (std::size_t a = 0; a < t.m; ++a) {
      if (in[a]) out.push_back(static_cast<std::uint32_t>(a));
    }
    return out;
  }

  inline bool is_bi_ideal(Table const& t, std::vector<std::uint32_t> const& b) {
    std::vector<char> in(t.m, 0);
    for (auto a : b) in[a] = 1;
    for (auto a : b) {
      for (auto c : b) {
        if (!in[t.at(a, c)]) return false;
        for (std::size_t s = 0; s < t.m; ++s) {
          if (!in[t.at(t.at(a, s), c)]) return false;
        }
      }
    }
    return true;
  }

  // Length-reducing rewriting on letter strings, zero encoded as the empty
  // optional.  Reduces by always applying the rightmost match of the last
  // rule that matches there, a strategy the library never uses.
  struct Rules {
    struct Rule {
      std::string lhs;
      std::string rhs;  // "0" for zero
    };
    std::vector<Rule> rules;

    std::string reduce(std::string w) const {
      while (true) {
        if (w == "0") return w;
        bool changed = false;
        for (std::size_t pos = w.size(); pos-- > 0 && !changed;) {
          for (std::size_t r = rules.size(); r-- > 0;) {
            auto const& rule = rules[r];
            if (w.compare(pos, rule.lhs.size(), rule.lhs) == 0
                && pos + rule.lhs.size() <= w.size()) {
              if (rule.rhs == "0") return "0";
              w = w.substr(0, pos) + rule.rhs + w.substr(pos + rule.lhs.size());
              changed = true;
              break;
            }
          }
        }
        if (!changed) return w;
      }
    }
  };

  // Evaluates a word of single-character letters in a table, given the
  // element each letter denotes.
  inline std::uint32_t evaluate(Table const&                          t,
                                std::map<char, std::uint32_t> const& letters,
                                std::string const&                    w) {
    std::uint32_t acc = letters.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) acc = t.at(acc, letters.at(w[i]));
    return acc;
  }

}  // namespace oracle
