#pragma once

// Length-reducing string rewriting systems, optionally over a free semigroup
// with zero.  Provides deterministic reduction, critical-pair enumeration,
// a completeness check and enumeration of the irreducible normal forms, which
// together turn a finite complete presentation into a FiniteSemigroup.
//
// The zero is a sentinel value of Word, never a letter: the absorption laws
// 0w = w0 = 0 are built into concatenation and reduction rather than stored
// as rules.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "rheight/errors.hpp"
#include "rheight/semigroup.hpp"

namespace rheight {

  using Letter = std::uint16_t;

  inline constexpr std::size_t default_enumeration_cap = 10'000;

  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> letters)
        : letters_(std::move(letters)) {
      if (letters_.empty()) {
        throw InvalidPresentation("alphabet must be non-empty");
      }
      if (letters_.size() > 0xFFFF) {
        throw InvalidPresentation("alphabet too large");
      }
      std::set<std::string> seen;
      for (auto const& l : letters_) {
        if (l.empty()) {
          throw InvalidPresentation("letters must be non-empty tokens");
        }
        if (!seen.insert(l).second) {
          throw InvalidPresentation("duplicate letter '" + l + "'");
        }
      }
    }

    std::size_t size() const noexcept { return letters_.size(); }

    std::string const& operator[](Letter i) const { return letters_.at(i); }

    std::vector<std::string> const& letters() const noexcept {
      return letters_;
    }

    std::optional<Letter> index_of(std::string_view token) const {
      auto it = std::find(letters_.begin(), letters_.end(), token);
      if (it == letters_.end()) {
        return std::nullopt;
      }
      return static_cast<Letter>(it - letters_.begin());
    }

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::vector<std::string> letters_;
  };

  // A word over an alphabet (possibly empty), or the distinguished zero.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    static Word zero() {
      Word w;
      w.zero_ = true;
      return w;
    }

    bool is_zero() const noexcept { return zero_; }

    std::vector<Letter> const& letters() const noexcept { return letters_; }

    // The zero counts as length 0.
    std::size_t length() const noexcept { return zero_ ? 0 : letters_.size(); }

    bool empty() const noexcept { return !zero_ && letters_.empty(); }

    friend auto operator<=>(Word const&, Word const&) = default;
    friend bool operator==(Word const&, Word const&)  = default;

   private:
    bool                zero_ = false;
    std::vector<Letter> letters_;
  };

  inline Word concat(Word const& u, Word const& v) {
    if (u.is_zero() || v.is_zero()) {
      return Word::zero();
    }
    std::vector<Letter> out(u.letters());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
  }

  // Shortlex: shorter first, then lexicographic by letter index; zero last.
  inline bool shortlex_less(Word const& u, Word const& v) {
    if (u.is_zero() != v.is_zero()) {
      return v.is_zero();
    }
    if (u.length() != v.length()) {
      return u.length() < v.length();
    }
    return u.letters() < v.letters();
  }

  struct Rule {
    Word lhs;
    Word rhs;

    friend bool operator==(Rule const&, Rule const&) = default;
  };

  class RewritingSystem {
   public:
    RewritingSystem(Alphabet          alphabet,
                    std::vector<Rule> rules,
                    bool              has_zero,
                    std::string       zero_token = "0")
        : alphabet_(std::move(alphabet)),
          rules_(std::move(rules)),
          has_zero_(has_zero),
          zero_token_(std::move(zero_token)) {
      if (has_zero_ && alphabet_.index_of(zero_token_)) {
        throw InvalidPresentation("zero token '" + zero_token_
                                  + "' must not be a letter");
      }
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        auto const& r = rules_[i];
        if (r.lhs.is_zero() || r.lhs.empty()) {
          throw InvalidPresentation("rule " + std::to_string(i)
                                    + ": left-hand side must be a non-empty "
                                      "word");
        }
        if (r.rhs.empty()) {
          throw InvalidPresentation("rule " + std::to_string(i)
                                    + ": right-hand side must be a non-empty "
                                      "word or zero");
        }
        check_letters(r.lhs, i);
        check_letters(r.rhs, i);
        if (r.rhs.is_zero() && !has_zero_) {
          throw InvalidPresentation("rule " + std::to_string(i)
                                    + " rewrites to zero but the system has "
                                      "no zero");
        }
        if (r.rhs.length() >= r.lhs.length()) {
          throw InvalidPresentation("rule " + std::to_string(i)
                                    + " is not length-reducing");
        }
      }
    }

    Alphabet const&          alphabet() const noexcept { return alphabet_; }
    std::vector<Rule> const& rules() const noexcept { return rules_; }
    bool                     has_zero() const noexcept { return has_zero_; }
    std::string const&       zero_token() const noexcept { return zero_token_; }

    friend bool operator==(RewritingSystem const&, RewritingSystem const&)
        = default;

   private:
    void check_letters(Word const& w, std::size_t rule) const {
      for (auto l : w.letters()) {
        if (l >= alphabet_.size()) {
          throw InvalidPresentation("rule " + std::to_string(rule)
                                    + " uses a symbol outside the alphabet");
        }
      }
    }

    Alphabet          alphabet_;
    std::vector<Rule> rules_;
    bool              has_zero_;
    std::string       zero_token_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Display and parsing of words
  ////////////////////////////////////////////////////////////////////////

  inline std::string letter_token(Alphabet const& a, Letter l) {
    auto const& s = a[l];
    return s.size() == 1 ? s : "[" + s + "]";
  }

  inline std::string to_string(RewritingSystem const& rs, Word const& w) {
    if (w.is_zero()) {
      return rs.zero_token().size() == 1 ? rs.zero_token()
                                         : "[" + rs.zero_token() + "]";
    }
    std::string out;
    for (auto l : w.letters()) {
      out += letter_token(rs.alphabet(), l);
    }
    return out;
  }

  namespace detail {
    // Reads single-character or bracketed tokens; whitespace separates
    // nothing and is skipped.  Throws ParseError with a 1-based column
    // relative to `column_base`.
    inline std::vector<std::pair<std::string, std::size_t>>
    word_tokens(std::string_view text, std::size_t line,
                std::size_t column_base) {
      std::vector<std::pair<std::string, std::size_t>> out;
      std::size_t                                      i = 0;
      while (i < text.size()) {
        char const c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        if (c == '[') {
          auto close = text.find(']', i);
          if (close == std::string_view::npos || close == i + 1) {
            throw ParseError(line, column_base + i, "unterminated or empty "
                                                    "bracketed token");
          }
          out.emplace_back(std::string(text.substr(i + 1, close - i - 1)),
                           column_base + i);
          i = close + 1;
          continue;
        }
        if (c == ']') {
          throw ParseError(line, column_base + i, "unexpected ']'");
        }
        out.emplace_back(std::string(1, c), column_base + i);
        ++i;
      }
      return out;
    }

    inline Word parse_word_at(RewritingSystem const& rs,
                              std::string_view       text,
                              std::size_t            line,
                              std::size_t            column_base,
                              bool                   allow_zero) {
      auto tokens = word_tokens(text, line, column_base);
      if (tokens.empty()) {
        throw ParseError(line, column_base, "expected a word");
      }
      if (rs.has_zero() && tokens.size() == 1
          && tokens[0].first == rs.zero_token()) {
        if (!allow_zero) {
          throw ParseError(line, tokens[0].second, "zero is not allowed here");
        }
        return Word::zero();
      }
      std::vector<Letter> letters;
      for (auto const& [tok, col] : tokens) {
        auto l = rs.alphabet().index_of(tok);
        if (!l) {
          throw ParseError(line, col, "symbol '" + tok
                                          + "' is not in the alphabet");
        }
        letters.push_back(*l);
      }
      return Word(std::move(letters));
    }
  }  // namespace detail

  inline Word parse_word(RewritingSystem const& rs, std::string_view text) {
    return detail::parse_word_at(rs, text, 1, 1, true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool matches_at(std::vector<Letter> const& w,
                           std::size_t                pos,
                           std::vector<Letter> const& lhs) {
      return pos + lhs.size() <= w.size()
             && std::equal(lhs.begin(), lhs.end(), w.begin() + pos);
    }

    // Replaces w[pos, pos+|lhs|) by rhs.
    inline Word rewrite_at(std::vector<Letter> const& w,
                           std::size_t                pos,
                           Rule const&                r) {
      if (r.rhs.is_zero()) {
        return Word::zero();
      }
      std::vector<Letter> out(w.begin(), w.begin() + pos);
      out.insert(out.end(), r.rhs.letters().begin(), r.rhs.letters().end());
      out.insert(out.end(), w.begin() + pos + r.lhs.length(), w.end());
      return Word(std::move(out));
    }

    inline void check_word(RewritingSystem const& rs, Word const& w) {
      for (auto l : w.letters()) {
        if (l >= rs.alphabet().size()) {
          throw InvalidPresentation("word contains a symbol outside the "
                                    "alphabet");
        }
      }
    }
  }  // namespace detail

  inline bool is_irreducible(RewritingSystem const& rs, Word const& w) {
    if (w.is_zero()) {
      return true;
    }
    auto const& ls = w.letters();
    for (std::size_t pos = 0; pos < ls.size(); ++pos) {
      for (auto const& r : rs.rules()) {
        if (detail::matches_at(ls, pos, r.lhs.letters())) {
          return false;
        }
      }
    }
    return true;
  }

  // Rewrites at the leftmost matching position, lowest rule index first,
  // until no left-hand side occurs.
  inline Word reduce_word(RewritingSystem const& rs, Word w) {
    detail::check_word(rs, w);
    while (!w.is_zero()) {
      auto const& ls      = w.letters();
      bool        changed = false;
      for (std::size_t pos = 0; pos < ls.size() && !changed; ++pos) {
        for (auto const& r : rs.rules()) {
          if (detail::matches_at(ls, pos, r.lhs.letters())) {
            w       = detail::rewrite_at(ls, pos, r);
            changed = true;
            break;
          }
        }
      }
      if (!changed) {
        break;
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Critical pairs and completeness
  ////////////////////////////////////////////////////////////////////////

  enum class OverlapKind { overlap, containment };

  struct CriticalPair {
    Word        source;
    Word        left_result;
    Word        right_result;
    OverlapKind overlap_kind;
    std::size_t first_rule;
    std::size_t second_rule;
  };

  // Pairs from proper overlaps (a suffix of one left-hand side is a prefix of
  // another) and containments (one left-hand side inside another), keeping
  // only distinct one-step results, deduplicated by source and unordered
  // result pair.
  inline std::vector<CriticalPair> critical_pairs(RewritingSystem const& rs) {
    std::vector<CriticalPair>            out;
    std::set<std::tuple<Word, Word, Word>> seen;
    auto emit = [&](Word source, Word left, Word right, OverlapKind kind,
                    std::size_t i, std::size_t j) {
      if (left == right) {
        return;
      }
      auto key = left < right ? std::tuple{source, left, right}
                              : std::tuple{source, right, left};
      if (!seen.insert(std::move(key)).second) {
        return;
      }
      out.push_back({std::move(source), std::move(left), std::move(right),
                     kind, i, j});
    };

    auto const& rules = rs.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      auto const& li = rules[i].lhs.letters();
      for (std::size_t j = 0; j < rules.size(); ++j) {
        auto const& lj = rules[j].lhs.letters();
        // proper overlap of length k: li = u v, lj = v w with u, w non-empty
        for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
          if (!std::equal(li.end() - k, li.end(), lj.begin())) {
            continue;
          }
          std::vector<Letter> src(li);
          src.insert(src.end(), lj.begin() + k, lj.end());
          std::size_t const second_pos = li.size() - k;
          emit(Word(src),
               detail::rewrite_at(src, 0, rules[i]),
               detail::rewrite_at(src, second_pos, rules[j]),
               OverlapKind::overlap,
               i,
               j);
        }
        // lj occurs inside li
        if (lj.size() > li.size() || (i == j)) {
          continue;
        }
        for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (detail::matches_at(li, pos, lj)) {
            emit(Word(li),
                 detail::rewrite_at(li, 0, rules[i]),
                 detail::rewrite_at(li, pos, rules[j]),
                 OverlapKind::containment,
                 i,
                 j);
          }
        }
      }
    }
    return out;
  }

  struct CompletenessReport {
    bool                        complete = true;
    std::optional<CriticalPair> witness;
    std::size_t                 pairs_checked = 0;
  };

  // Length-reducing systems are noetherian, so completeness is equivalent to
  // every critical pair having a common normal form.
  inline CompletenessReport is_complete(RewritingSystem const& rs) {
    CompletenessReport report;
    for (auto& cp : critical_pairs(rs)) {
      ++report.pairs_checked;
      if (reduce_word(rs, cp.left_result) != reduce_word(rs, cp.right_result)) {
        report.complete = false;
        report.witness  = std::move(cp);
        return report;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  // Irreducible non-empty words in shortlex order, then the zero if the
  // system has one.  Every factor of an irreducible word is irreducible, so
  // length level L+1 is obtained by extending level L and the enumeration
  // stops at the first empty level.
  inline std::vector<Word>
  enumerate_irreducibles(RewritingSystem const& rs,
                         std::size_t            cap = default_enumeration_cap) {
    std::vector<Word> out;
    std::vector<Word> level;
    auto const        n_letters = rs.alphabet().size();
    auto suffix_reducible = [&](std::vector<Letter> const& w) {
      for (auto const& r : rs.rules()) {
        auto const& l = r.lhs.letters();
        if (l.size() <= w.size()
            && std::equal(l.begin(), l.end(), w.end() - l.size())) {
          return true;
        }
      }
      return false;
    };
    auto push = [&](Word w) {
      if (out.size() + (rs.has_zero() ? 1 : 0) >= cap) {
        throw CapExceeded(cap);
      }
      out.push_back(w);
      level.push_back(std::move(w));
    };
    for (Letter a = 0; a < n_letters; ++a) {
      std::vector<Letter> w{a};
      if (!suffix_reducible(w)) {
        push(Word(std::move(w)));
      }
    }
    while (!level.empty()) {
      std::vector<Word> prev;
      prev.swap(level);
      for (auto const& u : prev) {
        for (Letter a = 0; a < n_letters; ++a) {
          std::vector<Letter> w(u.letters());
          w.push_back(a);
          if (!suffix_reducible(w)) {
            push(Word(std::move(w)));
          }
        }
      }
    }
    if (rs.has_zero()) {
      out.push_back(Word::zero());
    }
    return out;
  }

  struct PresentedSemigroup {
    FiniteSemigroup   semigroup;
    std::vector<Word> normal_forms;  // element i is normal_forms[i]
  };

  inline PresentedSemigroup
  present(RewritingSystem const& rs,
          std::size_t            cap = default_enumeration_cap) {
    auto report = is_complete(rs);
    if (!report.complete) {
      throw PreconditionViolated(
          "rewriting system is not confluent: critical pair from '"
          + to_string(rs, report.witness->source) + "' does not resolve");
    }
    auto words = enumerate_irreducibles(rs, cap);
    std::map<Word, index_type> index;
    std::vector<std::string>   names;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], static_cast<index_type>(i));
      names.push_back(to_string(rs, words[i]));
    }
    std::size_t const       m = words.size();
    std::vector<index_type> flat(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto it = index.find(reduce_word(rs, concat(words[a], words[b])));
        if (it == index.end()) {
          throw InternalError("product of normal forms reduced to a word "
                              "outside the enumeration");
        }
        flat[a * m + b] = it->second;
      }
    }
    try {
      return {FiniteSemigroup::from_flat(std::move(names), std::move(flat)),
              std::move(words)};
    } catch (NotAssociative const& e) {
      throw InternalError(std::string("presentation produced a "
                                      "non-associative table: ")
                          + e.what());
    }
  }

  inline FiniteSemigroup
  semigroup_from_presentation(RewritingSystem const& rs,
                              std::size_t cap = default_enumeration_cap) {
    return present(rs, cap).semigroup;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation text format
  //
  //   letters: x y z t
  //   zero: 0
  //   rule: xyzt -> x
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_presentation_text(RewritingSystem const& rs) {
    std::ostringstream out;
    out << "letters:";
    for (Letter l = 0; l < rs.alphabet().size(); ++l) {
      out << ' ' << letter_token(rs.alphabet(), l);
    }
    out << '\n';
    if (rs.has_zero()) {
      out << "zero: " << to_string(rs, Word::zero()) << '\n';
    }
    for (auto const& r : rs.rules()) {
      out << "rule: " << to_string(rs, r.lhs) << " -> "
          << to_string(rs, r.rhs) << '\n';
    }
    return out.str();
  }

  inline RewritingSystem parse_presentation_text(std::string_view text) {
    struct Line {
      std::size_t      number;
      std::string      body;
      std::size_t      value_column;  // 1-based column after the key
      std::string      key;
    };
    std::vector<Line> lines;
    {
      std::size_t lineno = 0;
      std::size_t pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++lineno;
        std::string_view raw = detail::strip_comment(text.substr(pos, end - pos));
        pos = end + 1;
        auto at = raw.find_first_not_of(" \t\r");
        if (at == std::string_view::npos) {
          continue;
        }
        auto colon = raw.find(':', at);
        if (colon == std::string_view::npos) {
          throw ParseError(lineno, at + 1, "expected 'key: value'");
        }
        std::string key(raw.substr(at, colon - at));
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) {
          key.pop_back();
        }
        if (key != "letters" && key != "zero" && key != "rule") {
          throw ParseError(lineno, at + 1, "unknown declaration '" + key + "'");
        }
        lines.push_back({lineno, std::string(raw.substr(colon + 1)),
                         colon + 2, key});
      }
    }

    std::optional<Alphabet>    alphabet;
    std::optional<std::string> zero;
    for (auto const& l : lines) {
      if (l.key == "letters") {
        if (alphabet) {
          throw ParseError(l.number, 1, "duplicate 'letters:' declaration");
        }
        std::vector<std::string> letters;
        for (auto const& t : detail::split_tokens(l.body)) {
          auto toks = detail::word_tokens(t.text, l.number,
                                          l.value_column + t.column - 1);
          if (toks.size() != 1) {
            throw ParseError(l.number, l.value_column + t.column - 1,
                             "multi-character letters must be bracketed");
          }
          letters.push_back(toks[0].first);
        }
        try {
          alphabet.emplace(std::move(letters));
        } catch (InvalidPresentation const& e) {
          throw ParseError(l.number, l.value_column, e.what());
        }
      } else if (l.key == "zero") {
        if (zero) {
          throw ParseError(l.number, 1, "duplicate 'zero:' declaration");
        }
        auto toks = detail::word_tokens(l.body, l.number, l.value_column);
        if (toks.size() != 1) {
          throw ParseError(l.number, l.value_column,
                           "expected a single zero token");
        }
        zero = toks[0].first;
      }
    }
    if (!alphabet) {
      throw ParseError(1, 1, "missing 'letters:' declaration");
    }
    if (zero && alphabet->index_of(*zero)) {
      throw ParseError(1, 1, "zero token '" + *zero + "' is also a letter");
    }

    // Parse rules against a rule-less system so words can be read.
    RewritingSystem const reader(*alphabet, {}, zero.has_value(),
                                 zero.value_or("0"));
    std::vector<Rule> rules;
    for (auto const& l : lines) {
      if (l.key != "rule") {
        continue;
      }
      auto arrow = l.body.find("->");
      if (arrow == std::string::npos) {
        throw ParseError(l.number, l.value_column, "expected 'lhs -> rhs'");
      }
      Rule r{detail::parse_word_at(reader,
                                   std::string_view(l.body).substr(0, arrow),
                                   l.number, l.value_column, false),
             detail::parse_word_at(reader,
                                   std::string_view(l.body).substr(arrow + 2),
                                   l.number, l.value_column + arrow + 2,
                                   true)};
      if (r.rhs.length() >= r.lhs.length()) {
        throw ParseError(l.number, l.value_column,
                         "rule is not length-reducing");
      }
      rules.push_back(std::move(r));
    }
    return RewritingSystem(*alphabet, std::move(rules), zero.has_value(),
                           zero.value_or("0"));
  }

}  // namespace rheight
