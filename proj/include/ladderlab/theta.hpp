/*
 *   Copyright 2026 The ladderlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * The monoid of alternating words over the two trace letters, the index
 * poset of pairs (i, m), and the order isomorphism between them.
 */

#ifndef LADDERLAB_THETA_HPP
#define LADDERLAB_THETA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ladderlab {

  /** One of the two generators. `L` stands for the left trace letter, `R`
   *  for the right one. */
  enum class Letter : std::uint8_t { L = 0, R = 1 };

  constexpr Letter other(Letter x) noexcept {
    return x == Letter::L ? Letter::R : Letter::L;
  }

  constexpr char to_char(Letter x) noexcept {
    return x == Letter::L ? 'l' : 'r';
  }

  /** Thrown when a textual word or index fails to parse. */
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /**
   * A reduced alternating word, or the empty word.
   *
   * Since adjacent letters always differ, a word is determined by its length
   * and its last letter; that pair is the stored normal form, so equality is
   * structural and every operation here is O(1) apart from materialising the
   * letter sequence.
   */
  class Word {
   public:
    constexpr Word() noexcept = default;

    /** The unique alternating word of the given length ending in `tail`.
     *  For length 0 the tail is ignored and the empty word results. */
    static constexpr Word ending_in(Letter tail, std::uint32_t length) noexcept {
      Word w;
      w.length_ = length;
      w.tail_   = length == 0 ? Letter::L : tail;
      return w;
    }

    /** The unique alternating word of the given length starting with `head`. */
    static constexpr Word starting_with(Letter head,
                                        std::uint32_t length) noexcept {
      return ending_in(length % 2 == 1 ? head : other(head), length);
    }

    static constexpr Word letter(Letter x) noexcept {
      return ending_in(x, 1);
    }

    /** Builds a word from a letter sequence; throws if two adjacent letters
     *  coincide. */
    static Word from_letters(std::vector<Letter> const& letters) {
      for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] == letters[i - 1]) {
          throw ParseError("word is not alternating at position "
                           + std::to_string(i));
        }
      }
      if (letters.empty()) {
        return Word();
      }
      return ending_in(letters.back(),
                       static_cast<std::uint32_t>(letters.size()));
    }

    /** Parses "e" (empty word) or a string over {l, r}. */
    static Word parse(std::string_view text) {
      if (text == "e") {
        return Word();
      }
      if (text.empty()) {
        throw ParseError("empty string is not a word; use \"e\"");
      }
      std::vector<Letter> letters;
      letters.reserve(text.size());
      for (char c : text) {
        if (c == 'l') {
          letters.push_back(Letter::L);
        } else if (c == 'r') {
          letters.push_back(Letter::R);
        } else {
          throw ParseError(std::string("invalid letter '") + c + "' in word \""
                           + std::string(text) + "\"");
        }
      }
      return from_letters(letters);
    }

    constexpr std::uint32_t length() const noexcept {
      return length_;
    }

    constexpr bool empty() const noexcept {
      return length_ == 0;
    }

    constexpr std::optional<Letter> tail() const noexcept {
      if (empty()) {
        return std::nullopt;
      }
      return tail_;
    }

    constexpr std::optional<Letter> head() const noexcept {
      if (empty()) {
        return std::nullopt;
      }
      return length_ % 2 == 1 ? tail_ : other(tail_);
    }

    /** Letter at position i (0-based). */
    constexpr Letter at(std::uint32_t i) const noexcept {
      return (length_ - 1 - i) % 2 == 0 ? tail_ : other(tail_);
    }

    /** The reversed word. */
    constexpr Word mirror() const noexcept {
      if (empty()) {
        return *this;
      }
      return ending_in(*head(), length_);
    }

    std::vector<Letter> letters() const {
      std::vector<Letter> out;
      out.reserve(length_);
      for (std::uint32_t i = 0; i < length_; ++i) {
        out.push_back(at(i));
      }
      return out;
    }

    /** Renders in the l/r syntax, "e" for the empty word. */
    std::string to_string() const {
      if (empty()) {
        return "e";
      }
      std::string out;
      out.reserve(length_);
      for (std::uint32_t i = 0; i < length_; ++i) {
        out.push_back(to_char(at(i)));
      }
      return out;
    }

    /** Position in the (length, tail l before r) enumeration order. */
    constexpr std::size_t index() const noexcept {
      if (empty()) {
        return 0;
      }
      return 2 * (static_cast<std::size_t>(length_) - 1)
             + (tail_ == Letter::L ? 1 : 2);
    }

    static constexpr Word from_index(std::size_t idx) noexcept {
      if (idx == 0) {
        return Word();
      }
      auto const len = static_cast<std::uint32_t>((idx + 1) / 2);
      return ending_in(idx % 2 == 1 ? Letter::L : Letter::R, len);
    }

    friend constexpr bool operator==(Word const&, Word const&) noexcept
        = default;

    /** Total order matching index(); not the poset order of word_leq. */
    friend constexpr std::strong_ordering operator<=>(Word const& a,
                                                      Word const& b) noexcept {
      return a.index() <=> b.index();
    }

   private:
    std::uint32_t length_ = 0;
    Letter        tail_   = Letter::L;
  };

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.to_string();
  }

  /** Product in the monoid: concatenation, deleting one letter at the
   *  junction when the tail of `a` equals the head of `b`. */
  constexpr Word multiply(Word const& a, Word const& b) noexcept {
    if (a.empty()) {
      return b;
    }
    if (b.empty()) {
      return a;
    }
    std::uint32_t const len
        = *a.tail() == *b.head() ? a.length() + b.length() - 1
                                 : a.length() + b.length();
    return Word::ending_in(*b.tail(), len);
  }

  constexpr Word operator*(Word const& a, Word const& b) noexcept {
    return multiply(a, b);
  }

  /** The poset order on words: longer words lie below shorter ones, words of
   *  equal length are incomparable unless equal. */
  constexpr bool word_leq(Word const& a, Word const& b) noexcept {
    return a.length() > b.length() || a == b;
  }

  /** All words of length at most max_len in index() order. There are
   *  exactly 2 * max_len + 1 of them. */
  inline std::vector<Word> enumerate_words(std::uint32_t max_len) {
    std::vector<Word> out;
    out.reserve(2 * static_cast<std::size_t>(max_len) + 1);
    out.emplace_back();
    for (std::uint32_t m = 1; m <= max_len; ++m) {
      out.push_back(Word::ending_in(Letter::L, m));
      out.push_back(Word::ending_in(Letter::R, m));
    }
    return out;
  }

  /**
   * An element (i, m) of the index poset, i in {0, 1}. The pair (1, 0) is
   * identified with (0, 0) at construction.
   */
  class LambdaIndex {
   public:
    constexpr LambdaIndex() noexcept = default;

    constexpr LambdaIndex(unsigned i, std::uint32_t m) : i_(i), m_(m) {
      if (i > 1) {
        throw std::invalid_argument("lambda index: i must be 0 or 1");
      }
      if (m == 0) {
        i_ = 0;
      }
    }

    constexpr unsigned i() const noexcept {
      return i_;
    }

    constexpr std::uint32_t m() const noexcept {
      return m_;
    }

    std::string to_string() const {
      return "(" + std::to_string(i_) + "," + std::to_string(m_) + ")";
    }

    /** Parses "(i,m)" with optional spaces. */
    static LambdaIndex parse(std::string_view text) {
      std::string s;
      for (char c : text) {
        if (c != ' ') {
          s.push_back(c);
        }
      }
      auto const comma = s.find(',');
      if (s.size() < 5 || s.front() != '(' || s.back() != ')'
          || comma == std::string::npos) {
        throw ParseError("malformed index \"" + std::string(text)
                         + "\"; expected (i,m)");
      }
      std::string const is = s.substr(1, comma - 1);
      std::string const ms = s.substr(comma + 1, s.size() - comma - 2);
      if (is != "0" && is != "1") {
        throw ParseError("index component i must be 0 or 1 in \""
                         + std::string(text) + "\"");
      }
      if (ms.empty() || ms.find_first_not_of("0123456789") != std::string::npos
          || ms.size() > 9) {
        throw ParseError("index component m must be a natural number in \""
                         + std::string(text) + "\"");
      }
      return LambdaIndex(is == "1" ? 1u : 0u,
                         static_cast<std::uint32_t>(std::stoul(ms)));
    }

    friend constexpr bool operator==(LambdaIndex const&,
                                     LambdaIndex const&) noexcept
        = default;

   private:
    unsigned      i_ = 0;
    std::uint32_t m_ = 0;
  };

  inline std::ostream& operator<<(std::ostream& os, LambdaIndex const& x) {
    return os << x.to_string();
  }

  /** (i, m) < (j, n) iff m > n. */
  constexpr bool lambda_leq(LambdaIndex const& x,
                            LambdaIndex const& y) noexcept {
    return x.m() > y.m() || x == y;
  }

  /** Word to index: the empty word goes to (0,0); otherwise i records the
   *  tail (0 for r, 1 for l) and m the length. */
  constexpr LambdaIndex gamma(Word const& w) noexcept {
    if (w.empty()) {
      return LambdaIndex();
    }
    return LambdaIndex(*w.tail() == Letter::R ? 0u : 1u, w.length());
  }

  /** Inverse of gamma: the unique word of length m whose tail is r when
   *  i = 0 and l when i = 1. */
  constexpr Word gamma_inv(LambdaIndex const& x) noexcept {
    return Word::ending_in(x.i() == 0 ? Letter::R : Letter::L, x.m());
  }

}  // namespace ladderlab

#endif  // LADDERLAB_THETA_HPP
