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
 * Relations between ladders mirroring the kernel, trace and band relations
 * on varieties, and the band-containment test.
 */

#ifndef LADDERLAB_CORRESPONDENCE_HPP
#define LADDERLAB_CORRESPONDENCE_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "ladder.hpp"

namespace ladderlab {

  enum class Relation : std::uint8_t { K, Tl, Tr, Kl, Kr, B };

  inline constexpr std::array<Relation, 6> all_relations
      = {Relation::K,  Relation::Tl, Relation::Tr,
         Relation::Kl, Relation::Kr, Relation::B};

  constexpr std::string_view relation_name(Relation r) noexcept {
    switch (r) {
      case Relation::K:
        return "K";
      case Relation::Tl:
        return "Tl";
      case Relation::Tr:
        return "Tr";
      case Relation::Kl:
        return "Kl";
      case Relation::Kr:
        return "Kr";
      case Relation::B:
        return "B";
    }
    return "?";
  }

  inline std::optional<Relation> parse_relation(std::string_view s) noexcept {
    for (Relation r : all_relations) {
      if (relation_name(r) == s) {
        return r;
      }
    }
    return std::nullopt;
  }

  namespace detail {
    /** Values agree at every nonempty word with head `h`. */
    inline bool agree_on_head(Ladder const& a, Ladder const& b, Letter h,
                              std::size_t bound) {
      for (std::uint32_t k = 1; k <= bound; ++k) {
        Word const w = Word::starting_with(h, k);
        if (a.evaluate(w) != b.evaluate(w)) {
          return false;
        }
      }
      return true;
    }

    inline bool same_specials(Element x, Element y) {
      for (Element p :
           {Element::t_star(), Element::l_star(), Element::r_star()}) {
        if ((x == p) != (y == p)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  inline bool related(Relation tag, Ladder const& a, Ladder const& b) {
    require_same_model(a, b);
    auto const bound
        = static_cast<std::uint32_t>(std::max(a.depth(), b.depth()) + 1);
    switch (tag) {
      case Relation::K:
        return a.root() == b.root();
      case Relation::Tl:
        return detail::agree_on_head(a, b, Letter::L, bound);
      case Relation::Tr:
        return detail::agree_on_head(a, b, Letter::R, bound);
      case Relation::Kl:
      case Relation::Kr: {
        Letter const h = tag == Relation::Kl ? Letter::L : Letter::R;
        for (Word const& w : enumerate_words(bound)) {
          bool const in_scope = w.empty() || w.head() == h;
          if (in_scope && a.evaluate(w) != b.evaluate(w)) {
            return false;
          }
        }
        return true;
      }
      case Relation::B:
        for (Word const& w : enumerate_words(bound)) {
          if (!detail::same_specials(a.evaluate(w), b.evaluate(w))) {
            return false;
          }
        }
        return true;
    }
    return false;
  }

  /** A special value occurs but T* does not; impossible for ladders in Phi. */
  class InconsistentLadder : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  /** True iff no word takes the value T*. Also requires that this agrees
   *  with "no special value at all" and throws InconsistentLadder if not. */
  inline bool contains_bands(Ladder const& l) {
    bool any_tstar   = false;
    bool any_special = false;
    for (Word const& w :
         enumerate_words(static_cast<std::uint32_t>(l.depth() + 1))) {
      Element const v = l.evaluate(w);
      any_tstar       = any_tstar || v == Element::t_star();
      any_special     = any_special || v.is_special();
    }
    if (any_special && !any_tstar) {
      throw InconsistentLadder("ladder has special values but never T*");
    }
    return !any_tstar;
  }

}  // namespace ladderlab

#endif  // LADDERLAB_CORRESPONDENCE_HPP
