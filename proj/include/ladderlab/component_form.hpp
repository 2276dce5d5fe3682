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
 * Symbolic component forms. A form is a list of intersected terms
 * Base^{exponent}; exponents are mirrored words. Forms only record the
 * shape of the expression; nothing is evaluated.
 */

#ifndef LADDERLAB_COMPONENT_FORM_HPP
#define LADDERLAB_COMPONENT_FORM_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "conditions.hpp"
#include "correspondence.hpp"
#include "ladder.hpp"

namespace ladderlab {

  enum class TermBase : std::uint8_t { Variety, S, LNB, RNB, CR };

  struct Term {
    TermBase            base = TermBase::CR;
    std::string         variety;  // only for TermBase::Variety
    bool                k    = false;
    std::optional<Word> word;

    std::string base_name() const {
      switch (base) {
        case TermBase::Variety:
          return variety;
        case TermBase::S:
          return "S";
        case TermBase::LNB:
          return "LNB";
        case TermBase::RNB:
          return "RNB";
        case TermBase::CR:
          return "CR";
      }
      return "?";
    }

    std::string exponent() const {
      std::string e = k ? "K" : "";
      if (word) {
        e += (k ? " " : "") + word->to_string();
      }
      return e;
    }

    std::string to_string() const {
      std::string const e = exponent();
      if (e.empty()) {
        return base_name();
      }
      if (!word) {
        return base_name() + "^" + e;
      }
      return base_name() + "^{" + e + "}";
    }

    friend bool operator==(Term const&, Term const&) = default;
  };

  struct ComponentForm {
    std::vector<Term> terms;
    // Longer words repeat the pattern of the last emitted level.
    bool continues = false;
    // Set for the three-part form of a ladder that does not contain bands.
    std::optional<std::vector<Term>> band_block;
    bool band_block_continues = false;

    std::string to_string() const {
      std::string out;
      auto        sep = [&] {
        if (!out.empty()) {
          out += " & ";
        }
      };
      for (auto const& t : terms) {
        sep();
        out += t.to_string();
      }
      if (band_block) {
        sep();
        out += "V^B[";
        std::string inner;
        for (auto const& t : *band_block) {
          inner += (inner.empty() ? "" : " & ") + t.to_string();
        }
        if (band_block_continues) {
          inner += " & ...";
        }
        out += inner + "]";
      }
      if (continues) {
        sep();
        out += "...";
      }
      return out;
    }

    /** One record per line: "term <base> [K] [word]", "tail". */
    std::string to_records() const {
      std::string out;
      auto        emit = [&](Term const& t) {
        out += "term " + t.base_name();
        if (t.k) {
          out += " K";
        }
        if (t.word) {
          out += " " + t.word->to_string();
        }
        out += "\n";
      };
      for (auto const& t : terms) {
        emit(t);
      }
      if (band_block) {
        out += "begin V^B\n";
        for (auto const& t : *band_block) {
          emit(t);
        }
        if (band_block_continues) {
          out += "tail\n";
        }
        out += "end V^B\n";
      }
      if (continues) {
        out += "tail\n";
      }
      return out;
    }

    bool has_base(TermBase b) const {
      return std::any_of(terms.begin(), terms.end(),
                         [b](Term const& t) { return t.base == b; });
    }
  };

  class DirtyLadder : public std::invalid_argument {
   public:
    explicit DirtyLadder(ConditionReport r)
        : std::invalid_argument("ladder violates the ladder conditions:\n"
                                + r.to_string()),
          report(std::move(r)) {}

    ConditionReport report;
  };

  namespace detail {
    inline void require_clean(Ladder const& l) {
      auto r = check_phi(l, CheckMode::first);
      if (!r.clean()) {
        throw DirtyLadder(std::move(r));
      }
    }

    inline void normalize(std::vector<Term>& terms) {
      auto key = [](Term const& t) {
        return std::make_tuple(t.word ? t.word->length() : 0u, t.base_name(),
                               t.exponent());
      };
      std::stable_sort(terms.begin(), terms.end(),
                       [&](Term const& a, Term const& b) {
                         return key(a) < key(b);
                       });
      terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    }

    /** The term a value contributes at word tau (nonempty). */
    inline Term term_for(KernelModel const& m, Element v, Word const& tau) {
      Term t;
      t.word = tau.mirror();
      if (v.is_carrier()) {
        t.base    = TermBase::Variety;
        t.variety = m.symbol(v.index());
        t.k       = true;
      } else {
        switch (v.special_kind()) {
          case Special::T:
            t.base = TermBase::S;
            break;
          case Special::L:
            t.base = TermBase::LNB;
            break;
          case Special::R:
            t.base = TermBase::RNB;
            break;
        }
      }
      return t;
    }

    inline std::vector<Word> emitted_words(Ladder const& l) {
      auto ws = enumerate_words(static_cast<std::uint32_t>(l.depth() + 1));
      ws.erase(ws.begin());  // the empty word is the root term
      return ws;
    }

    inline Term root_term(Ladder const& l) {
      Term t;
      t.base    = TermBase::Variety;
      t.variety = l.model().symbol(l.root().index());
      t.k       = true;
      return t;
    }
  }  // namespace detail

  /** root^K, then one term per nonempty word up to depth + 1. */
  inline ComponentForm component_form(Ladder const& l) {
    detail::require_clean(l);
    ComponentForm f;
    f.terms.push_back(detail::root_term(l));
    for (Word const& w : detail::emitted_words(l)) {
      f.terms.push_back(detail::term_for(l.model(), l.evaluate(w), w));
    }
    detail::normalize(f.terms);
    f.continues = true;
    return f;
  }

  /** CR plus S/LNB/RNB terms at special-valued words; just CR if the
   *  ladder contains bands. */
  inline ComponentForm b_upper_form(Ladder const& l) {
    detail::require_clean(l);
    ComponentForm f;
    f.terms.push_back(Term{});
    if (contains_bands(l)) {
      return f;
    }
    for (Word const& w : detail::emitted_words(l)) {
      Element const v = l.evaluate(w);
      if (v.is_special()) {
        f.terms.push_back(detail::term_for(l.model(), v, w));
      }
    }
    detail::normalize(f.terms);
    f.continues = l.tail_value(Letter::L).is_special()
                  || l.tail_value(Letter::R).is_special();
    return f;
  }

  /** With bands: the plain K-exponent schema over all words. Without:
   *  root^K, the carrier-valued terms, and the b_upper_form block. */
  inline ComponentForm three_part_form(Ladder const& l) {
    detail::require_clean(l);
    if (contains_bands(l)) {
      return component_form(l);
    }
    ComponentForm f;
    f.terms.push_back(detail::root_term(l));
    for (Word const& w : detail::emitted_words(l)) {
      Element const v = l.evaluate(w);
      if (v.is_carrier()) {
        f.terms.push_back(detail::term_for(l.model(), v, w));
      }
    }
    detail::normalize(f.terms);
    ComponentForm const b  = b_upper_form(l);
    f.band_block           = b.terms;
    f.band_block_continues = b.continues;
    f.continues            = l.tail_value(Letter::L).is_carrier()
                  || l.tail_value(Letter::R).is_carrier();
    return f;
  }

}  // namespace ladderlab

#endif  // LADDERLAB_COMPONENT_FORM_HPP
