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
 * Condition checkers. check_phi reads a ladder on words, check_q reads the
 * same data on index pairs (i, m); the two are written independently so
 * that their agreement is a real test.
 *
 * Quantifiers over words are cut at check_bound(l): past it the ladder
 * values are constant per tail letter and every iterated lower operator has
 * stopped moving (a decreasing idempotent chain in a lattice of height h
 * moves at most h times), so the truncated check decides the full one.
 */

#ifndef LADDERLAB_CONDITIONS_HPP
#define LADDERLAB_CONDITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ladder.hpp"

namespace ladderlab {

  enum class Condition : std::uint8_t {
    P1, P2, P3, P4, P5, P6,
    Q1, Q2, Q3, Q4, Q5,
    P5star, P6star, Tstar,
    group_part,  // value outside the family's allowed set
  };

  constexpr std::string_view condition_name(Condition c) noexcept {
    switch (c) {
      case Condition::P1: return "P1";
      case Condition::P2: return "P2";
      case Condition::P3: return "P3";
      case Condition::P4: return "P4";
      case Condition::P5: return "P5";
      case Condition::P6: return "P6";
      case Condition::Q1: return "Q1";
      case Condition::Q2: return "Q2";
      case Condition::Q3: return "Q3";
      case Condition::Q4: return "Q4";
      case Condition::Q5: return "Q5";
      case Condition::P5star: return "P5*";
      case Condition::P6star: return "P6*";
      case Condition::Tstar: return "T*";
      case Condition::group_part: return "values";
    }
    return "?";
  }

  struct Violation {
    Condition   condition;
    std::string witness;
    std::string message;
  };

  struct ConditionReport {
    std::vector<Violation> violations;

    bool clean() const noexcept {
      return violations.empty();
    }

    bool has(Condition c) const noexcept {
      for (auto const& v : violations) {
        if (v.condition == c) {
          return true;
        }
      }
      return false;
    }

    /** One line per violation: "<tag> <witness>: <message>". */
    std::string to_string() const {
      std::string out;
      for (auto const& v : violations) {
        out += std::string(condition_name(v.condition)) + " " + v.witness
               + ": " + v.message + "\n";
      }
      return out;
    }
  };

  enum class CheckMode { all, first };

  /** Words up to this length decide (P5), (P6) and (Q5). */
  inline std::size_t check_bound(Ladder const& l) {
    return std::max<std::size_t>(l.depth(), 1) + l.model().height() + 2;
  }

  namespace detail {
    class Reporter {
     public:
      explicit Reporter(CheckMode mode) : mode_(mode) {}

      bool done() const noexcept {
        return mode_ == CheckMode::first && !report_.violations.empty();
      }

      void add(Condition c, std::string witness, std::string message) {
        if (!done()) {
          report_.violations.push_back(
              {c, std::move(witness), std::move(message)});
        }
      }

      ConditionReport take() {
        return std::move(report_);
      }

     private:
      CheckMode       mode_;
      ConditionReport report_;
    };
  }  // namespace detail

  /** (P1)-(P4) only; shared with the family predicates. */
  inline void check_p1_to_p4(Ladder const& l, detail::Reporter& rep) {
    auto const& m     = l.model();
    auto        name  = [&](Element e) { return m.to_string(e); };
    std::size_t const top = std::max<std::size_t>(l.depth(), 1) + 1;

    if (!l.root().is_carrier()) {
      rep.add(Condition::P1, "e", "root value " + name(l.root())
                                      + " is not K-least");
    }
    for (Letter x : {Letter::L, Letter::R}) {
      if (rep.done()) {
        return;
      }
      Element const v = l.level(1, x);
      if (!m.ext_leq(v, l.root())) {
        rep.add(Condition::P2, std::string(1, to_char(x)) + " <= e",
                name(v) + " is not below " + name(l.root()));
      }
    }
    for (std::size_t k = 1; k < top && !rep.done(); ++k) {
      for (Letter lo : {Letter::L, Letter::R}) {
        for (Letter hi : {Letter::L, Letter::R}) {
          Element const a = l.level(k + 1, lo);
          Element const b = l.level(k, hi);
          if (!m.ext_leq(a, b)) {
            auto const wa = Word::ending_in(lo, static_cast<std::uint32_t>(k + 1));
            auto const wb = Word::ending_in(hi, static_cast<std::uint32_t>(k));
            rep.add(Condition::P2, wa.to_string() + " <= " + wb.to_string(),
                    name(a) + " is not below " + name(b));
          }
        }
      }
    }
    for (std::size_t k = 1; k <= top && !rep.done(); ++k) {
      auto const len = static_cast<std::uint32_t>(k);
      if (l.level(k, Letter::L) == Element::l_star()) {
        rep.add(Condition::P3, Word::ending_in(Letter::L, len).to_string(),
                "L* at a word ending in l");
      }
      if (l.level(k, Letter::R) == Element::r_star()) {
        rep.add(Condition::P4, Word::ending_in(Letter::R, len).to_string(),
                "R* at a word ending in r");
      }
    }
  }

  inline ConditionReport check_phi(Ladder const& l,
                                   CheckMode mode = CheckMode::all) {
    detail::Reporter rep(mode);
    auto const&      m    = l.model();
    auto             name = [&](Element e) { return m.to_string(e); };
    check_p1_to_p4(l, rep);

    auto const bound = static_cast<std::uint32_t>(check_bound(l));
    std::vector<Word> words;
    for (Word const& w : enumerate_words(bound)) {
      if (!w.empty()) {
        words.push_back(w);
      }
    }
    if (l.root().is_carrier()) {
      for (Word const& tau : words) {
        if (rep.done()) {
          break;
        }
        Element const lhs = m.lower_star(l.root().index(), tau);
        Element const rhs = l.evaluate(tau);
        if (!m.ext_leq(lhs, rhs)) {
          rep.add(Condition::P5, "tau=" + tau.to_string(),
                  "lower value " + name(lhs) + " of the root is not below "
                      + name(rhs));
        }
      }
    }
    for (Word const& sigma : words) {
      Element const s = l.evaluate(sigma);
      if (!s.is_carrier()) {
        continue;
      }
      for (Word const& tau : words) {
        if (rep.done()) {
          return rep.take();
        }
        if (sigma.tail() == tau.head()) {
          continue;
        }
        Element const lhs = m.lower_star(s.index(), tau);
        Element const rhs = l.evaluate(multiply(sigma, tau));
        if (!m.ext_leq(lhs, rhs)) {
          rep.add(Condition::P6,
                  "sigma=" + sigma.to_string() + " tau=" + tau.to_string(),
                  "lower value " + name(lhs) + " of " + name(s)
                      + " is not below " + name(rhs) + " at "
                      + multiply(sigma, tau).to_string());
        }
      }
    }
    return rep.take();
  }

  inline ConditionReport check_q(LambdaLadder const& l,
                                 CheckMode mode = CheckMode::all) {
    detail::Reporter rep(mode);
    auto const&      m    = l.model();
    auto             name = [&](Element e) { return m.to_string(e); };
    auto const       bound
        = static_cast<std::uint32_t>(check_bound(l.underlying()));

    std::vector<LambdaIndex> idx{LambdaIndex(0, 0)};
    for (std::uint32_t k = 1; k <= bound; ++k) {
      idx.emplace_back(0, k);
      idx.emplace_back(1, k);
    }

    if (!l.evaluate(LambdaIndex(0, 0)).is_carrier()) {
      rep.add(Condition::Q1, "(0,0)", "value "
                                          + name(l.evaluate(LambdaIndex(0, 0)))
                                          + " is not K-least");
    }
    for (auto const& x : idx) {
      for (auto const& y : idx) {
        if (rep.done()) {
          return rep.take();
        }
        if (x != y && lambda_leq(x, y)
            && !m.ext_leq(l.evaluate(x), l.evaluate(y))) {
          rep.add(Condition::Q2, x.to_string() + " <= " + y.to_string(),
                  name(l.evaluate(x)) + " is not below "
                      + name(l.evaluate(y)));
        }
      }
    }
    for (auto const& x : idx) {
      if (x.m() == 0 || rep.done()) {
        continue;
      }
      if (x.i() == 1 && l.evaluate(x) == Element::l_star()) {
        rep.add(Condition::Q3, x.to_string(), "L* at index with i = 1");
      }
      if (x.i() == 0 && l.evaluate(x) == Element::r_star()) {
        rep.add(Condition::Q4, x.to_string(), "R* at index with i = 0");
      }
    }
    // (i, m) runs over both spellings (0,0) and (1,0) of the least index.
    for (std::uint32_t mm = 0; mm <= bound; ++mm) {
      for (unsigned i = 0; i <= 1; ++i) {
        Element const v = l.evaluate(LambdaIndex(mm == 0 ? 0 : i, mm));
        if (!v.is_carrier()) {
          continue;
        }
        for (std::uint32_t k = 1; k <= bound; ++k) {
          for (unsigned j = 0; j <= 1; ++j) {
            if (rep.done()) {
              return rep.take();
            }
            if ((i + j) % 2 != k % 2) {
              continue;
            }
            Word const    tau = gamma_inv(LambdaIndex(j, k));
            Element const lhs = m.lower_star(v.index(), tau);
            Element const rhs = l.evaluate(LambdaIndex(j, mm + k));
            if (!m.ext_leq(lhs, rhs)) {
              rep.add(Condition::Q5,
                      "(" + std::to_string(i) + "," + std::to_string(mm)
                          + ") k=" + std::to_string(k)
                          + " j=" + std::to_string(j),
                      "lower value " + name(lhs) + " is not below "
                          + name(rhs));
            }
          }
        }
      }
    }
    return rep.take();
  }

  inline bool in_phi(Ladder const& l) {
    return check_phi(l, CheckMode::first).clean();
  }

  inline bool in_phi1(LambdaLadder const& l) {
    return check_q(l, CheckMode::first).clean();
  }

}  // namespace ladderlab

#endif  // LADDERLAB_CONDITIONS_HPP
