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
 * Family predicates for the orthodox and locally orthodox intervals and the
 * three ladder constructions that embed group lattices into Phi.
 */

#ifndef LADDERLAB_FAMILIES_HPP
#define LADDERLAB_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conditions.hpp"
#include "correspondence.hpp"
#include "enumerate.hpp"
#include "ladder.hpp"

namespace ladderlab {

  enum class Family : std::uint8_t { BO, BO_bar, BLO, BLO_bar };

  constexpr std::string_view family_name(Family f) noexcept {
    switch (f) {
      case Family::BO:
        return "BO";
      case Family::BO_bar:
        return "BO_bar";
      case Family::BLO:
        return "BLO";
      case Family::BLO_bar:
        return "BLO_bar";
    }
    return "?";
  }

  inline std::optional<Family> parse_family(std::string_view s) noexcept {
    for (Family f : {Family::BO, Family::BO_bar, Family::BLO, Family::BLO_bar}) {
      if (family_name(f) == s) {
        return f;
      }
    }
    return std::nullopt;
  }

  inline ConditionReport in_family(Family f, Ladder const& l,
                                   CheckMode mode = CheckMode::all) {
    auto const& m = l.model();
    if (!m.has_part_tags()) {
      throw ModelError("model " + m.name()
                       + " has no group/cs part classification");
    }
    bool const cs_ok      = f == Family::BLO || f == Family::BLO_bar;
    bool const special_ok = f == Family::BO_bar || f == Family::BLO_bar;
    detail::Reporter rep(mode);

    bool any_tstar = false;
    for (Word const& w :
         enumerate_words(static_cast<std::uint32_t>(l.depth() + 1))) {
      Element const v  = l.evaluate(w);
      any_tstar        = any_tstar || v == Element::t_star();
      bool const allowed
          = v.is_special()
                ? special_ok
                : m.in_group_part(v.index())
                      || (cs_ok && m.in_cs_part(v.index()));
      if (!allowed) {
        rep.add(Condition::group_part, w.to_string(),
                "value " + m.to_string(v) + " not allowed in "
                    + std::string(family_name(f)));
      }
    }
    check_p1_to_p4(l, rep);
    if (special_ok && !any_tstar) {
      rep.add(Condition::Tstar, "-", "no word takes the value T*");
    }
    if (f == Family::BLO_bar) {
      Word const wl = Word::letter(Letter::L);
      Word const wr = Word::letter(Letter::R);
      if (l.root().is_carrier()) {
        for (Word const& tau : {wl, wr}) {
          Element const lhs = m.lower_star(l.root().index(), tau);
          if (!m.ext_leq(lhs, l.evaluate(tau))) {
            rep.add(Condition::P5star, "tau=" + tau.to_string(),
                    "lower value " + m.to_string(lhs)
                        + " of the root is not below "
                        + m.to_string(l.evaluate(tau)));
          }
        }
      }
      for (auto [sigma, tau] : {std::pair{wl, wr}, std::pair{wr, wl}}) {
        Element const s = l.evaluate(sigma);
        if (!s.is_carrier()) {
          continue;
        }
        Element const lhs = m.lower_star(s.index(), tau);
        Element const rhs = l.evaluate(multiply(sigma, tau));
        if (!m.ext_leq(lhs, rhs)) {
          rep.add(Condition::P6star,
                  "sigma=" + sigma.to_string() + " tau=" + tau.to_string(),
                  "lower value " + m.to_string(lhs) + " is not below "
                      + m.to_string(rhs));
        }
      }
    }
    return rep.take();
  }

  ////////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////////

  /** Root P, every other word U. P and U in the group part, U <= P. */
  inline Ladder embed_pk(ModelPtr const& m, std::size_t p, std::size_t u) {
    if (!m->in_group_part(p) || !m->in_group_part(u)) {
      throw std::invalid_argument("embed_pk needs group-part arguments");
    }
    if (!m->leq(u, p)) {
      throw std::invalid_argument("embed_pk needs U <= P");
    }
    return Ladder::constant(m, Element::carrier(p), Element::carrier(u));
  }

  /** Root Q (cs part), every other word U (admissible, U <= Q). */
  inline Ladder embed_qk(ModelPtr const& m, std::size_t q, std::size_t u) {
    if (!m->in_cs_part(q)) {
      throw std::invalid_argument("embed_qk needs a cs-part root");
    }
    if (!m->admissible(u)) {
      throw std::invalid_argument("embed_qk: " + m->symbol(u)
                                  + " is not admissible");
    }
    if (!m->leq(u, q)) {
      throw std::invalid_argument("embed_qk needs U <= Q");
    }
    return Ladder::constant(m, Element::carrier(q), Element::carrier(u));
  }

  /** Root G (the carrier top), U at r, T* at every other nonempty word. */
  inline Ladder lro_ladder(ModelPtr const& m, std::size_t u) {
    if (!m->in_group_part(u)) {
      throw std::invalid_argument("lro_ladder needs a group-part argument");
    }
    auto const g = m->top();
    if (!g || !m->in_group_part(*g)) {
      throw std::invalid_argument("lro_ladder needs a group-part top");
    }
    Element const t = Element::t_star();
    return Ladder::from_levels(m, Element::carrier(*g),
                               {t, t}, {Element::carrier(u), t});
  }

  enum class Construct : std::uint8_t { PK, QK, LRO };

  inline std::optional<Construct> parse_construct(std::string_view s) {
    if (s == "PK") {
      return Construct::PK;
    }
    if (s == "QK") {
      return Construct::QK;
    }
    if (s == "LRO") {
      return Construct::LRO;
    }
    return std::nullopt;
  }

  struct EmbeddingReport {
    std::vector<std::string> failures;
    std::size_t              pairs = 0;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  /**
   * Checks that `construct` maps the sublattice `domain` (closed under the
   * carrier join and the K-least meet) injectively and homomorphically into
   * ladders, that all images are K-related and that distinct arguments give
   * Tl-unrelated images.
   */
  inline EmbeddingReport embedding_check(
      ModelPtr const& m, std::function<Ladder(std::size_t)> const& construct,
      std::vector<std::size_t> const& domain) {
    EmbeddingReport rep;
    auto            fail = [&](std::string msg) {
      rep.failures.push_back(std::move(msg));
    };
    std::vector<Ladder> image;
    for (std::size_t u : domain) {
      image.push_back(construct(u));
      if (!in_phi(image.back())) {
        fail("image of " + m->symbol(u) + " is not in Phi");
      }
    }
    auto position = [&](std::size_t v) -> std::optional<std::size_t> {
      auto it = std::find(domain.begin(), domain.end(), v);
      if (it == domain.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - domain.begin());
    };
    for (std::size_t a = 0; a < domain.size(); ++a) {
      for (std::size_t b = 0; b < domain.size(); ++b) {
        ++rep.pairs;
        std::string const pair
            = "(" + m->symbol(domain[a]) + "," + m->symbol(domain[b]) + ")";
        std::size_t const j = m->join(domain[a], domain[b]);
        Element const     mt
            = m->ext_meet(Element::carrier(domain[a]),
                          Element::carrier(domain[b]));
        auto const pj = position(j);
        auto const pm = position(mt.index());
        if (!pj || !pm) {
          fail("domain not closed under join/meet at " + pair);
          continue;
        }
        if (construct(j) != join(image[a], image[b])) {
          fail("join not preserved at " + pair);
        }
        if (construct(mt.index()) != meet(image[a], image[b])) {
          fail("meet not preserved at " + pair);
        }
        if (!related(Relation::K, image[a], image[b])) {
          fail("images not K-related at " + pair);
        }
        if (a != b) {
          if (image[a] == image[b]) {
            fail("not injective at " + pair);
          }
          if (related(Relation::Tl, image[a], image[b])) {
            fail("distinct arguments Tl-related at " + pair);
          }
        }
      }
    }
    return rep;
  }

  /** Elements of the construct's natural domain. For PK and QK the
   *  argument is P resp. Q; LRO ignores it. */
  inline std::vector<std::size_t> construct_domain(ModelPtr const& m,
                                                   Construct c,
                                                   std::size_t arg) {
    std::vector<std::size_t> d;
    for (std::size_t u : m->topological_order()) {
      bool in = false;
      switch (c) {
        case Construct::PK:
          in = m->in_group_part(u) && m->leq(u, arg);
          break;
        case Construct::QK:
          in = m->admissible(u) && m->leq(u, arg);
          break;
        case Construct::LRO:
          in = m->in_group_part(u);
          break;
      }
      if (in) {
        d.push_back(u);
      }
    }
    return d;
  }

  inline std::function<Ladder(std::size_t)>
  construct_fn(ModelPtr const& m, Construct c, std::size_t arg) {
    switch (c) {
      case Construct::PK:
        return [m, arg](std::size_t u) { return embed_pk(m, arg, u); };
      case Construct::QK:
        return [m, arg](std::size_t u) { return embed_qk(m, arg, u); };
      case Construct::LRO:
        break;
    }
    return [m](std::size_t u) { return lro_ladder(m, u); };
  }

  inline EmbeddingReport embedding_check(ModelPtr const& m, Construct c,
                                         std::size_t arg) {
    return embedding_check(m, construct_fn(m, c, arg),
                           construct_domain(m, c, arg));
  }

  /**
   * Order-convexity of a set of ladders inside `universe`: every member of
   * the universe lying between the pointwise meet and join of the set
   * belongs to the set, and the set contains that meet and join.
   */
  inline bool is_interval_in(std::vector<Ladder> const& set,
                             std::vector<Ladder> const& universe) {
    if (set.empty()) {
      return true;
    }
    Ladder lo = set.front();
    Ladder hi = set.front();
    for (auto const& l : set) {
      lo = meet(lo, l);
      hi = join(hi, l);
    }
    auto member = [&](Ladder const& x) {
      return std::find(set.begin(), set.end(), x) != set.end();
    };
    if (!member(lo) || !member(hi)) {
      return false;
    }
    for (auto const& x : universe) {
      if (ladder_leq(lo, x) && ladder_leq(x, hi) && !member(x)) {
        return false;
      }
    }
    return true;
  }

}  // namespace ladderlab

#endif  // LADDERLAB_FAMILIES_HPP
