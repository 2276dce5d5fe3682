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
 * Reference implementations used only by the tests. They work on plain
 * letter strings and brute force, sharing as little code with the library
 * as possible.
 */

#ifndef LADDERLAB_TESTS_ORACLES_HPP
#define LADDERLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ladderlab.hpp"

namespace oracle {

  using ladderlab::Element;
  using ladderlab::KernelModel;
  using ladderlab::Ladder;
  using ladderlab::ModelPtr;
  using ladderlab::ModelSpec;

  /** Concatenate, then collapse runs of equal letters (x x = x). */
  inline std::string multiply(std::string const& a, std::string const& b) {
    std::string s = a + b;
    std::string out;
    for (char c : s) {
      if (out.empty() || out.back() != c) {
        out.push_back(c);
      }
    }
    return out;
  }

  inline bool alternating(std::string const& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] == s[i - 1]) {
        return false;
      }
    }
    return true;
  }

  /** All alternating strings over {l, r} of length <= n, by brute force. */
  inline std::vector<std::string> words(std::size_t n) {
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::string> next;
      for (auto const& w : frontier) {
        for (char c : {'l', 'r'}) {
          next.push_back(w + c);
        }
      }
      for (auto const& w : next) {
        if (alternating(w)) {
          out.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  inline std::string mirror(std::string s) {
    std::reverse(s.begin(), s.end());
    return s;
  }

  /** "Longer is smaller". */
  inline bool word_leq(std::string const& a, std::string const& b) {
    return a.size() > b.size() || a == b;
  }

  /** Least upper bound in the extended order by exhaustive search. */
  inline Element brute_join(KernelModel const& m, Element a, Element b) {
    auto const all = m.extended_elements();
    for (Element c : all) {
      if (!m.ext_leq(a, c) || !m.ext_leq(b, c)) {
        continue;
      }
      bool least = true;
      for (Element d : all) {
        if (m.ext_leq(a, d) && m.ext_leq(b, d) && !m.ext_leq(c, d)) {
          least = false;
        }
      }
      if (least) {
        return c;
      }
    }
    throw std::logic_error("no join");
  }

  inline Element brute_meet(KernelModel const& m, Element a, Element b) {
    auto const all = m.extended_elements();
    for (Element c : all) {
      if (!m.ext_leq(c, a) || !m.ext_leq(c, b)) {
        continue;
      }
      bool greatest = true;
      for (Element d : all) {
        if (m.ext_leq(d, a) && m.ext_leq(d, b) && !m.ext_leq(d, c)) {
          greatest = false;
        }
      }
      if (greatest) {
        return c;
      }
    }
    throw std::logic_error("no meet");
  }

  /** Ladder value at a letter string. */
  inline Element at(Ladder const& l, std::string const& w) {
    return l.evaluate(ladderlab::Word::parse(w.empty() ? "e" : w));
  }

  /** Lower operators applied letter by letter, then K*, without the
   *  library's lower_star. */
  inline Element lower_star(KernelModel const& m, std::size_t v,
                            std::string const& tau) {
    for (char c : tau) {
      v = m.lower(c == 'l' ? ladderlab::Letter::L : ladderlab::Letter::R, v);
    }
    return m.kstar(v);
  }

  /** (P5) and (P6) over words up to `len`, straight from their wording. */
  inline bool p5_p6_hold(Ladder const& l, std::size_t len) {
    auto const& m  = l.model();
    auto const  ws = words(len);
    if (l.root().is_carrier()) {
      for (auto const& tau : ws) {
        if (!tau.empty()
            && !m.ext_leq(lower_star(m, l.root().index(), tau), at(l, tau))) {
          return false;
        }
      }
    }
    for (auto const& s : ws) {
      for (auto const& t : ws) {
        if (s.empty() || t.empty() || s.back() == t.front()) {
          continue;
        }
        Element const v = at(l, s);
        if (v.is_carrier()
            && !m.ext_leq(lower_star(m, v.index(), t), at(l, s + t))) {
          return false;
        }
      }
    }
    return true;
  }

  /** Order preservation over all word pairs up to `len`. */
  inline bool order_preserving(Ladder const& l, std::size_t len) {
    auto const ws = words(len);
    for (auto const& a : ws) {
      for (auto const& b : ws) {
        if (word_leq(a, b) && !l.model().ext_leq(at(l, a), at(l, b))) {
          return false;
        }
      }
    }
    return true;
  }

  /**
   * Every order-preserving map from words into k0 that is constant from
   * length `depth` on, by depth-first search over words in length order.
   * Returned as ladder file texts.
   */
  inline std::set<std::string> order_preserving_maps(ModelPtr const& m,
                                                     std::size_t     depth) {
    auto const                ws = words(depth);
    std::vector<std::size_t>  val(ws.size());
    std::set<std::string>     out;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == ws.size()) {
        // Words of length depth + 1 repeat the values at length depth,
        // so each tail must lie below both values at length depth.
        std::size_t const a = val[ws.size() - 2];
        std::size_t const b = val[ws.size() - 1];
        if (!(m->leq(a, b) && m->leq(b, a))) {
          return;
        }
        std::vector<Element> cl;
        std::vector<Element> cr;
        for (std::size_t k = 1; k < ws.size(); ++k) {
          (ws[k].back() == 'l' ? cl : cr).push_back(Element::carrier(val[k]));
        }
        out.insert(ladderlab::format_ladder(
            Ladder::from_levels(m, Element::carrier(val[0]), cl, cr)));
        return;
      }
      for (std::size_t v : m->k0()) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (word_leq(ws[i], ws[j])) {
            ok = m->leq(v, val[j]);
          }
        }
        if (ok) {
          val[i] = v;
          go(i + 1);
        }
      }
    };
    go(0);
    return out;
  }

  struct Mutant {
    std::string name;
    ModelSpec   spec;
    std::string axiom;
  };

  inline void set_entry(std::vector<ModelSpec::Pair>& table,
                        std::string const& from, std::string const& to) {
    for (auto& [a, b] : table) {
      if (a == from) {
        b = to;
        return;
      }
    }
    table.emplace_back(from, to);
  }

  inline void drop_entry(std::vector<ModelSpec::Pair>& table,
                         std::string const& from) {
    std::erase_if(table, [&](auto const& p) { return p.first == from; });
  }

  /** Single-defect variants of the built-in fixtures. */
  inline std::vector<Mutant> mutants() {
    using ladderlab::Role;
    auto const        demo = ladderlab::demo_band_model_spec();
    auto const        cs   = ladderlab::cs_model_spec();
    std::vector<Mutant> out;
    auto add = [&](std::string name, ModelSpec s, std::string axiom,
                   auto&& edit) {
      edit(s);
      out.push_back({std::move(name), std::move(s), std::move(axiom)});
    };
    add("lowL breaks monotonicity", demo, "lowL-monotone",
        [](ModelSpec& s) { set_entry(s.low_l, "NB", "S"); });
    add("no bottom", demo, "bottom", [](ModelSpec& s) {
      std::erase_if(s.covers, [](auto const& p) { return p.first == "T"; });
    });
    add("lowR not idempotent", demo, "lowR-idempotent",
        [](ModelSpec& s) { set_entry(s.low_r, "NB", "RB"); });
    add("kmap leaves k0", demo, "kmap-range",
        [](ModelSpec& s) { set_entry(s.kmap, "LZ", "LZ"); });
    add("designated T above bottom", demo, "T-bottom", [](ModelSpec& s) {
      for (auto& [r, e] : s.designated) {
        if (r == Role::T) {
          e = "RB";
        }
      }
    });
    add("lowL not decreasing", demo, "lowL-decreasing",
        [](ModelSpec& s) { set_entry(s.low_l, "LZ", "RZ"); });
    add("lowR has a gap", demo, "lowR-total",
        [](ModelSpec& s) { drop_entry(s.low_r, "S"); });
    add("kmap moves a k0 element", demo, "kmap-k0-identity",
        [](ModelSpec& s) { set_entry(s.kmap, "RB", "T"); });
    add("two roles on one element", demo, "roles-distinct", [](ModelSpec& s) {
      for (auto& [r, e] : s.designated) {
        if (r == Role::S) {
          e = "LZ";
        }
      }
    });
    add("S designated inside k0", demo, "role-in-k0", [](ModelSpec& s) {
      for (auto& [r, e] : s.designated) {
        if (r == Role::S) {
          e = "RB";
        }
      }
    });
    add("k0 not join-closed", cs, "k0-join-closed",
        [](ModelSpec& s) { std::erase(s.k0, "CS"); });
    add("carrier not a lattice", demo, "lattice", [](ModelSpec& s) {
      s.elements.push_back("RB2");
      s.covers.insert(s.covers.end(),
                      {{"LZ", "RB2"}, {"RZ", "RB2"}, {"RB2", "NB"}});
      s.low_l.emplace_back("RB2", "RZ");
      s.low_r.emplace_back("RB2", "LZ");
      s.kmap.emplace_back("RB2", "T");
    });
    add("order has a cycle", demo, "order-antisymmetric",
        [](ModelSpec& s) { s.covers.emplace_back("NB", "T"); });
    add("tagged part outside k0", cs, "parts-in-k0",
        [](ModelSpec& s) { s.group_part->push_back("LZ"); });
    return out;
  }

}  // namespace oracle

#endif  // LADDERLAB_TESTS_ORACLES_HPP
