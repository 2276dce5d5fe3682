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
 * Exhaustive enumeration of ladders of bounded stabilization depth.
 */

#ifndef LADDERLAB_ENUMERATE_HPP
#define LADDERLAB_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "conditions.hpp"
#include "ladder.hpp"

namespace ladderlab {

  /**
   * Calls cb(ladder) for every map with values in the extended lattice that
   * is constant from length `depth` on (all 2 * depth + 1 free values), clean
   * or not. Enumeration order: odometer over (root, l, r, rl, lr, ...), each
   * position running through extended_elements().
   */
  template <typename Callback>
  void for_each_candidate(ModelPtr const& model, std::size_t depth,
                          Callback&& cb) {
    if (depth == 0) {
      throw std::invalid_argument("candidate depth must be at least 1");
    }
    std::vector<Element> const vals = model->extended_elements();
    std::size_t const          npos = 2 * depth + 1;
    std::vector<std::size_t>   digit(npos, 0);
    std::vector<Element>       cl(depth);
    std::vector<Element>       cr(depth);
    while (true) {
      for (std::size_t k = 0; k < depth; ++k) {
        cl[k] = vals[digit[1 + 2 * k]];
        cr[k] = vals[digit[2 + 2 * k]];
      }
      cb(Ladder::from_levels(model, vals[digit[0]], cl, cr));
      std::size_t p = npos;
      while (p > 0) {
        --p;
        if (++digit[p] < vals.size()) {
          break;
        }
        digit[p] = 0;
        if (p == 0) {
          return;
        }
      }
    }
  }

  namespace detail {
    class PhiSearch {
     public:
      PhiSearch(ModelPtr model, std::size_t depth)
          : model_(std::move(model)),
            m_(*model_),
            depth_(depth),
            vals_(m_.extended_elements()),
            cl_(depth),
            cr_(depth) {}

      std::vector<Ladder> run() {
        for (std::size_t r : m_.k0()) {
          root_ = Element::carrier(r);
          place(1, Letter::L);
        }
        return std::move(out_);
      }

     private:
      Element value(Word const& w) const {
        if (w.empty()) {
          return root_;
        }
        auto const& c = *w.tail() == Letter::L ? cl_ : cr_;
        return c[w.length() - 1];
      }

      // Local conditions at one position whose prefixes are all assigned.
      bool admissible(std::size_t k, Letter x, Element v) const {
        if (x == Letter::L && v == Element::l_star()) {
          return false;
        }
        if (x == Letter::R && v == Element::r_star()) {
          return false;
        }
        if (k == 1) {
          if (!m_.ext_leq(v, root_)) {
            return false;
          }
        } else if (!m_.ext_leq(v, cl_[k - 2]) || !m_.ext_leq(v, cr_[k - 2])) {
          return false;
        }
        Word const w = Word::ending_in(x, static_cast<std::uint32_t>(k));
        if (!m_.ext_leq(m_.lower_star(root_.index(), w), v)) {
          return false;
        }
        // Every split w = sigma tau with both parts nonempty.
        for (std::uint32_t j = 1; j < k; ++j) {
          Word const sigma = Word::ending_in(w.at(j - 1), j);
          Element const s  = value(sigma);
          if (!s.is_carrier()) {
            continue;
          }
          Word const tau = Word::ending_in(x, static_cast<std::uint32_t>(k) - j);
          if (!m_.ext_leq(m_.lower_star(s.index(), tau), v)) {
            return false;
          }
        }
        return true;
      }

      void place(std::size_t k, Letter x) {
        if (k > depth_) {
          Ladder l = Ladder::from_levels(model_, root_, cl_, cr_);
          if (in_phi(l)) {
            out_.push_back(std::move(l));
          }
          return;
        }
        auto& slot = x == Letter::L ? cl_[k - 1] : cr_[k - 1];
        for (Element v : vals_) {
          if (!admissible(k, x, v)) {
            continue;
          }
          slot = v;
          if (x == Letter::L) {
            place(k, Letter::R);
          } else {
            place(k + 1, Letter::L);
          }
        }
      }

      ModelPtr             model_;
      KernelModel const&   m_;
      std::size_t          depth_;
      std::vector<Element> vals_;
      Element              root_;
      std::vector<Element> cl_;
      std::vector<Element> cr_;
      std::vector<Ladder>  out_;
    };
  }  // namespace detail

  /**
   * All ladders in Phi constant from length max_depth on, depth first:
   * root over k0, then l, r, rl, lr, ... each over k0 in topological order
   * followed by T*, L*, R*. Throws std::invalid_argument if max_depth < 1.
   */
  inline std::vector<Ladder> enumerate_phi(ModelPtr const& model,
                                           std::size_t     max_depth) {
    if (max_depth < 1) {
      throw std::invalid_argument("enumerate_phi needs max_depth >= 1");
    }
    return detail::PhiSearch(model, max_depth).run();
  }

}  // namespace ladderlab

#endif  // LADDERLAB_ENUMERATE_HPP
