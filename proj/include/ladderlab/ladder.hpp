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
 * Ladders: eventually constant maps from words into the extended lattice of
 * a model, stored as a root value, two chains indexed by word length and
 * tail letter, and the two tail values taken by all longer words.
 */

#ifndef LADDERLAB_LADDER_HPP
#define LADDERLAB_LADDER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "builtin_models.hpp"
#include "kernel_model.hpp"
#include "theta.hpp"

namespace ladderlab {

  class ModelMismatch : public std::invalid_argument {
   public:
    ModelMismatch() : std::invalid_argument("ladders over different models") {}
  };

  class Ladder {
   public:
    /**
     * Words of length at most chain_l.size() read the chains; longer words
     * read the tails. The stored form is reduced to the least depth that
     * describes the same map.
     *
     * Throws std::invalid_argument for unequal chain lengths or values
     * outside the extended lattice (k0 plus specials).
     */
    Ladder(ModelPtr model, Element root, std::vector<Element> chain_l,
           std::vector<Element> chain_r, Element tail_l, Element tail_r)
        : model_(std::move(model)),
          root_(root),
          chain_l_(std::move(chain_l)),
          chain_r_(std::move(chain_r)),
          tail_l_(tail_l),
          tail_r_(tail_r) {
      if (!model_) {
        throw std::invalid_argument("ladder without a model");
      }
      if (chain_l_.size() != chain_r_.size()) {
        throw std::invalid_argument("ladder chains differ in length");
      }
      check_value(root_);
      check_value(tail_l_);
      check_value(tail_r_);
      for (std::size_t m = 0; m < chain_l_.size(); ++m) {
        check_value(chain_l_[m]);
        check_value(chain_r_[m]);
      }
      if (!chain_l_.empty()
          && (chain_l_.back() != tail_l_ || chain_r_.back() != tail_r_)) {
        chain_l_.push_back(tail_l_);
        chain_r_.push_back(tail_r_);
      }
      while (chain_l_.size() >= 2
             && chain_l_[chain_l_.size() - 2] == chain_l_.back()
             && chain_r_[chain_r_.size() - 2] == chain_r_.back()) {
        chain_l_.pop_back();
        chain_r_.pop_back();
      }
      if (chain_l_.size() == 1) {
        chain_l_.clear();
        chain_r_.clear();
      }
    }

    /** Levels 1..d given explicitly (d >= 1); level d repeats forever. */
    static Ladder from_levels(ModelPtr model, Element root,
                              std::vector<Element> chain_l,
                              std::vector<Element> chain_r) {
      if (chain_l.empty() || chain_r.empty()) {
        throw std::invalid_argument("from_levels needs at least one level");
      }
      Element const tl = chain_l.back();
      Element const tr = chain_r.back();
      return Ladder(std::move(model), root, std::move(chain_l),
                    std::move(chain_r), tl, tr);
    }

    /** Root value, then `rest` at every nonempty word. */
    static Ladder constant(ModelPtr model, Element root, Element rest) {
      return Ladder(std::move(model), root, {}, {}, rest, rest);
    }

    /** Samples `f` on words up to length `depth`; longer words repeat the
     *  values at length `depth`. */
    static Ladder from_function(ModelPtr model, std::size_t depth,
                                std::function<Element(Word const&)> const& f) {
      if (depth == 0) {
        depth = 1;
      }
      std::vector<Element> cl;
      std::vector<Element> cr;
      for (std::size_t m = 1; m <= depth; ++m) {
        auto const len = static_cast<std::uint32_t>(m);
        cl.push_back(f(Word::ending_in(Letter::L, len)));
        cr.push_back(f(Word::ending_in(Letter::R, len)));
      }
      return from_levels(std::move(model), f(Word{}), std::move(cl),
                         std::move(cr));
    }

    KernelModel const& model() const noexcept {
      return *model_;
    }

    ModelPtr const& model_ptr() const noexcept {
      return model_;
    }

    Element root() const noexcept {
      return root_;
    }

    /** Stabilization depth: values at length >= depth() (and > 0) repeat. */
    std::size_t depth() const noexcept {
      return chain_l_.size();
    }

    std::vector<Element> const& chain(Letter tail) const noexcept {
      return tail == Letter::L ? chain_l_ : chain_r_;
    }

    Element tail_value(Letter tail) const noexcept {
      return tail == Letter::L ? tail_l_ : tail_r_;
    }

    /** Value at the word of length m >= 1 ending in `tail`. */
    Element level(std::size_t m, Letter tail) const noexcept {
      auto const& c = chain(tail);
      return m <= c.size() ? c[m - 1] : tail_value(tail);
    }

    Element evaluate(Word const& w) const noexcept {
      if (w.empty()) {
        return root_;
      }
      return level(w.length(), *w.tail());
    }

    Element operator()(Word const& w) const noexcept {
      return evaluate(w);
    }

    bool has_special() const noexcept {
      auto special = [](Element e) { return e.is_special(); };
      return root_.is_special() || tail_l_.is_special()
             || tail_r_.is_special()
             || std::any_of(chain_l_.begin(), chain_l_.end(), special)
             || std::any_of(chain_r_.begin(), chain_r_.end(), special);
    }

    /** Same model object and same map. */
    friend bool operator==(Ladder const& a, Ladder const& b) noexcept {
      return a.model_ == b.model_ && a.root_ == b.root_
             && a.chain_l_ == b.chain_l_ && a.chain_r_ == b.chain_r_
             && a.tail_l_ == b.tail_l_ && a.tail_r_ == b.tail_r_;
    }

   private:
    void check_value(Element e) const {
      if (!model_->in_extended(e)) {
        throw std::invalid_argument(
            "ladder value "
            + (e.index() < model_->size() ? model_->symbol(e.index())
                                          : std::string("?"))
            + " is not K-least");
      }
    }

    ModelPtr             model_;
    Element              root_;
    std::vector<Element> chain_l_;
    std::vector<Element> chain_r_;
    Element              tail_l_;
    Element              tail_r_;
  };

  inline void require_same_model(Ladder const& a, Ladder const& b) {
    if (a.model_ptr() != b.model_ptr()) {
      throw ModelMismatch();
    }
  }

  namespace detail {
    template <typename Op>
    Ladder pointwise(Ladder const& a, Ladder const& b, Op op) {
      require_same_model(a, b);
      std::size_t const d = std::max<std::size_t>({a.depth(), b.depth(), 1});
      std::vector<Element> cl;
      std::vector<Element> cr;
      for (std::size_t m = 1; m <= d; ++m) {
        cl.push_back(op(a.level(m, Letter::L), b.level(m, Letter::L)));
        cr.push_back(op(a.level(m, Letter::R), b.level(m, Letter::R)));
      }
      return Ladder::from_levels(a.model_ptr(), op(a.root(), b.root()),
                                 std::move(cl), std::move(cr));
    }
  }  // namespace detail

  inline Ladder join(Ladder const& a, Ladder const& b) {
    auto const& m = a.model();
    return detail::pointwise(
        a, b, [&m](Element x, Element y) { return m.ext_join(x, y); });
  }

  inline Ladder meet(Ladder const& a, Ladder const& b) {
    auto const& m = a.model();
    return detail::pointwise(
        a, b, [&m](Element x, Element y) { return m.ext_meet(x, y); });
  }

  /** Pointwise order; words up to max depth + 1 decide it. */
  inline bool ladder_leq(Ladder const& a, Ladder const& b) {
    require_same_model(a, b);
    auto const& m = a.model();
    if (!m.ext_leq(a.root(), b.root())) {
      return false;
    }
    std::size_t const d = std::max(a.depth(), b.depth()) + 1;
    for (std::size_t k = 1; k <= d; ++k) {
      for (Letter x : {Letter::L, Letter::R}) {
        if (!m.ext_leq(a.level(k, x), b.level(k, x))) {
          return false;
        }
      }
    }
    return true;
  }

  /** The same map read on the index poset of pairs (i, m). */
  class LambdaLadder {
   public:
    explicit LambdaLadder(Ladder l) : ladder_(std::move(l)) {}

    Element evaluate(LambdaIndex x) const noexcept {
      if (x.m() == 0) {
        return ladder_.root();
      }
      return ladder_.level(x.m(), x.i() == 0 ? Letter::R : Letter::L);
    }

    Ladder const& underlying() const noexcept {
      return ladder_;
    }

    KernelModel const& model() const noexcept {
      return ladder_.model();
    }

    std::size_t depth() const noexcept {
      return ladder_.depth();
    }

    friend bool operator==(LambdaLadder const&, LambdaLadder const&) = default;

   private:
    Ladder ladder_;
  };

  inline LambdaLadder eta(Ladder const& l) {
    return LambdaLadder(l);
  }

  inline Ladder eta_inv(LambdaLadder const& l) {
    return l.underlying();
  }

}  // namespace ladderlab

#endif  // LADDERLAB_LADDER_HPP
