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
 * DOT output for the Hasse diagram of the truncated word poset and of a
 * model carrier. Edges point from the lower to the upper element.
 */

#ifndef LADDERLAB_HASSE_HPP
#define LADDERLAB_HASSE_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include "kernel_model.hpp"
#include "theta.hpp"

namespace ladderlab {

  /** Words of length <= depth; each word of length m + 1 covers both words
   *  of length m (and both letters cover the empty word). */
  inline std::string theta_hasse_dot(std::uint32_t depth) {
    std::ostringstream out;
    out << "digraph theta {\n  rankdir=BT;\n";
    for (Word const& w : enumerate_words(depth)) {
      out << "  \"" << w << "\";\n";
    }
    for (Word const& w : enumerate_words(depth)) {
      if (w.empty()) {
        continue;
      }
      if (w.length() == 1) {
        out << "  \"" << w << "\" -> \"e\";\n";
        continue;
      }
      for (Letter x : {Letter::L, Letter::R}) {
        out << "  \"" << w << "\" -> \"" << Word::ending_in(x, w.length() - 1)
            << "\";\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  /** Covering relation of the carrier; k0 elements are drawn boxed. */
  inline std::string model_hasse_dot(KernelModel const& m) {
    std::ostringstream out;
    out << "digraph \"" << m.name() << "\" {\n  rankdir=BT;\n";
    for (std::size_t i : m.topological_order()) {
      out << "  \"" << m.symbol(i) << "\"";
      if (m.in_k0(i)) {
        out << " [shape=box]";
      }
      out << ";\n";
    }
    for (std::size_t a : m.topological_order()) {
      for (std::size_t b : m.topological_order()) {
        if (a == b || !m.leq(a, b)) {
          continue;
        }
        bool cover = true;
        for (std::size_t c = 0; c < m.size() && cover; ++c) {
          cover = c == a || c == b || !(m.leq(a, c) && m.leq(c, b));
        }
        if (cover) {
          out << "  \"" << m.symbol(a) << "\" -> \"" << m.symbol(b)
              << "\";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace ladderlab

#endif  // LADDERLAB_HASSE_HPP
