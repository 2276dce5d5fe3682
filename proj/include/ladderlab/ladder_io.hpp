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
 * Ladder files:
 *
 *   model <name>
 *   e -> <element>
 *   l -> <element>        one line per word up to the stored depth,
 *   r -> <element>        tail l before tail r at each length
 *   tailL -> <element>
 *   tailR -> <element>
 *
 * Specials are written T*, L*, R*. Comments start with '#'.
 */

#ifndef LADDERLAB_LADDER_IO_HPP
#define LADDERLAB_LADDER_IO_HPP

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "ladder.hpp"
#include "model_io.hpp"

namespace ladderlab {

  inline std::string format_ladder(Ladder const& l) {
    auto const&        m = l.model();
    std::ostringstream out;
    out << "model " << m.name() << '\n';
    out << "e -> " << m.to_string(l.root()) << '\n';
    for (std::size_t k = 1; k <= l.depth(); ++k) {
      for (Letter x : {Letter::L, Letter::R}) {
        out << Word::ending_in(x, static_cast<std::uint32_t>(k)) << " -> "
            << m.to_string(l.level(k, x)) << '\n';
      }
    }
    out << "tailL -> " << m.to_string(l.tail_value(Letter::L)) << '\n';
    out << "tailR -> " << m.to_string(l.tail_value(Letter::R)) << '\n';
    return out.str();
  }

  /** Maps the model name in a ladder header to a model. May return null or
   *  throw for unknown names. */
  using ModelResolver = std::function<ModelPtr(std::string const&)>;

  inline Ladder parse_ladder(std::istream& in, ModelResolver const& resolve) {
    ModelPtr                         model;
    std::optional<Element>           root;
    std::optional<Element>           tail_l;
    std::optional<Element>           tail_r;
    std::map<std::size_t, Element>   by_index;
    std::size_t                      max_len = 0;
    std::string                      raw;
    std::size_t                      lineno = 0;

    auto element = [&](std::string const& text) {
      try {
        Element const e = model->parse_element(text);
        if (!model->in_extended(e)) {
          detail::fail_at(lineno, "element " + text + " is not K-least");
        }
        return e;
      } catch (ParseError const& e) {
        if (std::string(e.what()).rfind("line ", 0) == 0) {
          throw;
        }
        detail::fail_at(lineno, e.what());
      }
    };
    auto set_once = [&](std::optional<Element>& slot, Element e,
                        std::string const& key) {
      if (slot) {
        detail::fail_at(lineno, "duplicate entry for " + key);
      }
      slot = e;
    };

    while (std::getline(in, raw)) {
      ++lineno;
      std::string_view line = raw;
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      line = detail::trim(line);
      if (line.empty()) {
        continue;
      }
      if (!model) {
        auto toks = detail::split_ws(line);
        if (toks.size() != 2 || toks[0] != "model") {
          detail::fail_at(lineno, "expected \"model <name>\" header");
        }
        model = resolve(toks[1]);
        if (!model) {
          detail::fail_at(lineno, "unknown model \"" + toks[1] + "\"");
        }
        if (model->name() != toks[1]) {
          detail::fail_at(lineno, "ladder is for model " + toks[1]
                                      + " but model " + model->name()
                                      + " was given");
        }
        continue;
      }
      std::string lhs;
      std::string rhs;
      if (!detail::split_pair(line, "->", lhs, rhs)) {
        detail::fail_at(lineno, "expected \"word -> element\"");
      }
      Element const e = element(rhs);
      if (lhs == "tailL") {
        set_once(tail_l, e, lhs);
      } else if (lhs == "tailR") {
        set_once(tail_r, e, lhs);
      } else {
        Word w;
        try {
          w = Word::parse(lhs);
        } catch (ParseError const& err) {
          detail::fail_at(lineno, err.what());
        }
        if (w.empty()) {
          set_once(root, e, "e");
        } else if (!by_index.emplace(w.index(), e).second) {
          detail::fail_at(lineno, "duplicate entry for " + lhs);
        }
        max_len = std::max<std::size_t>(max_len, w.length());
      }
    }
    if (!model) {
      detail::fail_at(lineno, "missing \"model <name>\" header");
    }
    if (!root || !tail_l || !tail_r) {
      detail::fail_at(lineno, "ladder needs e, tailL and tailR entries");
    }
    std::vector<Element> cl;
    std::vector<Element> cr;
    for (std::size_t k = 1; k <= max_len; ++k) {
      for (Letter x : {Letter::L, Letter::R}) {
        Word const w = Word::ending_in(x, static_cast<std::uint32_t>(k));
        auto       it = by_index.find(w.index());
        if (it == by_index.end()) {
          detail::fail_at(lineno, "missing entry for word "
                                      + w.to_string());
        }
        (x == Letter::L ? cl : cr).push_back(it->second);
      }
    }
    return Ladder(model, *root, std::move(cl), std::move(cr), *tail_l,
                  *tail_r);
  }

  inline Ladder parse_ladder(std::string_view text, ModelPtr model) {
    std::istringstream in{std::string(text)};
    return parse_ladder(in, [&](std::string const&) { return model; });
  }

}  // namespace ladderlab

#endif  // LADDERLAB_LADDER_IO_HPP
