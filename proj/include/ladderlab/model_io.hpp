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
 * Line-oriented model files:
 *
 *   # comment
 *   [model]        name = demo
 *   [elements]     T a b          (any number per line)
 *   [order]        T < a          (cover pairs)
 *   [k0]           T b
 *   [designated]   T = T
 *   [lowL]         a -> T         ([lowR] and [kmap] likewise)
 *   [group]        T b            ([cs] and [admissible] likewise)
 */

#ifndef LADDERLAB_MODEL_IO_HPP
#define LADDERLAB_MODEL_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kernel_model.hpp"

namespace ladderlab {

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    inline std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    /** Splits "lhs SEP rhs" into two trimmed, non-empty parts. */
    inline bool split_pair(std::string_view s, std::string_view sep,
                           std::string& lhs, std::string& rhs) {
      auto const p = s.find(sep);
      if (p == std::string_view::npos) {
        return false;
      }
      lhs = std::string(trim(s.substr(0, p)));
      rhs = std::string(trim(s.substr(p + sep.size())));
      return !lhs.empty() && !rhs.empty()
             && lhs.find_first_of(" \t") == std::string::npos
             && rhs.find_first_of(" \t") == std::string::npos;
    }

    [[noreturn]] inline void fail_at(std::size_t line, std::string const& msg) {
      throw ParseError("line " + std::to_string(line) + ": " + msg);
    }
  }  // namespace detail

  /** Parses a model file. `default_name` is used if there is no [model]. */
  inline ModelSpec parse_model(std::istream& in,
                               std::string   default_name = "model") {
    ModelSpec   s;
    s.name = std::move(default_name);
    std::string section;
    std::string raw;
    std::size_t lineno = 0;
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
      if (line.front() == '[') {
        if (line.back() != ']') {
          detail::fail_at(lineno, "malformed section header");
        }
        section = std::string(line.substr(1, line.size() - 2));
        if (section == "group") {
          s.group_part.emplace();
        } else if (section == "cs") {
          s.cs_part.emplace();
        } else if (section == "admissible") {
          s.admissible.emplace();
        } else if (section != "model" && section != "elements"
                   && section != "order" && section != "k0"
                   && section != "designated" && section != "lowL"
                   && section != "lowR" && section != "kmap") {
          detail::fail_at(lineno, "unknown section [" + section + "]");
        }
        continue;
      }
      std::string lhs;
      std::string rhs;
      if (section.empty()) {
        detail::fail_at(lineno, "content before first section");
      } else if (section == "model") {
        if (!detail::split_pair(line, "=", lhs, rhs) || lhs != "name") {
          detail::fail_at(lineno, "expected \"name = <name>\"");
        }
        s.name = rhs;
      } else if (section == "order") {
        if (!detail::split_pair(line, "<", lhs, rhs)) {
          detail::fail_at(lineno, "expected \"a < b\"");
        }
        s.covers.emplace_back(lhs, rhs);
      } else if (section == "designated") {
        if (!detail::split_pair(line, "=", lhs, rhs)) {
          detail::fail_at(lineno, "expected \"ROLE = element\"");
        }
        auto r = parse_role(lhs);
        if (!r) {
          detail::fail_at(lineno, "unknown role \"" + lhs + "\"");
        }
        s.designated.emplace_back(*r, rhs);
      } else if (section == "lowL" || section == "lowR" || section == "kmap") {
        if (!detail::split_pair(line, "->", lhs, rhs)) {
          detail::fail_at(lineno, "expected \"v -> w\"");
        }
        auto& table = section == "lowL"   ? s.low_l
                      : section == "lowR" ? s.low_r
                                          : s.kmap;
        table.emplace_back(lhs, rhs);
      } else {
        auto& list = section == "elements" ? s.elements
                     : section == "k0"     ? s.k0
                     : section == "group"  ? *s.group_part
                     : section == "cs"     ? *s.cs_part
                                           : *s.admissible;
        for (auto& tok : detail::split_ws(line)) {
          if (!valid_symbol_name(tok)) {
            detail::fail_at(lineno, "invalid element name \"" + tok + "\"");
          }
          list.push_back(std::move(tok));
        }
      }
    }
    return s;
  }

  inline ModelSpec parse_model(std::string_view text,
                               std::string      default_name = "model") {
    std::istringstream in{std::string(text)};
    return parse_model(in, std::move(default_name));
  }

  inline ModelSpec load_model_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open model file " + path);
    }
    std::string stem = path;
    if (auto p = stem.find_last_of('/'); p != std::string::npos) {
      stem = stem.substr(p + 1);
    }
    if (auto p = stem.find('.'); p != std::string::npos && p > 0) {
      stem = stem.substr(0, p);
    }
    return parse_model(in, stem);
  }

  inline std::string format_model(ModelSpec const& s) {
    std::ostringstream out;
    auto list = [&](char const* header, std::vector<std::string> const& v) {
      out << '[' << header << "]\n";
      for (auto const& e : v) {
        out << e << '\n';
      }
    };
    auto pairs = [&](char const* header, auto const& v, char const* sep) {
      out << '[' << header << "]\n";
      for (auto const& [a, b] : v) {
        out << a << sep << b << '\n';
      }
    };
    out << "[model]\nname = " << s.name << '\n';
    list("elements", s.elements);
    pairs("order", s.covers, " < ");
    list("k0", s.k0);
    out << "[designated]\n";
    for (auto const& [r, e] : s.designated) {
      out << role_name(r) << " = " << e << '\n';
    }
    pairs("lowL", s.low_l, " -> ");
    pairs("lowR", s.low_r, " -> ");
    pairs("kmap", s.kmap, " -> ");
    if (s.group_part) {
      list("group", *s.group_part);
    }
    if (s.cs_part) {
      list("cs", *s.cs_part);
    }
    if (s.admissible) {
      list("admissible", *s.admissible);
    }
    return out.str();
  }

}  // namespace ladderlab

#endif  // LADDERLAB_MODEL_IO_HPP
