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
 * Built-in models. Operator tables here are synthetic fixtures chosen to
 * satisfy the model axioms; apart from a few pinned entries they make no
 * claim about actual varieties of completely regular semigroups.
 */

#ifndef LADDERLAB_BUILTIN_MODELS_HPP
#define LADDERLAB_BUILTIN_MODELS_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kernel_model.hpp"

namespace ladderlab {

  /** A finite poset given by its elements and cover pairs (a, b): a < b. */
  struct PosetSpec {
    std::vector<std::string>                         elements;
    std::vector<std::pair<std::string, std::string>> covers;
  };

  inline PosetSpec chain_lattice(std::vector<std::string> names) {
    PosetSpec p;
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
      p.covers.emplace_back(names[i], names[i + 1]);
    }
    p.elements = std::move(names);
    return p;
  }

  /** Divisors of n ordered by divisibility. */
  inline PosetSpec divisor_lattice(unsigned n) {
    PosetSpec             p;
    std::vector<unsigned> divs;
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) {
        divs.push_back(d);
        p.elements.push_back(std::to_string(d));
      }
    }
    for (unsigned a : divs) {
      for (unsigned b : divs) {
        if (a == b || b % a != 0) {
          continue;
        }
        bool cover = true;
        for (unsigned c : divs) {
          if (c != a && c != b && c % a == 0 && b % c == 0) {
            cover = false;
            break;
          }
        }
        if (cover) {
          p.covers.emplace_back(std::to_string(a), std::to_string(b));
        }
      }
    }
    return p;
  }

  /**
   * Model whose carrier is a lattice of group varieties: every element is
   * K-least, the lower operators collapse to the bottom (read as T) and the
   * K-lower map is the identity.
   */
  inline ModelSpec orthodox_model_spec(PosetSpec const& groups,
                                       std::string name = "orthodox") {
    ModelSpec order_only;
    order_only.elements = groups.elements;
    order_only.covers   = groups.covers;
    KernelModel probe(std::move(order_only));
    if (!probe.is_partial_order() || !probe.bottom()) {
      throw ModelError("group lattice for " + name + " has no bottom");
    }
    std::string const bot = probe.symbol(*probe.bottom());

    ModelSpec s;
    s.name     = std::move(name);
    s.elements = groups.elements;
    s.covers   = groups.covers;
    s.k0       = groups.elements;
    s.designated.emplace_back(Role::T, bot);
    for (auto const& e : groups.elements) {
      s.low_l.emplace_back(e, bot);
      s.low_r.emplace_back(e, bot);
      s.kmap.emplace_back(e, e);
    }
    s.group_part = groups.elements;
    s.cs_part    = std::vector<std::string>{};
    return s;
  }

  /**
   * Eight-element band fixture on the Boolean lattice with atoms LZ, RZ, S.
   * Pinned entries: lowL(LZ) = T, lowR(LZ) = LZ, lowR(LNB) = LNB. Everything
   * else is synthetic. No family tagging.
   */
  inline ModelSpec demo_band_model_spec() {
    ModelSpec s;
    s.name     = "demo-band";
    s.elements = {"T", "LZ", "RZ", "S", "RB", "LNB", "RNB", "NB"};
    s.covers   = {{"T", "LZ"},   {"T", "RZ"},    {"T", "S"},
                  {"LZ", "RB"},  {"RZ", "RB"},   {"LZ", "LNB"},
                  {"S", "LNB"},  {"RZ", "RNB"},  {"S", "RNB"},
                  {"RB", "NB"},  {"LNB", "NB"},  {"RNB", "NB"}};
    s.k0       = {"T", "RB", "NB"};
    s.designated = {{Role::T, "T"},    {Role::S, "S"},     {Role::LZ, "LZ"},
                    {Role::RZ, "RZ"},  {Role::LNB, "LNB"}, {Role::RNB, "RNB"}};
    s.low_l = {{"T", "T"},    {"LZ", "T"},    {"RZ", "RZ"},   {"S", "S"},
               {"RB", "RZ"},  {"LNB", "S"},   {"RNB", "RNB"}, {"NB", "RNB"}};
    s.low_r = {{"T", "T"},    {"LZ", "LZ"},   {"RZ", "T"},    {"S", "S"},
               {"RB", "LZ"},  {"LNB", "LNB"}, {"RNB", "S"},   {"NB", "LNB"}};
    s.kmap  = {{"T", "T"},    {"LZ", "T"},    {"RZ", "T"},    {"S", "T"},
               {"RB", "RB"},  {"LNB", "T"},   {"RNB", "T"},   {"NB", "NB"}};
    return s;
  }

  /**
   * Eleven-element fixture mixing group-type and completely-simple-type
   * K-least elements. The lower part is {T, A} x {T, LZ, RZ, RB}; Q1, Q2 sit
   * above RBA with join CS. Lower operators land in {T, LZ, RZ}.
   */
  inline ModelSpec cs_model_spec() {
    ModelSpec s;
    s.name     = "cs";
    s.elements = {"T",  "A",  "LZ",  "RZ", "RB", "LA",
                  "RA", "RBA", "Q1", "Q2", "CS"};
    s.covers   = {{"T", "A"},    {"T", "LZ"},   {"T", "RZ"},   {"LZ", "RB"},
                  {"RZ", "RB"},  {"A", "LA"},   {"LZ", "LA"},  {"A", "RA"},
                  {"RZ", "RA"},  {"LA", "RBA"}, {"RA", "RBA"}, {"RB", "RBA"},
                  {"RBA", "Q1"}, {"RBA", "Q2"}, {"Q1", "CS"},  {"Q2", "CS"}};
    s.k0       = {"T", "A", "Q1", "Q2", "CS"};
    s.designated = {{Role::T, "T"}, {Role::LZ, "LZ"}, {Role::RZ, "RZ"}};
    for (auto const& e : s.elements) {
      bool const has_rz = e == "RZ" || e == "RB" || e == "RA" || e == "RBA";
      bool const has_lz = e == "LZ" || e == "RB" || e == "LA" || e == "RBA";
      bool const high   = e == "Q1" || e == "Q2" || e == "CS";
      s.low_l.emplace_back(e, has_rz || high ? "RZ" : "T");
      s.low_r.emplace_back(e, has_lz || high ? "LZ" : "T");
      std::string k = e;
      if (e == "LZ" || e == "RZ" || e == "RB") {
        k = "T";
      } else if (e == "LA" || e == "RA" || e == "RBA") {
        k = "A";
      }
      s.kmap.emplace_back(e, k);
    }
    s.group_part = std::vector<std::string>{"T", "A"};
    s.cs_part    = std::vector<std::string>{"Q1", "Q2", "CS"};
    return s;
  }

  using ModelPtr = std::shared_ptr<KernelModel const>;

  inline ModelPtr make_model(ModelSpec spec) {
    return std::make_shared<KernelModel const>(std::move(spec));
  }

  inline ModelPtr orthodox_model(PosetSpec const& groups,
                                 std::string       name = "orthodox") {
    return make_model(orthodox_model_spec(groups, std::move(name)));
  }

  inline ModelPtr chain2_model() {
    return orthodox_model(chain_lattice({"T", "A"}), "chain2");
  }

  inline ModelPtr chain3_model() {
    return orthodox_model(chain_lattice({"T", "A", "G"}), "chain3");
  }

  inline ModelPtr div12_model() {
    return orthodox_model(divisor_lattice(12), "orthodox-div12");
  }

  inline ModelPtr demo_band_model() {
    return make_model(demo_band_model_spec());
  }

  inline ModelPtr cs_model() {
    return make_model(cs_model_spec());
  }

  inline std::vector<std::string> builtin_model_names() {
    return {"chain2", "chain3", "orthodox-div12", "demo-band", "cs"};
  }

  /** Looks up a built-in by name; nullptr if there is none. */
  inline ModelPtr builtin_model(std::string_view name) {
    if (name == "chain2") {
      return chain2_model();
    }
    if (name == "chain3") {
      return chain3_model();
    }
    if (name == "orthodox-div12") {
      return div12_model();
    }
    if (name == "demo-band") {
      return demo_band_model();
    }
    if (name == "cs") {
      return cs_model();
    }
    return nullptr;
  }

}  // namespace ladderlab

#endif  // LADDERLAB_BUILTIN_MODELS_HPP
