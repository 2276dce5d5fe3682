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

#include <catch2/catch_amalgamated.hpp>

#include "ladderlab.hpp"
#include "oracles.hpp"

using namespace ladderlab;

namespace {
  Element const TS = Element::t_star();

  Element c(ModelPtr const& m, char const* s) {
    return Element::carrier(m->require(s));
  }

  bool member(Family f, Ladder const& l) {
    return in_family(f, l, CheckMode::first).clean();
  }
}  // namespace

TEST_CASE("family names", "[families]") {
  for (Family f : {Family::BO, Family::BO_bar, Family::BLO, Family::BLO_bar}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK_FALSE(parse_family("bo").has_value());
  CHECK(parse_construct("LRO") == Construct::LRO);
  CHECK_FALSE(parse_construct("lro").has_value());
}

TEST_CASE("family examples", "[families]") {
  auto const m = cs_model();
  auto const plain = Ladder::constant(m, c(m, "A"), c(m, "T"));
  CHECK(member(Family::BO, plain));
  CHECK(member(Family::BLO, plain));
  CHECK_FALSE(member(Family::BO_bar, plain));
  CHECK(in_family(Family::BO_bar, plain).has(Condition::Tstar));

  auto const cs = Ladder::constant(m, c(m, "Q1"), c(m, "A"));
  CHECK_FALSE(member(Family::BO, cs));
  CHECK(in_family(Family::BO, cs).violations[0].witness == "e");
  CHECK(in_family(Family::BO, cs).violations[0].message
        == "value Q1 not allowed in BO");
  CHECK(member(Family::BLO, cs));

  auto const starred = Ladder::constant(m, c(m, "A"), TS);
  CHECK(member(Family::BLO_bar, starred));
  CHECK(member(Family::BO_bar, starred));
  CHECK_FALSE(member(Family::BLO, starred));

  // Q1 lowers to R* along l.
  auto const low = in_family(Family::BLO_bar, Ladder::constant(m, c(m, "Q1"), TS));
  CHECK(low.has(Condition::P5star));
  CHECK(low.violations[0].message
        == "lower value R* of the root is not below T*");

  CHECK_THROWS_AS(in_family(Family::BO, Ladder::constant(demo_band_model(),
                                                         Element::carrier(0),
                                                         TS)),
                  ModelError);
}

TEST_CASE("orthodox families split the ladders", "[families][property]") {
  for (auto const& name : {"chain2", "chain3", "orthodox-div12"}) {
    auto const m = builtin_model(name);
    INFO(name);
    for_each_candidate(m, 2, [&](Ladder const& l) {
      bool const bo  = member(Family::BO, l);
      bool const bar = member(Family::BO_bar, l);
      CHECK(!(bo && bar));
      if ((bo || bar) != in_phi(l)) {
        FAIL_CHECK(format_ladder(l));
      }
    });
  }
}

TEST_CASE("BLO_bar agrees with the ladder conditions on members of Phi",
          "[families][property]") {
  auto const m = cs_model();
  for (auto const& l : enumerate_phi(m, 3)) {
    CHECK(member(Family::BLO_bar, l) == l.has_special());
    CHECK(member(Family::BLO, l) == !l.has_special());
  }
}

TEST_CASE("single-letter checks miss deeper lower values", "[families]") {
  // Q1 at lr lowers along l to R*, which is not below T* at lrl.
  auto const   m = cs_model();
  Ladder const l = Ladder::from_levels(m, c(m, "Q1"),
                                       {c(m, "Q1"), c(m, "T"), TS},
                                       {c(m, "Q1"), c(m, "Q1"), TS});
  CHECK(member(Family::BLO_bar, l));
  auto const rep = check_phi(l);
  CHECK(rep.has(Condition::P6));
  CHECK_FALSE(rep.has(Condition::P5));
}

TEST_CASE("constructions", "[families]") {
  auto const d = div12_model();
  auto const p = embed_pk(d, d->require("12"), d->require("4"));
  CHECK(p == Ladder::constant(d, c(d, "12"), c(d, "4")));
  CHECK_THROWS_AS(embed_pk(d, d->require("4"), d->require("6")),
                  std::invalid_argument);

  auto const m = cs_model();
  CHECK(embed_qk(m, m->require("CS"), m->require("Q1"))
        == Ladder::constant(m, c(m, "CS"), c(m, "Q1")));
  CHECK_THROWS_AS(embed_qk(m, m->require("Q1"), m->require("CS")),
                  std::invalid_argument);
  CHECK_THROWS_AS(embed_qk(m, m->require("A"), m->require("A")),
                  std::invalid_argument);
  CHECK_THROWS_AS(embed_qk(m, m->require("Q1"), m->require("LZ")),
                  std::invalid_argument);
  CHECK_THROWS_AS(embed_pk(m, m->require("Q1"), m->require("A")),
                  std::invalid_argument);

  auto const c3 = chain3_model();
  auto const l  = lro_ladder(c3, c3->require("A"));
  CHECK(l == Ladder::from_levels(c3, c(c3, "G"), {TS, TS}, {c(c3, "A"), TS}));
  CHECK_THROWS_AS(lro_ladder(m, m->require("A")), std::invalid_argument);
}

TEST_CASE("embedding checks", "[families]") {
  auto const d  = div12_model();
  auto const pk = embedding_check(d, Construct::PK, d->require("12"));
  CHECK(pk.ok());
  CHECK(pk.pairs == 36);

  auto const m  = cs_model();
  auto const qk = embedding_check(m, Construct::QK, m->require("CS"));
  CHECK(qk.ok());
  CHECK(construct_domain(m, Construct::QK, m->require("CS")).size() == 5);

  auto const c3  = chain3_model();
  auto const lro = embedding_check(c3, Construct::LRO, 0);
  REQUIRE(lro.pairs == 9);
  CHECK(lro.failures.size() == 6);
  for (auto const& f : lro.failures) {
    CHECK(f.rfind("distinct arguments Tl-related", 0) == 0);
  }
}

TEST_CASE("embedding check catches planted defects", "[families]") {
  auto const d      = div12_model();
  auto const top    = d->require("12");
  auto const domain = construct_domain(d, Construct::PK, top);

  auto swapped = [&](std::size_t u) {
    std::size_t const v = u == d->require("2")   ? d->require("3")
                          : u == d->require("3") ? d->require("2")
                                                 : u;
    return embed_pk(d, top, v);
  };
  CHECK_FALSE(embedding_check(d, swapped, domain).ok());

  auto collapsed = [&](std::size_t) { return embed_pk(d, top, top); };
  auto const rep = embedding_check(d, collapsed, domain);
  CHECK(std::find(rep.failures.begin(), rep.failures.end(),
                  "not injective at (1,2)")
        != rep.failures.end());

  auto rooted = [&](std::size_t u) {
    return Ladder::constant(d, Element::carrier(u), Element::carrier(u));
  };
  auto const r2 = embedding_check(d, rooted, domain);
  CHECK(std::find(r2.failures.begin(), r2.failures.end(),
                  "images not K-related at (1,2)")
        != r2.failures.end());

  std::vector<std::size_t> const open{d->require("4"), d->require("6")};
  auto const r3 = embedding_check(d, construct_fn(d, Construct::PK, top), open);
  CHECK(r3.failures.front() == "domain not closed under join/meet at (4,6)");
}

TEST_CASE("intervals", "[families]") {
  auto const m   = chain2_model();
  auto const all = enumerate_phi(m, 1);
  auto const A   = c(m, "A");
  auto const T   = c(m, "T");
  std::vector<Ladder> const chain{Ladder::constant(m, A, TS),
                                  Ladder::constant(m, A, T),
                                  Ladder::constant(m, A, A)};
  CHECK(is_interval_in(chain, all));
  CHECK_FALSE(is_interval_in({chain[0], chain[2]}, all));
  CHECK(is_interval_in({}, all));
  CHECK(is_interval_in(all, all));
}

TEST_CASE("family members satisfy the ladder conditions",
          "[families][property]") {
  // BLO_bar is left out: see "single-letter checks miss deeper lower values".
  for (auto const& name : {"chain3", "orthodox-div12", "cs"}) {
    auto const m = builtin_model(name);
    INFO(name);
    for_each_candidate(m, 2, [&](Ladder const& l) {
      for (Family f : {Family::BO, Family::BO_bar, Family::BLO}) {
        if (member(f, l) && !in_phi(l)) {
          FAIL_CHECK(family_name(f) << "\n" << format_ladder(l));
        }
      }
    });
  }
}

TEST_CASE("families are closed under join and meet", "[families][property]") {
  for (auto const& name : {"orthodox-div12", "cs"}) {
    auto const m  = builtin_model(name);
    auto const ls = enumerate_phi(m, 2);
    for (Family f : {Family::BO, Family::BO_bar, Family::BLO, Family::BLO_bar}) {
      std::vector<Ladder> in;
      for (auto const& l : ls) {
        if (member(f, l)) {
          in.push_back(l);
        }
      }
      INFO(name << " " << family_name(f) << " " << in.size());
      for (auto const& a : in) {
        for (auto const& b : in) {
          CHECK(member(f, join(a, b)));
          CHECK(member(f, meet(a, b)));
        }
      }
    }
  }
}
