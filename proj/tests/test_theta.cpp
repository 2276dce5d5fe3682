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

#include <set>

#include "ladderlab/theta.hpp"
#include "oracles.hpp"

using namespace ladderlab;

namespace {
  Word w(char const* s) {
    return Word::parse(s);
  }
}  // namespace

TEST_CASE("multiply follows the junction rule", "[theta]") {
  CHECK(multiply(w("l"), w("r")) == w("lr"));
  CHECK(multiply(w("lr"), w("rl")) == w("lrl"));
  CHECK(multiply(w("e"), w("l")) == w("l"));
  CHECK(multiply(w("rl"), w("e")) == w("rl"));
  CHECK(w("l") * w("l") == w("l"));
  CHECK(w("r") * w("r") == w("r"));
}

TEST_CASE("multiply agrees with collapsing concatenation", "[theta]") {
  for (auto const& a : oracle::words(7)) {
    for (auto const& b : oracle::words(7)) {
      Word const got = multiply(Word::parse(a.empty() ? "e" : a),
                                Word::parse(b.empty() ? "e" : b));
      std::string const ref = oracle::multiply(a, b);
      CHECK(got.to_string() == (ref.empty() ? "e" : ref));
    }
  }
}

TEST_CASE("accessors", "[theta]") {
  Word const rlr = w("rlr");
  CHECK(rlr.length() == 3);
  CHECK(rlr.head() == Letter::R);
  CHECK(rlr.tail() == Letter::R);
  CHECK(rlr.mirror() == rlr);
  CHECK(w("lr").mirror() == w("rl"));
  CHECK(w("lrl").at(1) == Letter::R);

  Word const e;
  CHECK(e.length() == 0);
  CHECK_FALSE(e.head().has_value());
  CHECK_FALSE(e.tail().has_value());
  CHECK(e.mirror() == e);
}

TEST_CASE("parsing and printing", "[theta]") {
  CHECK(w("e").empty());
  CHECK(w("lrl").to_string() == "lrl");
  CHECK(Word{}.to_string() == "e");
  CHECK_THROWS_AS(Word::parse("ll"), ParseError);
  CHECK_THROWS_AS(Word::parse("lrr"), ParseError);
  CHECK_THROWS_AS(Word::parse("x"), ParseError);
  CHECK_THROWS_AS(Word::parse(""), ParseError);
  CHECK_THROWS_AS(Word::from_letters({Letter::L, Letter::L}), ParseError);
  CHECK(Word::from_letters({Letter::R, Letter::L}) == w("rl"));
}

TEST_CASE("word order", "[theta]") {
  CHECK(word_leq(w("lr"), w("r")));
  CHECK_FALSE(word_leq(w("l"), w("r")));
  CHECK(word_leq(w("lrl"), w("lrl")));
  CHECK_FALSE(word_leq(w("r"), w("lr")));
  CHECK(word_leq(w("l"), Word{}));
}

TEST_CASE("enumerate_words", "[theta]") {
  CHECK(enumerate_words(0) == std::vector<Word>{Word{}});
  CHECK(enumerate_words(1) == std::vector<Word>{Word{}, w("l"), w("r")});
  CHECK(enumerate_words(3).size() == 7);
  // Length first, tail l before tail r.
  CHECK(enumerate_words(2)
        == std::vector<Word>{Word{}, w("l"), w("r"), w("rl"), w("lr")});
  for (std::uint32_t n = 0; n <= 9; ++n) {
    auto const ws = enumerate_words(n);
    CHECK(ws.size() == oracle::words(n).size());
    CHECK(std::set<Word>(ws.begin(), ws.end()).size() == ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
      CHECK(ws[i].index() == i);
      CHECK(Word::from_index(i) == ws[i]);
    }
  }
}

TEST_CASE("gamma and its inverse", "[theta]") {
  CHECK(gamma(Word{}) == LambdaIndex(0, 0));
  CHECK(gamma(w("rlr")) == LambdaIndex(0, 3));
  CHECK(gamma(w("l")) == LambdaIndex(1, 1));
  CHECK(gamma_inv(LambdaIndex(0, 0)) == Word{});
  CHECK(gamma_inv(LambdaIndex(0, 2)) == w("lr"));
  CHECK(gamma_inv(LambdaIndex(1, 3)) == w("lrl"));
}

TEST_CASE("index pairs", "[theta]") {
  CHECK(LambdaIndex(1, 0) == LambdaIndex(0, 0));
  CHECK(LambdaIndex(1, 0).i() == 0);
  CHECK_THROWS(LambdaIndex(2, 1));
  CHECK(lambda_leq(LambdaIndex(0, 3), LambdaIndex(1, 1)));
  CHECK_FALSE(lambda_leq(LambdaIndex(0, 2), LambdaIndex(1, 2)));
  CHECK(lambda_leq(LambdaIndex(0, 0), LambdaIndex(0, 0)));
  CHECK(LambdaIndex::parse("(1,3)") == LambdaIndex(1, 3));
  CHECK(LambdaIndex::parse("(1,0)") == LambdaIndex(0, 0));
  CHECK(LambdaIndex(1, 3).to_string() == "(1,3)");
  CHECK_THROWS_AS(LambdaIndex::parse("1,3"), ParseError);
  CHECK_THROWS_AS(LambdaIndex::parse("(2,3)"), ParseError);
}

TEST_CASE("algebraic laws, exhaustive", "[theta][property]") {
  auto const ws = enumerate_words(5);
  for (Word const& a : ws) {
    for (Word const& b : ws) {
      Word const ab = a * b;
      bool const junction = !a.empty() && !b.empty() && a.tail() == b.head();
      CHECK(ab.length() == a.length() + b.length() - (junction ? 1 : 0));
      CHECK((ab * Word{}) == ab);
      CHECK(ab.mirror() == b.mirror() * a.mirror());
      for (Word const& c : ws) {
        CHECK((ab * c) == (a * (b * c)));
      }
    }
    CHECK(a.mirror().mirror() == a);
    if (!a.empty()) {
      CHECK(a.mirror().to_string() == oracle::mirror(a.to_string()));
    }
  }
}

TEST_CASE("gamma is an order isomorphism", "[theta][property]") {
  auto const ws = enumerate_words(12);
  for (Word const& a : ws) {
    CHECK(gamma_inv(gamma(a)) == a);
    for (Word const& b : ws) {
      CHECK(word_leq(a, b) == lambda_leq(gamma(a), gamma(b)));
      CHECK((gamma(a) == gamma(b)) == (a == b));
    }
  }
}
