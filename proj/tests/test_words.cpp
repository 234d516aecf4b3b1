/* Copyright 2026 The qstuffle Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace qstuffle;
namespace oracle = qstuffle::testing;

TEST_CASE("weight is the sum of indices") {
    CHECK(weight(Word{3, 1, 2}) == 6);
    CHECK(weight(Word()) == 0);
    CHECK(weight(Word{2, 1}) == 3);
}

TEST_CASE("larger index means smaller letter") {
    CHECK(letter_less(2, 1));
    CHECK_FALSE(letter_less(1, 1));
    CHECK_FALSE(letter_less(1, 3));
}

TEST_CASE("word order") {
    CHECK(Word{2} < Word{1, 1});
    CHECK(word_less(Word{2}, Word{1, 1}));
    CHECK_FALSE(Word{2, 1} < Word{2, 1});
    CHECK(Word{2, 1} < Word{2, 1, 1});
    CHECK(Word() < Word{5});
    CHECK(Word{3} < Word{2, 1});
}

TEST_CASE("words of a given weight") {
    CHECK(words_of_weight(3) == std::vector<Word>{Word{3}, Word{2, 1}, Word{1, 2}, Word{1, 1, 1}});
    CHECK(words_of_weight(1) == std::vector<Word>{Word{1}});
    CHECK(words_of_weight(5).size() == 16);
    for (unsigned n = 1; n <= 12; ++n) CHECK(words_of_weight(n).size() == (std::size_t{1} << (n - 1)));
    CHECK(words_up_to_weight(4).size() == 15);
}

TEST_CASE("word parsing and printing") {
    CHECK(Word::parse("3,1,2") == Word{3, 1, 2});
    CHECK(Word::parse("e").empty());
    CHECK(Word{3, 1, 2}.to_string() == "3,1,2");
    CHECK(Word().to_string() == "e");
    for (const char* bad : {"", "0", "1,,2", "1,", ",1", "a", "1,-2", "1 ,2"})
        CHECK_THROWS_AS(Word::parse(bad), std::invalid_argument);
    CHECK_THROWS_AS(Word({1, 0}), std::invalid_argument);
}

TEST_CASE("subwords and concatenation") {
    const Word w{3, 1, 2};
    CHECK(w.prefix(1) == Word{3});
    CHECK(w.suffix(1) == Word{1, 2});
    CHECK(w.suffix(3).empty());
    CHECK(Word{3} + Word{1, 2} == w);
    const std::vector<Word> parts{Word{3}, Word(), Word{1, 2}};
    CHECK(concat(parts) == w);
}

TEST_CASE("property: word order is a strict total order matching the oracle") {
    const auto words = words_up_to_weight(6);
    for (const auto& u : words)
        for (const auto& v : words) {
            CHECK((u < v) == oracle::oracle_less(u.letters(), v.letters()));
            CHECK(((u < v) + (v < u) + (u == v)) == 1);
        }
    // Transitivity on a sample.
    oracle::Gen gen;
    for (int trial = 0; trial < 2000; ++trial) {
        const Word a = gen.word(0, 6), b = gen.word(0, 6), c = gen.word(0, 6);
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("property: enumeration is sorted, duplicate free, prefix free inside a weight") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto words = words_of_weight(n);
        CHECK(std::is_sorted(words.begin(), words.end()));
        CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
        for (const auto& w : words) CHECK(weight(w) == n);
        for (const auto& u : words)
            for (const auto& v : words)
                if (u.size() < v.size()) CHECK_FALSE(v.prefix(u.size()) == u);
    }
}

TEST_CASE("hash agrees with equality") {
    WordHash h;
    CHECK(h(Word{2, 1}) == h(Word::parse("2,1")));
}
