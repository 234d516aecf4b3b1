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

// Reference polynomials, term by term.
#ifndef QSTUFFLE_TESTS_GOLDEN_HPP
#define QSTUFFLE_TESTS_GOLDEN_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "qstuffle/lyndon.hpp"
#include "qstuffle/ncpoly.hpp"

namespace qstuffle::golden {

// c * q^k * w
struct Term {
    long num;
    long den;
    unsigned qpow;
    Word word;
};

inline NCPolynomial poly(std::initializer_list<Term> terms) {
    NCPolynomial out;
    for (const auto& t : terms) out.add_term(t.word, QCoefficient::monomial(Rational(t.num, t.den), t.qpow));
    return out;
}

struct Display {
    std::string name;
    bool is_sigma;
    Word index;
    NCPolynomial value;
    std::size_t term_count;
};

/* The ten reference examples. The table labels one of them Sigma_{y3y2y1}, but that value contains
 * y3y1y2 > y3y2y1, so it cannot be lower triangular for y3y2y1. It is Sigma_{y3y1y2} and is indexed that way here.
 */
inline std::vector<Display> displays() {
    return {
        {"Pi_y1", false, Word{1}, poly({{1, 1, 0, {1}}}), 1},
        {"Pi_y2", false, Word{2}, poly({{1, 1, 0, {2}}, {-1, 2, 1, {1, 1}}}), 2},
        {"Pi_y2y1", false, Word{2, 1}, poly({{1, 1, 0, {2, 1}}, {-1, 1, 0, {1, 2}}}), 2},
        {"Pi_y3y1y2", false, Word{3, 1, 2},
         poly({{1, 1, 0, {3, 1, 2}},
               {-1, 2, 1, {3, 1, 1, 1}},
               {-1, 1, 1, {2, 1, 1, 2}},
               {1, 4, 2, {2, 1, 1, 1, 1}},
               {-1, 1, 0, {1, 3, 2}},
               {1, 2, 1, {1, 3, 1, 1}},
               {1, 2, 1, {1, 1, 2, 2}},
               {-1, 2, 2, {1, 1, 2, 1, 1}},
               {-1, 1, 0, {2, 3, 1}},
               {1, 2, 1, {2, 2, 1, 1}},
               {1, 1, 0, {2, 1, 3}},
               {1, 2, 1, {1, 1, 3, 1}},
               {-1, 2, 1, {1, 1, 1, 3}},
               {1, 4, 2, {1, 1, 1, 1, 2}}}),
         14},
        {"Pi_y3y1y2y1", false, Word{3, 1, 2, 1},
         poly({{1, 1, 0, {3, 1, 2, 1}},
               {-1, 1, 0, {3, 1, 1, 2}},
               {-1, 2, 1, {2, 1, 1, 2, 1}},
               {-1, 1, 0, {1, 3, 2, 1}},
               {1, 1, 0, {1, 3, 1, 2}},
               {1, 2, 1, {1, 1, 2, 2, 1}},
               {-1, 2, 1, {1, 1, 2, 1, 2}},
               {-1, 1, 0, {2, 1, 3, 1}},
               {1, 2, 1, {2, 1, 2, 1, 1}},
               {1, 1, 0, {2, 1, 1, 3}},
               {1, 1, 0, {1, 2, 3, 1}},
               {-1, 2, 1, {1, 2, 2, 1, 1}},
               {-1, 1, 0, {1, 2, 1, 3}},
               {1, 2, 1, {1, 2, 1, 1, 2}}}),
         14},
        {"Sigma_y1", true, Word{1}, poly({{1, 1, 0, {1}}}), 1},
        {"Sigma_y2", true, Word{2}, poly({{1, 1, 0, {2}}}), 1},
        {"Sigma_y2y1", true, Word{2, 1}, poly({{1, 1, 0, {2, 1}}, {1, 2, 1, {3}}}), 2},
        {"Sigma_y3y1y2", true, Word{3, 1, 2},
         poly({{1, 1, 0, {3, 1, 2}},
               {1, 1, 0, {3, 2, 1}},
               {1, 1, 1, {3, 3}},
               {1, 2, 1, {4, 2}},
               {1, 3, 2, {6}},
               {1, 2, 1, {5, 1}}}),
         6},
        {"Sigma_y3y1y2y1", true, Word{3, 1, 2, 1},
         poly({{2, 1, 0, {3, 2, 1, 1}},
               {1, 1, 1, {3, 2, 2}},
               {1, 1, 0, {3, 1, 2, 1}},
               {3, 2, 1, {3, 3, 1}},
               {1, 2, 1, {3, 1, 3}},
               {1, 2, 2, {3, 4}},
               {1, 2, 1, {4, 2, 1}},
               {1, 4, 2, {4, 3}},
               {1, 1, 1, {5, 1, 1}},
               {1, 2, 2, {5, 2}},
               {1, 2, 2, {6, 1}},
               {1, 8, 3, {7}}}),
         12},
    };
}

// Sigma_{y3y2y1}, from the increasing-letter formula.
inline NCPolynomial sigma_y3y2y1() {
    return poly({{1, 1, 0, {3, 2, 1}}, {1, 2, 1, {3, 3}}, {1, 2, 1, {5, 1}}, {1, 6, 2, {6}}});
}

// Leaves of the derivation tree of (y4, y2, y1).
inline std::vector<StandardSequence> example_leaves() {
    return {StandardSequence({Word{4, 2, 1}}),          StandardSequence({Word{2, 1}, Word{4}}),
            StandardSequence({Word{4, 1, 2}}),          StandardSequence({Word{2}, Word{4, 1}}),
            StandardSequence({Word{1}, Word{4, 2}}),    StandardSequence({Word{1}, Word{2}, Word{4}})};
}

}  // namespace qstuffle::golden

#endif  // QSTUFFLE_TESTS_GOLDEN_HPP
