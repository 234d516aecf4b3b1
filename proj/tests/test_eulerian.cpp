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

namespace {

const Algebra& A = Algebra::q_stuffle();
const Eulerian& E() {
    static const Eulerian e;
    return e;
}
const QCoefficient q = QCoefficient::q();
const QCoefficient half_q = QCoefficient::monomial(Rational(1, 2), 1);

NCPolynomial P(const Word& w, const QCoefficient& c = QCoefficient(1)) { return NCPolynomial(w, c); }

}  // namespace

TEST_CASE("pi_1 of short words") {
    CHECK(E().pi1(Word{1}) == P(Word{1}));
    CHECK(E().pi1(Word{2}) == P(Word{2}) - P(Word{1, 1}, half_q));
    CHECK(E().pi1(Word{1, 1}).is_zero());
    CHECK(E().pi1(Word{3}) == oracle::pi1_letter_oracle(3));
    const NCPolynomial expected3 = P(Word{3}) - P(Word{2, 1}, half_q) - P(Word{1, 2}, half_q) +
                                   P(Word{1, 1, 1}, QCoefficient::monomial(Rational(1, 3), 2));
    CHECK(E().pi1(Word{3}) == expected3);
    CHECK_THROWS_AS(E().pi1(Word()), std::invalid_argument);
}

TEST_CASE("pi_1 of letters matches the composition formula") {
    for (Letter k = 1; k <= 7; ++k) CHECK(E().pi1(Word{k}) == oracle::pi1_letter_oracle(k));
}

TEST_CASE("pi_1 is linear") {
    const NCPolynomial p = P(Word{2}, QCoefficient(3)) + P(Word{1, 1}, q);
    CHECK(E().pi1(p) == E().pi1(Word{2}) * QCoefficient(3));
    CHECK(E().pi1(NCPolynomial()).is_zero());
}

TEST_CASE("adjoint of pi_1 on short words") {
    CHECK(E().pi1_adjoint(Word{1}) == P(Word{1}));
    CHECK(E().pi1_adjoint(Word{2}) == P(Word{2}));
    CHECK(E().pi1_adjoint(Word{1, 1}) == P(Word{2}) * -half_q);
    CHECK_THROWS_AS(E().pi1_adjoint(Word()), std::invalid_argument);
}

TEST_CASE("pi_1 over the shuffle algebra") {
    const Eulerian e(Algebra::shuffle_algebra());
    CHECK(e.pi1(Word{2}) == P(Word{2}));
    CHECK(e.pi1(Word{1, 1}).is_zero());
    CHECK(e.pi1(Word{2, 1}) == (P(Word{2, 1}) - P(Word{1, 2})) * QCoefficient(Rational(1, 2)));
}

TEST_CASE("property: direct and convolution forms of pi_1 agree up to weight 5") {
    for (const auto& w : words_up_to_weight(5)) CHECK(E().pi1(w) == E().pi1_check(w));
}

TEST_CASE("property: pi_1 and its adjoint are adjoint up to weight 5") {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto words = words_of_weight(n);
        for (const auto& u : words)
            for (const auto& v : words) CHECK(pairing(E().pi1(u), P(v)) == pairing(P(u), E().pi1_adjoint(v)));
    }
}

TEST_CASE("property: pi_1 is a weight-preserving projector, its adjoint kills products") {
    const auto words = words_up_to_weight(5);
    for (const auto& w : words) {
        const NCPolynomial& p = E().pi1(w);
        for (const auto& [x, c] : p) CHECK(weight(x) == weight(w));
        CHECK(E().pi1(p) == p);
    }
    for (const auto& u : words)
        for (const auto& v : words)
            if (weight(u) + weight(v) <= 5) CHECK(E().pi1_adjoint(A.product(u, v)).is_zero());
    // Symmetrized products of primitives lie in the kernel of pi_1.
    const std::vector<NCPolynomial> prims{E().pi1(Word{1}), E().pi1(Word{2}), E().pi1(Word{2, 1})};
    for (const auto& a : prims)
        for (const auto& b : prims) CHECK(E().pi1(a * b + b * a).is_zero());
}

TEST_CASE("property: pi_1(w) is primitive up to weight 6") {
    for (const auto& w : words_up_to_weight(6)) CHECK(A.is_primitive(E().pi1(w), 6));
}

TEST_CASE("logarithm of the diagonal series") {
    CHECK(E().log_diagonal(1) == Tensor2Polynomial(Word{1}, Word{1}));
    for (unsigned n = 1; n <= 5; ++n) {
        const Tensor2Polynomial log_d = E().log_diagonal(n);
        CHECK(log_d == E().log_diagonal_pi1_form(n));
        CHECK(log_d == E().log_diagonal_adjoint_form(n));
    }
}

TEST_CASE("diagonal series") {
    const DiagonalSeries d = diagonal_series(2);
    CHECK(d.max_weight == 2);
    CHECK(d.value == Tensor2Polynomial::one() + Tensor2Polynomial(Word{1}, Word{1}) + Tensor2Polynomial(Word{2}, Word{2}) +
                         Tensor2Polynomial(Word{1, 1}, Word{1, 1}));
}

TEST_CASE("property: reconstruction from pi_1 up to weight 5") {
    for (const auto& w : words_up_to_weight(5)) {
        CHECK(E().reconstruct(w) == P(w));
        CHECK(E().reconstruct_adjoint(w) == P(w));
    }
    for (Letter s = 1; s <= 6; ++s) CHECK(E().reconstruct_letter(s) == P(Word{s}));
    CHECK_THROWS_AS(E().reconstruct_letter(0), std::invalid_argument);
}
