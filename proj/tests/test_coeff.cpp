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
using qstuffle::testing::Gen;

TEST_CASE("rational arithmetic stays canonical") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(0) * Rational(7, 3)).to_string() == "0");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(3, 7).denominator() == 7);
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("rational division by zero is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+5/10").to_string() == "1/2");
    CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
    for (const char* bad : {"", "/2", "1/", "1/0", "a", "1/-2", "1.5", "--1"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("factorials do not overflow") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("q-polynomial arithmetic") {
    const QCoefficient half_q = QCoefficient::monomial(Rational(1, 2), 1);
    CHECK(half_q * half_q == QCoefficient::monomial(Rational(1, 4), 2));
    CHECK(half_q + QCoefficient() == half_q);
    const QCoefficient one_plus_q = QCoefficient(1) + QCoefficient::q();
    const QCoefficient one_minus_q = QCoefficient(1) - QCoefficient::q();
    CHECK(one_plus_q * one_minus_q == QCoefficient(1) - QCoefficient::monomial(Rational(1), 2));
    CHECK((half_q - half_q).is_zero());
    CHECK((half_q - half_q).degree() == -1);
    CHECK(QCoefficient::from_coefficients({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(QCoefficient::from_coefficients({Rational(0), Rational(2), Rational(0)}).term_count() == 1);
}

TEST_CASE("q-polynomial evaluation") {
    const QCoefficient a = QCoefficient::monomial(Rational(1, 2), 1) + QCoefficient::monomial(Rational(1), 2);
    CHECK(a.eval(Rational(0)) == Rational(0));
    CHECK(QCoefficient::monomial(Rational(1, 2), 1).eval(Rational(1)) == Rational(1, 2));
    CHECK(QCoefficient::monomial(Rational(1, 8), 3).eval(Rational(-1)) == Rational(-1, 8));
}

TEST_CASE("nonnegativity means every coefficient of q^k is >= 0") {
    CHECK(QCoefficient::monomial(Rational(3, 2), 2).is_nonnegative());
    CHECK(QCoefficient().is_nonnegative());
    CHECK_FALSE((QCoefficient(1) - QCoefficient::q()).is_nonnegative());
}

TEST_CASE("property: ring axioms on random q-polynomials") {
    Gen gen;
    for (int trial = 0; trial < 300; ++trial) {
        const QCoefficient a = gen.coefficient(), b = gen.coefficient(), c = gen.coefficient();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QCoefficient(1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("property: evaluation is a ring morphism") {
    Gen gen;
    for (int trial = 0; trial < 300; ++trial) {
        const QCoefficient a = gen.coefficient(), b = gen.coefficient();
        const Rational q0 = gen.rational();
        CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
        CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
    }
}

TEST_CASE("property: normalizing is idempotent and keeps the value") {
    Gen gen;
    for (int trial = 0; trial < 100; ++trial) {
        QCoefficient a = gen.coefficient();
        const QCoefficient before = a;
        a.normalize();
        CHECK(a == before);
        a.normalize();
        CHECK(a == before);
        if (!a.is_zero()) CHECK_FALSE(a.coefficients().back().is_zero());
    }
}
