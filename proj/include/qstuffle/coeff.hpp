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
// Exact coefficients: rationals and polynomials in the deformation parameter q.

#ifndef QSTUFFLE_COEFF_HPP
#define QSTUFFLE_COEFF_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qstuffle {

/* Arbitrary-precision rational in canonical form: the denominator is positive and coprime to the numerator,
 * zero is 0/1. Thin value wrapper over GMP's mpq_class.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& value);

    // Accepts "n", "-n", "n/d"; throws std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const;

    Rational& operator+=(const Rational& other) { value_ += other.value_; return *this; }
    Rational& operator-=(const Rational& other) { value_ -= other.value_; return *this; }
    Rational& operator*=(const Rational& other) { value_ *= other.value_; return *this; }
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater
                                                          : std::strong_ordering::equal;
    }

    // "num/den", den omitted when 1.
    std::string to_string() const;

private:
    mpq_class value_{0};
};

Rational factorial(unsigned n);

/* An element of Q[q], stored densely by ascending power of q. Canonical form: no trailing zero coefficient, so
 * the zero polynomial is the empty vector and every stored leading coefficient is nonzero.
 */
class QCoefficient {
public:
    QCoefficient() = default;
    QCoefficient(const Rational& constant);  // NOLINT(google-explicit-constructor)
    QCoefficient(long constant) : QCoefficient(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    // c * q^power
    static QCoefficient monomial(const Rational& c, unsigned power);
    static QCoefficient q() { return monomial(Rational(1), 1); }
    static QCoefficient from_coefficients(std::vector<Rational> ascending);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of q^power (zero beyond the degree).
    Rational operator[](std::size_t power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Number of nonzero monomials.
    std::size_t term_count() const;

    QCoefficient& operator+=(const QCoefficient& other);
    QCoefficient& operator-=(const QCoefficient& other);
    QCoefficient& operator*=(const QCoefficient& other);
    QCoefficient& operator*=(const Rational& scalar);

    friend QCoefficient operator+(QCoefficient a, const QCoefficient& b) { return a += b; }
    friend QCoefficient operator-(QCoefficient a, const QCoefficient& b) { return a -= b; }
    friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b);
    friend QCoefficient operator*(QCoefficient a, const Rational& b) { return a *= b; }
    friend QCoefficient operator*(const Rational& a, QCoefficient b) { return b *= a; }
    friend QCoefficient operator-(QCoefficient a);

    friend bool operator==(const QCoefficient& a, const QCoefficient& b) = default;

    // Horner evaluation at q = q0.
    Rational eval(const Rational& q0) const;

    // True when every coefficient is >= 0.
    bool is_nonnegative() const;

    // Trims trailing zeros; idempotent. Every mutating operation already ends in this state.
    void normalize();

private:
    std::vector<Rational> coeffs_;
};

}  // namespace qstuffle

#endif  // QSTUFFLE_COEFF_HPP
