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

#include "qstuffle/coeff.hpp"

#include <stdexcept>

namespace qstuffle {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || den.empty() || !is_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class z_num(n, 10), z_den(std::string(den), 10);
    if (z_den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class v(z_num, z_den);
    return Rational(v);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw std::domain_error("division by zero");
    value_ /= other.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

QCoefficient::QCoefficient(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

QCoefficient QCoefficient::monomial(const Rational& c, unsigned power) {
    QCoefficient r;
    if (c.is_zero()) return r;
    r.coeffs_.assign(power + 1, Rational());
    r.coeffs_[power] = c;
    return r;
}

QCoefficient QCoefficient::from_coefficients(std::vector<Rational> ascending) {
    QCoefficient r;
    r.coeffs_ = std::move(ascending);
    r.normalize();
    return r;
}

Rational QCoefficient::operator[](std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

std::size_t QCoefficient::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
    return n;
}

void QCoefficient::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QCoefficient& QCoefficient::operator+=(const QCoefficient& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

QCoefficient& QCoefficient::operator-=(const QCoefficient& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
    QCoefficient r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

QCoefficient& QCoefficient::operator*=(const QCoefficient& other) { return *this = *this * other; }

QCoefficient& QCoefficient::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

QCoefficient operator-(QCoefficient a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Rational QCoefficient::eval(const Rational& q0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= q0;
        acc += *it;
    }
    return acc;
}

bool QCoefficient::is_nonnegative() const {
    for (const auto& c : coeffs_)
        if (c.sign() < 0) return false;
    return true;
}

}  // namespace qstuffle
