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

#include "qstuffle/ncpoly.hpp"

#include <algorithm>

namespace qstuffle {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const QCoefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

void NCPolynomial::add_term(const Word& w, const QCoefficient& c) { accumulate(terms_, w, c); }

QCoefficient NCPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QCoefficient() : it->second;
}

bool NCPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned first = weight(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return weight(t.first) == first; });
}

std::optional<unsigned> NCPolynomial::max_weight() const {
    std::optional<unsigned> m;
    for (const auto& [w, c] : terms_) m = std::max(m.value_or(0), weight(w));
    return m;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(const QCoefficient& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (scalar.is_one()) return *this;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) { return conc_mul(a, b); }

NCPolynomial NCPolynomial::eval_q(const Rational& q0) const {
    NCPolynomial out;
    for (const auto& [w, c] : terms_) out.add_term(w, QCoefficient(c.eval(q0)));
    return out;
}

NCPolynomial conc_mul(const NCPolynomial& a, const NCPolynomial& b, unsigned max_weight) {
    NCPolynomial out;
    for (const auto& [u, cu] : a) {
        const unsigned wu = weight(u);
        if (wu > max_weight) continue;
        for (const auto& [v, cv] : b) {
            if (wu + weight(v) > max_weight) continue;
            out.add_term(u + v, cu * cv);
        }
    }
    return out;
}

NCPolynomial bracket(const NCPolynomial& a, const NCPolynomial& b) { return a * b - b * a; }

QCoefficient pairing(const NCPolynomial& p, const NCPolynomial& q) {
    const auto& small = p.size() <= q.size() ? p : q;
    const auto& large = p.size() <= q.size() ? q : p;
    QCoefficient total;
    for (const auto& [w, c] : small) {
        auto it = large.terms().find(w);
        if (it != large.terms().end()) total += c * it->second;
    }
    return total;
}

NCPolynomial truncate(const NCPolynomial& p, unsigned max_weight) {
    NCPolynomial out;
    for (const auto& [w, c] : p)
        if (weight(w) <= max_weight) out.add_term(w, c);
    return out;
}

void Tensor2Polynomial::add_term(const Word& left, const Word& right, const QCoefficient& c) {
    accumulate(terms_, WordPair(left, right), c);
}

QCoefficient Tensor2Polynomial::coefficient(const Word& left, const Word& right) const {
    auto it = terms_.find(WordPair(left, right));
    return it == terms_.end() ? QCoefficient() : it->second;
}

Tensor2Polynomial& Tensor2Polynomial::operator+=(const Tensor2Polynomial& other) {
    for (const auto& [k, c] : other.terms_) accumulate(terms_, k, c);
    return *this;
}

Tensor2Polynomial& Tensor2Polynomial::operator-=(const Tensor2Polynomial& other) {
    for (const auto& [k, c] : other.terms_) accumulate(terms_, k, -c);
    return *this;
}

Tensor2Polynomial& Tensor2Polynomial::operator*=(const QCoefficient& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
}

Tensor2Polynomial Tensor2Polynomial::eval_q(const Rational& q0) const {
    Tensor2Polynomial out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, QCoefficient(c.eval(q0)));
    return out;
}

Tensor2Polynomial tensor(const NCPolynomial& p, const NCPolynomial& q) {
    Tensor2Polynomial out;
    for (const auto& [u, cu] : p)
        for (const auto& [v, cv] : q) out.add_term(u, v, cu * cv);
    return out;
}

Tensor2Polynomial tensor_mul(const Tensor2Polynomial& a, const Tensor2Polynomial& b, unsigned max_total_weight) {
    auto conc = [](const Word& x, const Word& y) { return NCPolynomial(x + y); };
    return tensor_product(a, b, conc, conc, max_total_weight);
}

QCoefficient tensor_pairing(const Tensor2Polynomial& a, const NCPolynomial& p, const NCPolynomial& q) {
    QCoefficient total;
    for (const auto& [k, c] : a) {
        auto cp = p.coefficient(k.first);
        if (cp.is_zero()) continue;
        total += c * cp * q.coefficient(k.second);
    }
    return total;
}

Tensor2Polynomial truncate(const Tensor2Polynomial& t, unsigned max_total_weight) {
    Tensor2Polynomial out;
    for (const auto& [k, c] : t)
        if (weight(k.first) + weight(k.second) <= max_total_weight) out.add_term(k.first, k.second, c);
    return out;
}

}  // namespace qstuffle
