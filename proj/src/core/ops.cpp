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

#include "qstuffle/ops.hpp"

#include <stdexcept>

namespace qstuffle {

namespace {

// y_s . P
NCPolynomial prepend(Letter s, const NCPolynomial& p, const QCoefficient& scale = QCoefficient(1)) {
    NCPolynomial out;
    const Word head = Word::letter(s);
    for (const auto& [w, c] : p) out.add_term(head + w, c * scale);
    return out;
}

// Nonempty words u, v with weight(u) + weight(v) == n.
template <class Fn>
void for_each_split_pair(unsigned n, Fn&& fn) {
    for (unsigned a = 1; a < n; ++a) {
        const auto left = words_of_weight(a);
        const auto right = words_of_weight(n - a);
        for (const auto& u : left)
            for (const auto& v : right) fn(u, v);
    }
}

// Weights present in the support of p, bounded by max_weight.
std::vector<unsigned> support_weights(const NCPolynomial& p, unsigned max_weight) {
    std::vector<bool> seen(max_weight + 1, false);
    for (const auto& [w, c] : p) {
        const unsigned n = weight(w);
        if (n <= max_weight) seen[n] = true;
    }
    std::vector<unsigned> out;
    for (unsigned n = 0; n <= max_weight; ++n)
        if (seen[n]) out.push_back(n);
    return out;
}

}  // namespace

Algebra::Algebra(Deformation deformation) : deformation_(deformation) {}

const Algebra& Algebra::q_stuffle() {
    static const Algebra instance(Deformation::q_stuffle);
    return instance;
}

const Algebra& Algebra::shuffle_algebra() {
    static const Algebra instance(Deformation::shuffle);
    return instance;
}

QCoefficient Algebra::q_power(unsigned k) const {
    if (deformation_ == Deformation::shuffle) return QCoefficient(k == 0 ? 1 : 0);
    return QCoefficient::monomial(Rational(1), k);
}

const NCPolynomial& Algebra::product(const Word& u, const Word& v) const {
    const WordPair key = v < u ? WordPair(v, u) : WordPair(u, v);
    if (const auto* hit = products_.find(key)) return *hit;

    const Word& a = key.first;
    const Word& b = key.second;
    NCPolynomial result;
    if (a.empty()) {
        result = NCPolynomial(b);
    } else {
        const Word a_tail = a.suffix(1), b_tail = b.suffix(1);
        result += prepend(a.front(), product(a_tail, b));
        result += prepend(b.front(), product(a, b_tail));
        if (deformation_ == Deformation::q_stuffle)
            result += prepend(a.front() + b.front(), product(a_tail, b_tail), QCoefficient::q());
    }
    return products_.insert(key, std::move(result));
}

NCPolynomial Algebra::product(const NCPolynomial& p, const NCPolynomial& q, unsigned max_weight) const {
    NCPolynomial out;
    for (const auto& [u, cu] : p) {
        const unsigned wu = weight(u);
        if (wu > max_weight) continue;
        for (const auto& [v, cv] : q) {
            if (wu + weight(v) > max_weight) continue;
            const QCoefficient c = cu * cv;
            for (const auto& [w, cw] : product(u, v)) out.add_term(w, c * cw);
        }
    }
    return out;
}

NCPolynomial Algebra::product_of(std::span<const Word> factors) const {
    NCPolynomial acc = NCPolynomial::one();
    for (const auto& f : factors) acc = product(acc, NCPolynomial(f));
    return acc;
}

NCPolynomial Algebra::product_of(std::span<const NCPolynomial> factors, unsigned max_weight) const {
    NCPolynomial acc = NCPolynomial::one();
    for (const auto& f : factors) acc = product(acc, f, max_weight);
    return acc;
}

NCPolynomial Algebra::power(const NCPolynomial& p, unsigned k, unsigned max_weight) const {
    NCPolynomial acc = NCPolynomial::one();
    for (unsigned i = 0; i < k; ++i) acc = product(acc, p, max_weight);
    return acc;
}

Tensor2Polynomial Algebra::letter_coproduct(Letter s) const {
    Tensor2Polynomial t;
    const Word y = Word::letter(s);
    t.add_term(y, Word(), QCoefficient(1));
    t.add_term(Word(), y, QCoefficient(1));
    if (deformation_ == Deformation::q_stuffle)
        for (Letter s1 = 1; s1 < s; ++s1) t.add_term(Word::letter(s1), Word::letter(s - s1), QCoefficient::q());
    return t;
}

const Tensor2Polynomial& Algebra::coproduct(const Word& w) const {
    if (const auto* hit = coproducts_.find(w)) return *hit;
    Tensor2Polynomial result;
    if (w.empty())
        result = Tensor2Polynomial::one();
    else
        result = tensor_mul(letter_coproduct(w.front()), coproduct(w.suffix(1)));
    return coproducts_.insert(w, std::move(result));
}

Tensor2Polynomial Algebra::coproduct(const NCPolynomial& p) const {
    Tensor2Polynomial out;
    for (const auto& [w, c] : p) out += coproduct(w) * c;
    return out;
}

Tensor2Polynomial Algebra::reduced_coproduct(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("reduced coproduct of the empty word");
    Tensor2Polynomial t = coproduct(w);
    t.add_term(w, Word(), QCoefficient(-1));
    t.add_term(Word(), w, QCoefficient(-1));
    return t;
}

NCPolynomial Algebra::multiply(const NCPolynomial& a, const NCPolynomial& b, Product kind,
                               unsigned max_weight) const {
    return kind == Product::conc ? conc_mul(a, b, max_weight) : product(a, b, max_weight);
}

Tensor2Polynomial Algebra::tensor_mul_mixed(const Tensor2Polynomial& a, const Tensor2Polynomial& b,
                                            unsigned max_total_weight) const {
    auto left = [this](const Word& x, const Word& y) -> const NCPolynomial& { return product(x, y); };
    auto right = [](const Word& x, const Word& y) { return NCPolynomial(x + y); };
    return tensor_product(a, b, left, right, max_total_weight);
}

NCPolynomial Algebra::exp_proper(const NCPolynomial& p, unsigned max_weight, Product kind) const {
    if (!p.is_proper()) throw std::invalid_argument("exp of a series with nonzero constant term");
    const NCPolynomial x = truncate(p, max_weight);
    NCPolynomial result = NCPolynomial::one();
    NCPolynomial term = NCPolynomial::one();
    for (unsigned k = 1; k <= max_weight; ++k) {
        term = multiply(term, x, kind, max_weight) * QCoefficient(Rational(1, static_cast<long>(k)));
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

NCPolynomial Algebra::log_one_plus(const NCPolynomial& s, unsigned max_weight, Product kind) const {
    if (!s.constant_term().is_one()) throw std::invalid_argument("log of a series whose constant term is not 1");
    const NCPolynomial x = truncate(s, max_weight) - NCPolynomial::one();
    NCPolynomial result;
    NCPolynomial power = NCPolynomial::one();
    for (unsigned k = 1; k <= max_weight; ++k) {
        power = multiply(power, x, kind, max_weight);
        if (power.is_zero()) break;
        result += power * QCoefficient(Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
    }
    return result;
}

bool Algebra::is_primitive_by_coproduct(const NCPolynomial& p, unsigned max_weight) const {
    const NCPolynomial x = truncate(p, max_weight);
    const Tensor2Polynomial expected = tensor(x, NCPolynomial::one()) + tensor(NCPolynomial::one(), x);
    return coproduct(x) == expected;
}

bool Algebra::is_primitive_by_pairing(const NCPolynomial& p, unsigned max_weight) const {
    const NCPolynomial x = truncate(p, max_weight);
    // The u = v = 1 slot of the criterion forces a zero constant term.
    if (!x.is_proper()) return false;
    bool ok = true;
    for (unsigned n : support_weights(x, max_weight)) {
        for_each_split_pair(n, [&](const Word& u, const Word& v) {
            if (ok && !pairing(x, product(u, v)).is_zero()) ok = false;
        });
        if (!ok) break;
    }
    return ok;
}

bool Algebra::is_primitive(const NCPolynomial& p, unsigned max_weight) const {
    const bool by_coproduct = is_primitive_by_coproduct(p, max_weight);
    if (by_coproduct != is_primitive_by_pairing(p, max_weight))
        throw std::logic_error("primitivity criteria disagree");
    return by_coproduct;
}

bool Algebra::is_grouplike(const NCPolynomial& s, unsigned max_weight) const {
    if (!s.constant_term().is_one()) throw std::invalid_argument("group-like test needs constant term 1");
    for (unsigned n = 2; n <= max_weight; ++n) {
        bool ok = true;
        for_each_split_pair(n, [&](const Word& u, const Word& v) {
            if (ok && pairing(s, product(u, v)) != s.coefficient(u) * s.coefficient(v)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

NCPolynomial stuffle(const Word& u, const Word& v) { return Algebra::q_stuffle().product(u, v); }

NCPolynomial stuffle_poly(const NCPolynomial& p, const NCPolynomial& q) { return Algebra::q_stuffle().product(p, q); }

Tensor2Polynomial coproduct_stuffle(const NCPolynomial& p) { return Algebra::q_stuffle().coproduct(p); }

namespace {

void shuffle_positions(const Word& u, const Word& v, std::size_t taken_u, std::vector<Letter>& out,
                       NCPolynomial& acc) {
    const std::size_t pos = out.size();
    if (pos == u.size() + v.size()) {
        acc.add_term(Word(out), QCoefficient(1));
        return;
    }
    const std::size_t taken_v = pos - taken_u;
    if (taken_u < u.size()) {
        out.push_back(u[taken_u]);
        shuffle_positions(u, v, taken_u + 1, out, acc);
        out.pop_back();
    }
    if (taken_v < v.size()) {
        out.push_back(v[taken_v]);
        shuffle_positions(u, v, taken_u, out, acc);
        out.pop_back();
    }
}

}  // namespace

NCPolynomial shuffle(const Word& u, const Word& v) {
    NCPolynomial acc;
    std::vector<Letter> buffer;
    buffer.reserve(u.size() + v.size());
    shuffle_positions(u, v, 0, buffer, acc);
    return acc;
}

NCPolynomial shuffle_poly(const NCPolynomial& p, const NCPolynomial& q) {
    NCPolynomial out;
    for (const auto& [u, cu] : p)
        for (const auto& [v, cv] : q) out += shuffle(u, v) * (cu * cv);
    return out;
}

Tensor2Polynomial coproduct_conc(const Word& w) {
    Tensor2Polynomial t;
    for (std::size_t i = 0; i <= w.size(); ++i) t.add_term(w.prefix(i), w.suffix(i), QCoefficient(1));
    return t;
}

Tensor2Polynomial coproduct_conc(const NCPolynomial& p) {
    Tensor2Polynomial out;
    for (const auto& [w, c] : p) out += coproduct_conc(w) * c;
    return out;
}

QCoefficient counit(const NCPolynomial& p) { return p.constant_term(); }

}  // namespace qstuffle
