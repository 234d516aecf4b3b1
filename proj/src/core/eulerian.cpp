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

#include "qstuffle/eulerian.hpp"

#include <functional>
#include <stdexcept>

namespace qstuffle {

namespace {

QCoefficient alternating_inverse(unsigned k) { return QCoefficient(Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k))); }

QCoefficient inverse_factorial(unsigned k) { return QCoefficient(factorial(k).inverse()); }

/* Visits every tuple (u_1, ..., u_k) of nonempty words with total weight n, passing the running algebra product
 * u_1 * ... * u_k and the tuple itself. Prefix products are shared along the recursion.
 */
void for_each_weighted_tuple(const Algebra& algebra, unsigned n,
                             const std::function<void(const NCPolynomial&, const std::vector<Word>&)>& visit) {
    std::vector<Word> tuple;
    std::function<void(const NCPolynomial&, unsigned)> rec = [&](const NCPolynomial& acc, unsigned remaining) {
        if (remaining == 0) {
            visit(acc, tuple);
            return;
        }
        for (unsigned m = 1; m <= remaining; ++m) {
            for (const auto& u : words_of_weight(m)) {
                tuple.push_back(u);
                rec(algebra.product(acc, NCPolynomial(u)), remaining - m);
                tuple.pop_back();
            }
        }
    };
    rec(NCPolynomial::one(), n);
}

// Every way to cut w into k >= 1 nonempty consecutive factors.
void for_each_deconcatenation(const Word& w, const std::function<void(const std::vector<Word>&)>& visit) {
    std::vector<Word> parts;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == w.size()) {
            visit(parts);
            return;
        }
        for (std::size_t end = pos + 1; end <= w.size(); ++end) {
            parts.push_back(w.subword(pos, end - pos));
            rec(end);
            parts.pop_back();
        }
    };
    rec(0);
}

}  // namespace

DiagonalSeries diagonal_series(unsigned max_weight) {
    DiagonalSeries d{max_weight, Tensor2Polynomial::one()};
    for (const auto& w : words_up_to_weight(max_weight)) d.value.add_term(w, w, QCoefficient(1));
    return d;
}

Eulerian::Eulerian(const Algebra& algebra) : algebra_(algebra) {}

const std::map<Word, NCPolynomial>& Eulerian::pi1_layer(unsigned n) const {
    if (const auto* hit = layers_.find(n)) return *hit;
    std::map<Word, NCPolynomial> layer;
    for (const auto& w : words_of_weight(n)) layer[w];
    for_each_weighted_tuple(algebra_, n, [&](const NCPolynomial& prod, const std::vector<Word>& tuple) {
        const QCoefficient scale = alternating_inverse(static_cast<unsigned>(tuple.size()));
        const Word joined = concat(tuple);
        for (const auto& [w, c] : prod) layer[w].add_term(joined, scale * c);
    });
    return layers_.insert(n, std::move(layer));
}

const NCPolynomial& Eulerian::pi1(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("pi1 of the empty word");
    return pi1_layer(weight(w)).at(w);
}

NCPolynomial Eulerian::pi1(const NCPolynomial& p) const {
    NCPolynomial out;
    for (const auto& [w, c] : p)
        if (!w.empty()) out += pi1(w) * c;
    return out;
}

NCPolynomial Eulerian::pi1_check(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("pi1 of the empty word");
    // (concatenated prefix, last slot); only the last slot is split further.
    Tensor2Polynomial state(Word(), w);
    NCPolynomial result;
    for (unsigned k = 1; !state.is_zero(); ++k) {
        for (const auto& [slots, c] : state) result.add_term(slots.first + slots.second, alternating_inverse(k) * c);
        Tensor2Polynomial next;
        for (const auto& [slots, c] : state) {
            for (const auto& [split, d] : algebra_.reduced_coproduct(slots.second))
                next.add_term(slots.first + split.first, split.second, c * d);
        }
        state = std::move(next);
    }
    return result;
}

NCPolynomial Eulerian::pi1_adjoint(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("adjoint pi1 of the empty word");
    NCPolynomial result;
    for_each_deconcatenation(w, [&](const std::vector<Word>& parts) {
        result += algebra_.product_of(parts) * alternating_inverse(static_cast<unsigned>(parts.size()));
    });
    return result;
}

NCPolynomial Eulerian::pi1_adjoint(const NCPolynomial& p) const {
    NCPolynomial out;
    for (const auto& [w, c] : p)
        if (!w.empty()) out += pi1_adjoint(w) * c;
    return out;
}

Tensor2Polynomial Eulerian::log_diagonal(unsigned max_weight) const {
    const unsigned bound = 2 * max_weight;
    Tensor2Polynomial x = diagonal_series(max_weight).value;
    x.add_term(Word(), Word(), QCoefficient(-1));
    Tensor2Polynomial result;
    Tensor2Polynomial power = Tensor2Polynomial::one();
    for (unsigned k = 1; k <= max_weight; ++k) {
        power = algebra_.tensor_mul_mixed(power, x, bound);
        result += power * alternating_inverse(k);
    }
    return result;
}

Tensor2Polynomial Eulerian::log_diagonal_pi1_form(unsigned max_weight) const {
    Tensor2Polynomial out;
    for (const auto& w : words_up_to_weight(max_weight)) out += tensor(NCPolynomial(w), pi1(w));
    return out;
}

Tensor2Polynomial Eulerian::log_diagonal_adjoint_form(unsigned max_weight) const {
    Tensor2Polynomial out;
    for (const auto& w : words_up_to_weight(max_weight)) out += tensor(pi1_adjoint(w), NCPolynomial(w));
    return out;
}

NCPolynomial Eulerian::reconstruct(const Word& w) const {
    if (w.empty()) return NCPolynomial::one();
    NCPolynomial result;
    for_each_weighted_tuple(algebra_, weight(w), [&](const NCPolynomial& prod, const std::vector<Word>& tuple) {
        const QCoefficient c = prod.coefficient(w);
        if (c.is_zero()) return;
        NCPolynomial term = NCPolynomial::one();
        for (const auto& u : tuple) term = term * pi1(u);
        result += term * (c * inverse_factorial(static_cast<unsigned>(tuple.size())));
    });
    return result;
}

NCPolynomial Eulerian::reconstruct_adjoint(const Word& w) const {
    if (w.empty()) return NCPolynomial::one();
    NCPolynomial result;
    for_each_deconcatenation(w, [&](const std::vector<Word>& parts) {
        NCPolynomial term = NCPolynomial::one();
        for (const auto& u : parts) term = algebra_.product(term, pi1_adjoint(u));
        result += term * inverse_factorial(static_cast<unsigned>(parts.size()));
    });
    return result;
}

NCPolynomial Eulerian::reconstruct_letter(Letter s) const {
    NCPolynomial result;
    for (const auto& composition : words_of_weight(s)) {
        const auto k = static_cast<unsigned>(composition.size());
        NCPolynomial term = NCPolynomial::one();
        for (Letter part : composition) term = term * pi1(Word::letter(part));
        result += term * (algebra_.q_power(k - 1) * factorial(k).inverse());
    }
    return result;
}

}  // namespace qstuffle
