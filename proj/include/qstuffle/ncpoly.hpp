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
// Sparse noncommutative polynomials over Q[q] and elements of the tensor square.

#ifndef QSTUFFLE_NCPOLY_HPP
#define QSTUFFLE_NCPOLY_HPP

#include <limits>
#include <map>
#include <optional>
#include <utility>

#include "qstuffle/coeff.hpp"
#include "qstuffle/words.hpp"

namespace qstuffle {

inline constexpr unsigned kNoWeightBound = std::numeric_limits<unsigned>::max();

/* Finitely supported map Word -> Q[q]. No zero coefficient is ever stored, so the zero polynomial is the empty
 * map and equality is structural. Iteration runs in ascending word order.
 */
class NCPolynomial {
public:
    using TermMap = std::map<Word, QCoefficient>;

    NCPolynomial() = default;
    NCPolynomial(const Word& w) { add_term(w, QCoefficient(1)); }  // NOLINT(google-explicit-constructor)
    NCPolynomial(const Word& w, const QCoefficient& c) { add_term(w, c); }
    static NCPolynomial one() { return NCPolynomial(Word()); }
    static NCPolynomial constant(const QCoefficient& c) { return NCPolynomial(Word(), c); }

    void add_term(const Word& w, const QCoefficient& c);
    QCoefficient coefficient(const Word& w) const;

    const TermMap& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Coefficient of the empty word.
    QCoefficient constant_term() const { return coefficient(Word()); }
    bool is_proper() const { return constant_term().is_zero(); }

    // All words in the support share one weight (vacuously true for zero).
    bool is_homogeneous() const;
    std::optional<unsigned> max_weight() const;

    NCPolynomial& operator+=(const NCPolynomial& other);
    NCPolynomial& operator-=(const NCPolynomial& other);
    NCPolynomial& operator*=(const QCoefficient& scalar);

    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator-(NCPolynomial a) { return a *= QCoefficient(-1); }
    friend NCPolynomial operator*(NCPolynomial a, const QCoefficient& c) { return a *= c; }
    friend NCPolynomial operator*(const QCoefficient& c, NCPolynomial a) { return a *= c; }
    // Concatenation product.
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

    // Specializes q := q0; every coefficient becomes a constant.
    NCPolynomial eval_q(const Rational& q0) const;

private:
    TermMap terms_;
};

// Concatenation product, dropping words of weight > max_weight.
NCPolynomial conc_mul(const NCPolynomial& a, const NCPolynomial& b, unsigned max_weight = kNoWeightBound);

// [a, b] = ab - ba under concatenation.
NCPolynomial bracket(const NCPolynomial& a, const NCPolynomial& b);

// Canonical scalar product: words are orthonormal.
QCoefficient pairing(const NCPolynomial& p, const NCPolynomial& q);

// Drops every word of weight > max_weight.
NCPolynomial truncate(const NCPolynomial& p, unsigned max_weight);

using WordPair = std::pair<Word, Word>;

/* Finitely supported map (Word, Word) -> Q[q]; the term (u, v) stands for u (x) v. Same zero-free invariant as
 * NCPolynomial.
 */
class Tensor2Polynomial {
public:
    using TermMap = std::map<WordPair, QCoefficient>;

    Tensor2Polynomial() = default;
    Tensor2Polynomial(const Word& left, const Word& right, const QCoefficient& c = QCoefficient(1)) {
        add_term(left, right, c);
    }
    static Tensor2Polynomial one() { return Tensor2Polynomial(Word(), Word()); }

    void add_term(const Word& left, const Word& right, const QCoefficient& c);
    QCoefficient coefficient(const Word& left, const Word& right) const;

    const TermMap& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Tensor2Polynomial& operator+=(const Tensor2Polynomial& other);
    Tensor2Polynomial& operator-=(const Tensor2Polynomial& other);
    Tensor2Polynomial& operator*=(const QCoefficient& scalar);

    friend Tensor2Polynomial operator+(Tensor2Polynomial a, const Tensor2Polynomial& b) { return a += b; }
    friend Tensor2Polynomial operator-(Tensor2Polynomial a, const Tensor2Polynomial& b) { return a -= b; }
    friend Tensor2Polynomial operator*(Tensor2Polynomial a, const QCoefficient& c) { return a *= c; }
    friend Tensor2Polynomial operator*(const QCoefficient& c, Tensor2Polynomial a) { return a *= c; }

    friend bool operator==(const Tensor2Polynomial&, const Tensor2Polynomial&) = default;

    Tensor2Polynomial eval_q(const Rational& q0) const;

private:
    TermMap terms_;
};

// p (x) q
Tensor2Polynomial tensor(const NCPolynomial& p, const NCPolynomial& q);

/* Componentwise product (a (x) b)(c (x) d) = (a * c) (x) (b * d), where each slot uses its own word product.
 * Products of total weight > max_total_weight are skipped. LeftMul/RightMul: (const Word&, const Word&) ->
 * NCPolynomial (or anything iterable as (Word, QCoefficient) pairs).
 */
template <class LeftMul, class RightMul>
Tensor2Polynomial tensor_product(const Tensor2Polynomial& a, const Tensor2Polynomial& b, LeftMul&& left_mul,
                                 RightMul&& right_mul, unsigned max_total_weight = kNoWeightBound) {
    Tensor2Polynomial out;
    for (const auto& [ab, c1] : a) {
        const unsigned wa = weight(ab.first) + weight(ab.second);
        if (wa > max_total_weight) continue;
        for (const auto& [cd, c2] : b) {
            if (wa + weight(cd.first) + weight(cd.second) > max_total_weight) continue;
            const QCoefficient c = c1 * c2;
            const auto& left = left_mul(ab.first, cd.first);
            const auto& right = right_mul(ab.second, cd.second);
            for (const auto& [lw, lc] : left) {
                const QCoefficient clc = c * lc;
                for (const auto& [rw, rc] : right) out.add_term(lw, rw, clc * rc);
            }
        }
    }
    return out;
}

// Both slots multiplied by concatenation.
Tensor2Polynomial tensor_mul(const Tensor2Polynomial& a, const Tensor2Polynomial& b,
                             unsigned max_total_weight = kNoWeightBound);

// sum over (u, v) of A(u, v) * P(u) * Q(v)
QCoefficient tensor_pairing(const Tensor2Polynomial& a, const NCPolynomial& p, const NCPolynomial& q);

// Drops terms whose total weight weight(u) + weight(v) exceeds max_total_weight.
Tensor2Polynomial truncate(const Tensor2Polynomial& t, unsigned max_total_weight);

}  // namespace qstuffle

#endif  // QSTUFFLE_NCPOLY_HPP
