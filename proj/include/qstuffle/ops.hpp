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
// The q-stuffle product and its dual coproduct, the shuffle, exp/log of series, and the Friedrichs criteria.

#ifndef QSTUFFLE_OPS_HPP
#define QSTUFFLE_OPS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <utility>

#include "qstuffle/ncpoly.hpp"

namespace qstuffle {

/* Which commutative product lives on k<Y>.
 *   q_stuffle: y_s u * y_t v = y_s(u * y_t v) + y_t(y_s u * v) + q y_{s+t}(u * v)
 *   shuffle:   the same recursion without the contraction term (the q = 0 theory, run as its own pipeline).
 */
enum class Deformation { q_stuffle, shuffle };

// Selects the product used by series operations.
enum class Product { conc, stuffle };

namespace detail {

// Memo table that is safe under concurrent use. Inserts are idempotent: the first value stored for a key wins and
// every caller gets a reference to it. Stored values are never modified or erased.
template <class Key, class Value>
class MemoTable {
public:
    const Value* find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }
    const Value& insert(const Key& key, Value value) {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }
    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace detail

/* The bialgebra H = (k<Y>, conc, 1, Delta, eps) together with its dual (k<Y>, product, 1, Delta_conc, eps).
 * Products of words and coproducts of words are memoized; an Algebra can be shared between threads.
 */
class Algebra {
public:
    explicit Algebra(Deformation deformation = Deformation::q_stuffle);
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    // Process-wide instances.
    static const Algebra& q_stuffle();
    static const Algebra& shuffle_algebra();

    Deformation deformation() const noexcept { return deformation_; }
    // q^k for the q-stuffle; for the shuffle q is 0, so this is 1 when k == 0 and 0 otherwise.
    QCoefficient q_power(unsigned k) const;

    // u * v on words (memoized, keyed on the unordered pair).
    const NCPolynomial& product(const Word& u, const Word& v) const;
    // Bilinear extension; words of weight > max_weight are never produced.
    NCPolynomial product(const NCPolynomial& p, const NCPolynomial& q, unsigned max_weight = kNoWeightBound) const;
    // u_1 * ... * u_k (1 for an empty list).
    NCPolynomial product_of(std::span<const Word> factors) const;
    NCPolynomial product_of(std::span<const NCPolynomial> factors, unsigned max_weight = kNoWeightBound) const;
    // p^k under the algebra product.
    NCPolynomial power(const NCPolynomial& p, unsigned k, unsigned max_weight = kNoWeightBound) const;

    // Delta(y_s) = y_s (x) 1 + 1 (x) y_s + q sum_{s1+s2=s} y_s1 (x) y_s2 (no q-sum for the shuffle).
    Tensor2Polynomial letter_coproduct(Letter s) const;
    // Extended to words as a concatenation morphism (memoized).
    const Tensor2Polynomial& coproduct(const Word& w) const;
    Tensor2Polynomial coproduct(const NCPolynomial& p) const;
    // Delta(w) - w (x) 1 - 1 (x) w for a nonempty word.
    Tensor2Polynomial reduced_coproduct(const Word& w) const;

    // Either conc or the algebra product, with optional weight bound.
    NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b, Product kind,
                          unsigned max_weight = kNoWeightBound) const;

    // Left slot multiplied by the algebra product, right slot by concatenation.
    Tensor2Polynomial tensor_mul_mixed(const Tensor2Polynomial& a, const Tensor2Polynomial& b,
                                       unsigned max_total_weight = kNoWeightBound) const;

    /* exp(P) = sum_k P^k / k! truncated at weight max_weight; P must be proper (std::invalid_argument otherwise).
     */
    NCPolynomial exp_proper(const NCPolynomial& p, unsigned max_weight, Product kind) const;
    // log(S) = sum_k (-1)^(k-1) (S - 1)^k / k; S must have constant term 1.
    NCPolynomial log_one_plus(const NCPolynomial& s, unsigned max_weight, Product kind) const;

    // Delta(P) = P (x) 1 + 1 (x) P, restricted to weight <= max_weight.
    bool is_primitive_by_coproduct(const NCPolynomial& p, unsigned max_weight) const;
    // <P | u * v> = 0 for all nonempty u, v with weight(u) + weight(v) <= max_weight.
    bool is_primitive_by_pairing(const NCPolynomial& p, unsigned max_weight) const;
    /* Both criteria; they are equivalent, so a disagreement raises std::logic_error.
     */
    bool is_primitive(const NCPolynomial& p, unsigned max_weight) const;

    /* <S | u * v> = <S | u><S | v> for all nonempty u, v with weight(u) + weight(v) <= max_weight. S must
     * have constant term 1 (std::invalid_argument otherwise).
     */
    bool is_grouplike(const NCPolynomial& s, unsigned max_weight) const;

private:
    Deformation deformation_;
    mutable detail::MemoTable<WordPair, NCPolynomial> products_;
    mutable detail::MemoTable<Word, Tensor2Polynomial> coproducts_;
};

// Free-function forms on the process-wide q-stuffle algebra.
NCPolynomial stuffle(const Word& u, const Word& v);
NCPolynomial stuffle_poly(const NCPolynomial& p, const NCPolynomial& q);
Tensor2Polynomial coproduct_stuffle(const NCPolynomial& p);

// Classical shuffle, computed by choosing the positions of u's letters (independent of the recursion above).
NCPolynomial shuffle(const Word& u, const Word& v);
NCPolynomial shuffle_poly(const NCPolynomial& p, const NCPolynomial& q);

// Deconcatenation: sum over w = uv of u (x) v.
Tensor2Polynomial coproduct_conc(const Word& w);
Tensor2Polynomial coproduct_conc(const NCPolynomial& p);

// Coefficient of the empty word.
QCoefficient counit(const NCPolynomial& p);

}  // namespace qstuffle

#endif  // QSTUFFLE_OPS_HPP
