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
// The Eulerian projector pi_1, its adjoint, the logarithm of the diagonal series and the reconstruction identities.

#ifndef QSTUFFLE_EULERIAN_HPP
#define QSTUFFLE_EULERIAN_HPP

#include "qstuffle/ops.hpp"

namespace qstuffle {

// sum_{weight(w) <= N} w (x) w
struct DiagonalSeries {
    unsigned max_weight = 0;
    Tensor2Polynomial value;
};

DiagonalSeries diagonal_series(unsigned max_weight);

/* pi_1 and its adjoint over a given algebra. Results of the direct formula are cached per weight class, so one
 * instance should be reused across calls. Thread-safe.
 */
class Eulerian {
public:
    explicit Eulerian(const Algebra& algebra = Algebra::q_stuffle());

    const Algebra& algebra() const noexcept { return algebra_; }

    /* pi_1(w) = sum_{k>=1} (-1)^(k-1)/k sum_{u_1..u_k nonempty} <w | u_1 * ... * u_k> u_1...u_k.
     * The whole weight class of w is expanded at once (3^(n-1) tuples) and cached. Throws on the empty word.
     */
    const NCPolynomial& pi1(const Word& w) const;
    NCPolynomial pi1(const NCPolynomial& p) const;

    /* Same value by the convolution logarithm: iterate the reduced coproduct on the last tensor slot and
     * concatenate, with weight (-1)^(k-1)/k at depth k.
     */
    NCPolynomial pi1_check(const Word& w) const;

    // sum_{k>=1} (-1)^(k-1)/k sum_{w = u_1...u_k, u_i nonempty} u_1 * ... * u_k. Throws on the empty word.
    NCPolynomial pi1_adjoint(const Word& w) const;
    NCPolynomial pi1_adjoint(const NCPolynomial& p) const;

    // log of the diagonal series, left slot under the algebra product and right slot under conc, expanded
    // term by term up to weight N in each slot.
    Tensor2Polynomial log_diagonal(unsigned max_weight) const;
    // sum_{1 <= weight(w) <= N} w (x) pi_1(w)
    Tensor2Polynomial log_diagonal_pi1_form(unsigned max_weight) const;
    // sum_{1 <= weight(w) <= N} adj(pi_1)(w) (x) w
    Tensor2Polynomial log_diagonal_adjoint_form(unsigned max_weight) const;

    // sum_k 1/k! sum <w | u_1 * ... * u_k> pi_1(u_1)...pi_1(u_k); equals w.
    NCPolynomial reconstruct(const Word& w) const;
    // sum_k 1/k! sum <w | u_1...u_k> adj(pi_1)(u_1) * ... * adj(pi_1)(u_k); equals w.
    NCPolynomial reconstruct_adjoint(const Word& w) const;
    // sum_k q^(k-1)/k! sum_{s_1+...+s_k = s} pi_1(y_s1)...pi_1(y_sk); equals y_s.
    NCPolynomial reconstruct_letter(Letter s) const;

private:
    const std::map<Word, NCPolynomial>& pi1_layer(unsigned n) const;

    const Algebra& algebra_;
    mutable detail::MemoTable<unsigned, std::map<Word, NCPolynomial>> layers_;
};

}  // namespace qstuffle

#endif  // QSTUFFLE_EULERIAN_HPP
