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
// The PBW basis {Pi_w}, its dual {Sigma_w}, the pair {chi_w}/{xi_w}, and the checks tying them together.

#ifndef QSTUFFLE_BASES_HPP
#define QSTUFFLE_BASES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstuffle/eulerian.hpp"
#include "qstuffle/lyndon.hpp"
#include "qstuffle/report.hpp"

namespace qstuffle {

enum class BasisKind { pi, sigma, chi, xi };
const char* to_string(BasisKind kind);
BasisKind parse_basis_kind(const std::string& text);

/* Basis elements for every word of weight <= max_weight (the empty word included, mapped to 1).
 * pi/xi entries are unit upper triangular (w + larger words of the same weight), sigma/chi entries are unit
 * lower triangular.
 */
struct GradedBasis {
    BasisKind kind = BasisKind::pi;
    unsigned max_weight = 0;
    std::map<Word, NCPolynomial> entries;

    const NCPolynomial& at(const Word& w) const;
};

// Raised when a family handed to the dual solver is not unit triangular.
class TriangularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when two routes to the same basis element disagree. what() carries both values.
class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Triangularity { upper, lower };

/* Given a family F indexed by `words` (one weight class, ascending) with F_u unit triangular in the stated
 * direction, returns G with <G_v | F_u> = delta_{u,v}. Forward substitution only; the unit diagonal means no
 * division ever leaves Q[q]. Throws TriangularityError if F is not unit triangular inside the class.
 */
std::vector<NCPolynomial> dual_family(std::span<const Word> words, std::span<const NCPolynomial> family,
                                      Triangularity direction);

// Given Sigma of some word (any word, any weight), returns it.
using SigmaProvider = std::function<NCPolynomial(const Word&)>;

enum class SigmaMethod { oracle, recursive, both };

class Bases {
public:
    explicit Bases(const Algebra& algebra = Algebra::q_stuffle());

    const Algebra& algebra() const noexcept { return eulerian_.algebra(); }
    const Eulerian& eulerian() const noexcept { return eulerian_; }

    /* Pi_{y_k} = pi_1(y_k); Pi_l = [Pi_s, Pi_r] for the standard factorization (s, r) of a Lyndon l;
     * Pi_w = Pi_{l_1}^{i_1} ... Pi_{l_k}^{i_k} along the decreasing factorization. Pi of the empty word is 1.
     */
    const NCPolynomial& pi(const Word& w) const;
    // Pi_{l_1} ... Pi_{l_k} for a sequence of Lyndon words, in the given order.
    NCPolynomial pi_of_sequence(const StandardSequence& s) const;

    // Sigma_w by exact triangular solve against the Pi of its weight class.
    const NCPolynomial& sigma(const Word& w) const;

    // (Sigma_{l_1}^{*i_1} * ... * Sigma_{l_k}^{*i_k}) / (i_1! ... i_k!) along the decreasing factorization.
    NCPolynomial sigma_nonlyndon(const Word& w, const SigmaProvider& sigma_of_lyndon) const;
    /* Lyndon word with weakly increasing letters (s_1 >= s_2 >= ... as indices):
     * sum_i q^(i-1)/i! y_{s_1+...+s_i} Sigma_{y_s_{i+1}...y_s_k}. Throws std::invalid_argument otherwise.
     */
    NCPolynomial sigma_lyndon_increasing(const Word& w, const SigmaProvider& recurse) const;
    /* Any Lyndon word: over every standard sequence S = (y_a1, ..., y_ai, l_1, ..., l_n) with l_1 >= ... >= l_n
     * Lyndon, adds alpha_S q^(i-1)/i! y_{a_1+...+a_i} Sigma_{l_1...l_n}, where alpha_S counts the leaves (w) of the
     * derivation tree of S.
     */
    NCPolynomial sigma_lyndon_general(const Word& w, const SigmaProvider& recurse) const;

    // (l_1^{*i_1} * ... * l_k^{*i_k}) / (i_1! ... i_k!) on the raw Lyndon factors.
    NCPolynomial chi(const Word& w) const;

    GradedBasis pi_basis(unsigned max_weight) const;
    GradedBasis chi_basis(unsigned max_weight) const;
    GradedBasis sigma_oracle(unsigned max_weight) const;
    // Builds Sigma weight by weight from the recursive formulas only (no triangular solve).
    GradedBasis sigma_recursive(unsigned max_weight) const;
    // oracle / recursive / both; with both, any disagreement throws MismatchError naming the word and values.
    GradedBasis sigma_basis(unsigned max_weight, SigmaMethod method) const;
    // Dual of chi, by triangular solve.
    GradedBasis xi_basis(unsigned max_weight) const;
    GradedBasis basis(BasisKind kind, unsigned max_weight, SigmaMethod method = SigmaMethod::oracle) const;

    // <Sigma_v | Pi_u> = delta for all u, v of weight <= N (cross-weight pairs included).
    Report verify_duality(unsigned max_weight) const;
    /* The diagonal series, sum_w Sigma_w (x) Pi_w, and the decreasing product over Lyndon l of
     * exp(Sigma_l (x) Pi_l), all with the left slot under the algebra product and right slot under conc.
     */
    Report verify_factorization(unsigned max_weight) const;
    // Vanishing for n > m and the permanent formula for n = m, on random proper S_i and P_j = Pi_{l_j}.
    Report verify_proper_pairings(unsigned max_weight, std::uint64_t seed = 20261018) const;

private:
    const std::map<Word, NCPolynomial>& sigma_layer(unsigned n) const;

    Eulerian eulerian_;
    mutable detail::MemoTable<Word, NCPolynomial> pi_cache_;
    mutable detail::MemoTable<unsigned, std::map<Word, NCPolynomial>> sigma_layers_;
};

}  // namespace qstuffle

#endif  // QSTUFFLE_BASES_HPP
