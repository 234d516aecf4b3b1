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
// Lyndon words, their factorizations, and the standard-sequence calculus (rises, falls, derivation trees).

#ifndef QSTUFFLE_LYNDON_HPP
#define QSTUFFLE_LYNDON_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qstuffle/words.hpp"

namespace qstuffle {

// Nonempty and strictly smaller than each of its proper suffixes.
bool is_lyndon(const Word& w);

// Lyndon words of weight n, ascending.
std::vector<Word> lyndon_of_weight(unsigned n);
std::vector<Word> lyndon_up_to_weight(unsigned max_weight);

// Unique factorization w = l_1 ... l_m into Lyndon words with l_1 >= ... >= l_m (Duval's algorithm).
std::vector<Word> cfl_factorize(const Word& w);

// Runs of equal factors in cfl_factorize: (l_1, i_1), ..., (l_k, i_k) with l_1 > ... > l_k.
std::vector<std::pair<Word, unsigned>> cfl_factorize_grouped(const Word& w);

/* Standard factorization (s, r) of a Lyndon word of length >= 2: r is the smallest proper suffix. Throws
 * std::invalid_argument for letters and non-Lyndon input.
 */
std::pair<Word, Word> std_factorize(const Word& l);

/* A sequence (l_1, ..., l_k) of Lyndon words in which every non-letter l_i has a standard right factor
 * l_i'' >= l_j for all j > i. Indices in the operations below are 0-based.
 */
class StandardSequence {
public:
    // Throws std::invalid_argument unless the entries form a standard sequence.
    explicit StandardSequence(std::vector<Word> entries);

    // "4;2;1" -> (y_4, y_2, y_1)
    static StandardSequence parse(const std::string& text);
    std::string to_string() const;

    static bool is_standard(const std::vector<Word>& entries);

    const std::vector<Word>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Word& operator[](std::size_t i) const { return entries_[i]; }

    bool is_decreasing() const;
    // Concatenation of the entries.
    Word flatten() const;

    friend bool operator==(const StandardSequence&, const StandardSequence&) = default;
    friend auto operator<=>(const StandardSequence& a, const StandardSequence& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<Word> entries_;
};

// Rises i (l_i < l_{i+1}) such that l_{i+1} >= l_j for every j >= i + 2.
std::vector<std::size_t> legal_rises(const StandardSequence& s);

// (..., l_i l_{i+1}, ...) for a legal rise i; throws std::invalid_argument otherwise.
StandardSequence apply_lambda(const StandardSequence& s, std::size_t i);
// (..., l_{i+1}, l_i, ...) for a legal rise i; throws std::invalid_argument otherwise.
StandardSequence apply_rho(const StandardSequence& s, std::size_t i);

// Indices i with l_0..l_i all letters and l_i > l_{i+1}.
std::vector<std::size_t> falls(const StandardSequence& s);
// The first non-letter entry, if every entry before it is a letter (at most one landmark exists).
std::vector<std::size_t> landmarks(const StandardSequence& s);

StandardSequence apply_rho_inv(const StandardSequence& s, std::size_t i);
StandardSequence apply_lambda_inv(const StandardSequence& s, std::size_t i);

enum class RisePolicy { smallest, largest };

enum class TreeOp { root, lambda, rho, rho_inv, lambda_inv };
const char* to_string(TreeOp op);

struct DerivationTree {
    StandardSequence label;
    TreeOp op = TreeOp::root;  // how this node was obtained from its parent
    std::size_t rise = 0;      // legal rise used to split; meaningful only for internal nodes
    // Empty for a leaf; otherwise {lambda child, rho child}.
    std::vector<DerivationTree> children;

    bool is_leaf() const noexcept { return children.empty(); }
    // Leaves left to right.
    std::vector<StandardSequence> leaves() const;
};

// Splits at the legal rise chosen by policy until every leaf is a decreasing sequence.
DerivationTree derivation_tree(const StandardSequence& s, RisePolicy policy = RisePolicy::smallest);

/* Converse derivation tree: one child per fall (via rho^-1) and one per landmark (via lambda^-1), recursively.
 * Distinct paths can reach the same sequence; reachable_sequences() deduplicates.
 */
struct ConverseTree {
    StandardSequence label;
    TreeOp op = TreeOp::root;
    std::size_t index = 0;
    std::vector<ConverseTree> children;
};

ConverseTree converse_tree(const StandardSequence& s);

// Every T with s <=* T, including s itself.
std::set<StandardSequence> reachable_sequences(const StandardSequence& s);

}  // namespace qstuffle

#endif  // QSTUFFLE_LYNDON_HPP
