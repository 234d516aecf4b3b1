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

// Random generators and brute-force oracles shared by the test binaries. The oracles deliberately avoid the
// library's own algorithms: they work on plain index vectors and recurse from the right end.

#ifndef QSTUFFLE_TESTS_SUPPORT_HPP
#define QSTUFFLE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "qstuffle/bases.hpp"

namespace qstuffle::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2026;

class Gen {
public:
    explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational() {
        long den = integer(1, 6);
        return Rational(integer(-9, 9), den);
    }

    QCoefficient coefficient(unsigned max_degree = 3) {
        std::vector<Rational> c;
        const std::size_t degree = index(0, max_degree);
        for (std::size_t k = 0; k <= degree; ++k) c.push_back(index(0, 2) == 0 ? Rational(0) : rational());
        return QCoefficient::from_coefficients(std::move(c));
    }

    // Uniform over the compositions of a uniformly chosen weight in [lo, hi].
    Word word(unsigned lo, unsigned hi) {
        const auto n = static_cast<unsigned>(index(lo, hi));
        std::vector<Letter> letters;
        Letter part = 1;
        for (unsigned i = 1; i < n; ++i) {
            if (index(0, 1) == 0) {
                letters.push_back(part);
                part = 1;
            } else {
                ++part;
            }
        }
        if (n > 0) letters.push_back(part);
        return Word(std::move(letters));
    }

    NCPolynomial polynomial(unsigned lo, unsigned hi, std::size_t max_terms = 4) {
        NCPolynomial p;
        const std::size_t terms = index(1, max_terms);
        for (std::size_t t = 0; t < terms; ++t) p.add_term(word(lo, hi), coefficient(2));
        return p;
    }

    NCPolynomial homogeneous(unsigned n, std::size_t max_terms = 4) { return polynomial(n, n, max_terms); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---- word oracles ----------------------------------------------------------------------------------------

using Letters = std::vector<Letter>;

// Lexicographic order with y_1 > y_2 > ..., prefixes smaller.
inline bool oracle_less(const Letters& u, const Letters& v) {
    for (std::size_t i = 0; i < std::min(u.size(), v.size()); ++i)
        if (u[i] != v[i]) return u[i] > v[i];
    return u.size() < v.size();
}

inline bool lyndon_by_rotation(const Letters& w) {
    if (w.empty()) return false;
    for (std::size_t r = 1; r < w.size(); ++r) {
        Letters rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        if (!oracle_less(w, rot)) return false;
    }
    return true;
}

inline bool lyndon_by_suffix(const Letters& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!oracle_less(w, Letters(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))) return false;
    return true;
}

// Every way of cutting w into Lyndon words whose sequence is weakly decreasing.
inline std::vector<std::vector<Letters>> decreasing_lyndon_splittings(const Letters& w) {
    std::vector<std::vector<Letters>> out;
    std::vector<Letters> current;
    std::function<void(std::size_t)> go = [&](std::size_t pos) {
        if (pos == w.size()) {
            out.push_back(current);
            return;
        }
        for (std::size_t end = pos + 1; end <= w.size(); ++end) {
            Letters piece(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end));
            if (!lyndon_by_rotation(piece)) continue;
            if (!current.empty() && oracle_less(current.back(), piece)) continue;
            current.push_back(piece);
            go(end);
            current.pop_back();
        }
    };
    go(0);
    return out;
}

// Right factor of the classical standard factorization: the longest proper suffix that is Lyndon.
inline Letters longest_lyndon_proper_suffix(const Letters& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        Letters s(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (lyndon_by_rotation(s)) return s;
    }
    return {};
}

// ---- product oracles -------------------------------------------------------------------------------------

using RatPoly = std::map<Letters, Rational>;

inline void accumulate(RatPoly& p, const Letters& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

/* Quasi-shuffle with contraction weight c, by recursion on the last letters:
 * u a * v b = (u * v b) a + (u a * v) b + c (u * v)[a + b].
 */
inline RatPoly quasi_shuffle_right(const Letters& u, const Letters& v, const Rational& c) {
    RatPoly out;
    if (u.empty()) {
        out[v] = Rational(1);
        return out;
    }
    if (v.empty()) {
        out[u] = Rational(1);
        return out;
    }
    const Letters u0(u.begin(), u.end() - 1);
    const Letters v0(v.begin(), v.end() - 1);
    for (const auto& [key, x] : quasi_shuffle_right(u0, v, c)) {
        Letters w = key;
        w.push_back(u.back());
        accumulate(out, w, x);
    }
    for (const auto& [key, x] : quasi_shuffle_right(u, v0, c)) {
        Letters w = key;
        w.push_back(v.back());
        accumulate(out, w, x);
    }
    if (!c.is_zero())
        for (const auto& [key, x] : quasi_shuffle_right(u0, v0, c)) {
            Letters w = key;
            w.push_back(u.back() + v.back());
            accumulate(out, w, x * c);
        }
    return out;
}

inline RatPoly as_rat_poly(const NCPolynomial& p, const Rational& q0) {
    RatPoly out;
    for (const auto& [w, c] : p) accumulate(out, w.letters(), c.eval(q0));
    return out;
}

inline NCPolynomial from_rat_poly(const RatPoly& p) {
    NCPolynomial out;
    for (const auto& [w, c] : p) out.add_term(Word(w), QCoefficient(c));
    return out;
}

// pi_1 of a letter: y_k + sum_{l >= 2} (-q)^(l-1)/l sum_{j_1 + ... + j_l = k} y_j1 ... y_jl.
inline NCPolynomial pi1_letter_oracle(Letter k) {
    NCPolynomial out;
    for (const auto& w : words_of_weight(k)) {
        const auto l = static_cast<unsigned>(w.size());
        const Rational sign = l % 2 == 1 ? Rational(1) : Rational(-1);
        out.add_term(w, QCoefficient::monomial(sign * Rational(1, l), l - 1));
    }
    return out;
}

// ---- standard sequences ----------------------------------------------------------------------------------

// All standard sequences of 1..max_len Lyndon words with total weight <= max_weight.
inline std::vector<StandardSequence> standard_sequences(unsigned max_weight, std::size_t max_len) {
    const auto lyndon = lyndon_up_to_weight(max_weight);
    std::vector<StandardSequence> out;
    std::vector<Word> current;
    std::function<void(unsigned)> go = [&](unsigned used) {
        if (!current.empty() && StandardSequence::is_standard(current)) out.emplace_back(current);
        if (current.size() == max_len) return;
        for (const auto& l : lyndon) {
            if (used + weight(l) > max_weight) continue;
            current.push_back(l);
            go(used + weight(l));
            current.pop_back();
        }
    };
    go(0);
    return out;
}

}  // namespace qstuffle::testing

#endif  // QSTUFFLE_TESTS_SUPPORT_HPP
