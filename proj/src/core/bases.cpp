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

#include "qstuffle/bases.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include "qstuffle/format.hpp"

namespace qstuffle {

const char* to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::pi: return "pi";
        case BasisKind::sigma: return "sigma";
        case BasisKind::chi: return "chi";
        case BasisKind::xi: return "xi";
    }
    return "?";
}

BasisKind parse_basis_kind(const std::string& text) {
    if (text == "pi") return BasisKind::pi;
    if (text == "sigma") return BasisKind::sigma;
    if (text == "chi") return BasisKind::chi;
    if (text == "xi") return BasisKind::xi;
    throw std::invalid_argument("unknown basis kind '" + text + "'");
}

const NCPolynomial& GradedBasis::at(const Word& w) const {
    auto it = entries.find(w);
    if (it == entries.end())
        throw std::out_of_range("word " + w.to_string() + " is outside the basis (max weight " +
                                std::to_string(max_weight) + ")");
    return it->second;
}

std::vector<NCPolynomial> dual_family(std::span<const Word> words, std::span<const NCPolynomial> family,
                                      Triangularity direction) {
    const std::size_t n = words.size();
    if (family.size() != n) throw std::invalid_argument("dual_family: size mismatch");
    // Position p in the solve; for a lower family the order is reversed so both cases become upper triangular.
    auto word_at = [&](std::size_t p) -> const Word& {
        return direction == Triangularity::upper ? words[p] : words[n - 1 - p];
    };
    std::map<Word, std::size_t> position;
    for (std::size_t p = 0; p < n; ++p) position.emplace(word_at(p), p);
    if (position.size() != n) throw std::invalid_argument("dual_family: repeated word");

    // a[r][c] = coefficient of word_at(c) in family element word_at(r); zero below the diagonal.
    std::vector<std::vector<QCoefficient>> a(n, std::vector<QCoefficient>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t index = direction == Triangularity::upper ? r : n - 1 - r;
        for (const auto& [w, c] : family[index]) {
            auto it = position.find(w);
            if (it == position.end() || it->second < r)
                throw TriangularityError("element for " + word_at(r).to_string() + " has term " + w.to_string() +
                                         " outside its triangle");
            a[r][it->second] = c;
        }
        if (!a[r][r].is_one())
            throw TriangularityError("element for " + word_at(r).to_string() + " lacks a unit leading term");
    }

    std::vector<NCPolynomial> dual(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<QCoefficient> g(v + 1);
        g[v] = QCoefficient(1);
        for (std::size_t u = v; u-- > 0;) {
            QCoefficient acc;
            for (std::size_t x = u + 1; x <= v; ++x)
                if (!g[x].is_zero() && !a[u][x].is_zero()) acc += g[x] * a[u][x];
            g[u] = -acc;
        }
        NCPolynomial element;
        for (std::size_t x = 0; x <= v; ++x) element.add_term(word_at(x), g[x]);
        const std::size_t index = direction == Triangularity::upper ? v : n - 1 - v;
        dual[index] = std::move(element);
    }
    return dual;
}

namespace {

// Runs fn(n) for n = 1..max_weight concurrently; rethrows the first failure.
template <class F>
void for_each_weight_parallel(unsigned max_weight, F&& fn) {
    std::vector<std::future<void>> jobs;
    for (unsigned n = max_weight; n >= 1; --n) jobs.push_back(std::async(std::launch::async, [&fn, n] { fn(n); }));
    for (auto& job : jobs) job.get();
}

}  // namespace

Bases::Bases(const Algebra& algebra) : eulerian_(algebra) {}

const NCPolynomial& Bases::pi(const Word& w) const {
    if (const auto* hit = pi_cache_.find(w)) return *hit;
    NCPolynomial result;
    if (w.empty()) {
        result = NCPolynomial::one();
    } else if (w.is_letter()) {
        result = eulerian_.pi1(w);
    } else if (is_lyndon(w)) {
        const auto [s, r] = std_factorize(w);
        result = bracket(pi(s), pi(r));
    } else {
        result = NCPolynomial::one();
        for (const auto& l : cfl_factorize(w)) result = result * pi(l);
    }
    return pi_cache_.insert(w, std::move(result));
}

NCPolynomial Bases::pi_of_sequence(const StandardSequence& s) const {
    NCPolynomial result = NCPolynomial::one();
    for (const auto& l : s.entries()) result = result * pi(l);
    return result;
}

const std::map<Word, NCPolynomial>& Bases::sigma_layer(unsigned n) const {
    if (const auto* hit = sigma_layers_.find(n)) return *hit;
    const auto words = words_of_weight(n);
    std::vector<NCPolynomial> family;
    family.reserve(words.size());
    for (const auto& w : words) family.push_back(pi(w));
    auto dual = dual_family(words, family, Triangularity::upper);
    std::map<Word, NCPolynomial> layer;
    for (std::size_t i = 0; i < words.size(); ++i) layer.emplace(words[i], std::move(dual[i]));
    return sigma_layers_.insert(n, std::move(layer));
}

const NCPolynomial& Bases::sigma(const Word& w) const {
    static const NCPolynomial one = NCPolynomial::one();
    if (w.empty()) return one;
    return sigma_layer(weight(w)).at(w);
}

NCPolynomial Bases::sigma_nonlyndon(const Word& w, const SigmaProvider& sigma_of_lyndon) const {
    NCPolynomial result = NCPolynomial::one();
    Rational denominator(1);
    for (const auto& [l, multiplicity] : cfl_factorize_grouped(w)) {
        result = algebra().product(result, algebra().power(sigma_of_lyndon(l), multiplicity));
        denominator *= factorial(multiplicity);
    }
    return result * QCoefficient(denominator.inverse());
}

NCPolynomial Bases::sigma_lyndon_increasing(const Word& w, const SigmaProvider& recurse) const {
    if (!is_lyndon(w)) throw std::invalid_argument(w.to_string() + " is not a Lyndon word");
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] < w[j + 1]) throw std::invalid_argument(w.to_string() + " does not have weakly increasing letters");
    NCPolynomial result;
    Letter head = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        head += w[i - 1];
        const QCoefficient c = algebra().q_power(static_cast<unsigned>(i - 1)) * factorial(static_cast<unsigned>(i)).inverse();
        if (c.is_zero()) continue;
        result += NCPolynomial(Word::letter(head)) * recurse(w.suffix(i)) * c;
    }
    return result;
}

NCPolynomial Bases::sigma_lyndon_general(const Word& w, const SigmaProvider& recurse) const {
    if (!is_lyndon(w)) throw std::invalid_argument(w.to_string() + " is not a Lyndon word");
    const StandardSequence target({w});
    // Every S = (y_a1, ..., y_ai, l_1 >= ... >= l_n) deriving to (w) is a rearrangement of the letters of w.
    std::vector<Letter> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    NCPolynomial result;
    do {
        Letter head = 0;
        for (std::size_t i = 1; i <= letters.size(); ++i) {
            head += letters[i - 1];
            const QCoefficient c =
                algebra().q_power(static_cast<unsigned>(i - 1)) * factorial(static_cast<unsigned>(i)).inverse();
            if (c.is_zero()) continue;
            const Word tail(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end()));
            std::vector<Word> entries;
            for (std::size_t j = 0; j < i; ++j) entries.push_back(Word::letter(letters[j]));
            for (auto& l : cfl_factorize(tail)) entries.push_back(std::move(l));
            const auto leaves = derivation_tree(StandardSequence(std::move(entries))).leaves();
            const auto alpha = std::count(leaves.begin(), leaves.end(), target);
            if (alpha == 0) continue;
            result += NCPolynomial(Word::letter(head)) * recurse(tail) * (c * Rational(static_cast<long>(alpha)));
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    return result;
}

NCPolynomial Bases::chi(const Word& w) const {
    NCPolynomial result = NCPolynomial::one();
    Rational denominator(1);
    for (const auto& [l, multiplicity] : cfl_factorize_grouped(w)) {
        result = algebra().product(result, algebra().power(NCPolynomial(l), multiplicity));
        denominator *= factorial(multiplicity);
    }
    return result * QCoefficient(denominator.inverse());
}

GradedBasis Bases::pi_basis(unsigned max_weight) const {
    GradedBasis b{BasisKind::pi, max_weight};
    b.entries.emplace(Word(), NCPolynomial::one());
    for (const auto& w : words_up_to_weight(max_weight)) b.entries.emplace(w, pi(w));
    return b;
}

GradedBasis Bases::chi_basis(unsigned max_weight) const {
    GradedBasis b{BasisKind::chi, max_weight};
    b.entries.emplace(Word(), NCPolynomial::one());
    for (const auto& w : words_up_to_weight(max_weight)) b.entries.emplace(w, chi(w));
    return b;
}

GradedBasis Bases::sigma_oracle(unsigned max_weight) const {
    GradedBasis b{BasisKind::sigma, max_weight};
    b.entries.emplace(Word(), NCPolynomial::one());
    for_each_weight_parallel(max_weight, [this](unsigned n) { sigma_layer(n); });
    for (unsigned n = 1; n <= max_weight; ++n)
        for (const auto& [w, p] : sigma_layer(n)) b.entries.emplace(w, p);
    return b;
}

GradedBasis Bases::sigma_recursive(unsigned max_weight) const {
    GradedBasis b{BasisKind::sigma, max_weight};
    b.entries.emplace(Word(), NCPolynomial::one());
    const SigmaProvider known = [&b](const Word& u) -> NCPolynomial {
        auto it = b.entries.find(u);
        if (it == b.entries.end()) throw std::logic_error("recursive Sigma needs " + u.to_string() + " first");
        return it->second;
    };
    for (unsigned n = 1; n <= max_weight; ++n) {
        std::map<Word, NCPolynomial> layer;
        for (const auto& w : words_of_weight(n))
            layer.emplace(w, is_lyndon(w) ? sigma_lyndon_general(w, known) : sigma_nonlyndon(w, known));
        b.entries.merge(layer);
    }
    return b;
}

GradedBasis Bases::sigma_basis(unsigned max_weight, SigmaMethod method) const {
    if (method == SigmaMethod::oracle) return sigma_oracle(max_weight);
    GradedBasis recursive = sigma_recursive(max_weight);
    if (method == SigmaMethod::recursive) return recursive;
    GradedBasis oracle = sigma_oracle(max_weight);
    for (const auto& [w, p] : oracle.entries) {
        const NCPolynomial& r = recursive.at(w);
        if (r != p)
            throw MismatchError("Sigma_" + w.to_string() + " differs between methods:\n  oracle:    " + to_text(p) +
                                "\n  recursive: " + to_text(r));
    }
    return oracle;
}

GradedBasis Bases::xi_basis(unsigned max_weight) const {
    GradedBasis b{BasisKind::xi, max_weight};
    b.entries.emplace(Word(), NCPolynomial::one());
    std::vector<std::map<Word, NCPolynomial>> layers(max_weight + 1);
    for_each_weight_parallel(max_weight, [&](unsigned n) {
        const auto words = words_of_weight(n);
        std::vector<NCPolynomial> family;
        family.reserve(words.size());
        for (const auto& w : words) family.push_back(chi(w));
        auto dual = dual_family(words, family, Triangularity::lower);
        for (std::size_t i = 0; i < words.size(); ++i) layers[n].emplace(words[i], std::move(dual[i]));
    });
    for (auto& layer : layers) b.entries.merge(layer);
    return b;
}

GradedBasis Bases::basis(BasisKind kind, unsigned max_weight, SigmaMethod method) const {
    switch (kind) {
        case BasisKind::pi: return pi_basis(max_weight);
        case BasisKind::sigma: return sigma_basis(max_weight, method);
        case BasisKind::chi: return chi_basis(max_weight);
        case BasisKind::xi: return xi_basis(max_weight);
    }
    throw std::invalid_argument("unknown basis kind");
}

namespace {

void record(CheckResult& check, bool ok, const std::string& failure) {
    ++check.checked;
    if (ok) return;
    if (check.failed++ == 0) check.detail = failure;
    check.passed = false;
}

}  // namespace

Report Bases::verify_duality(unsigned max_weight) const {
    std::vector<Word> words{Word()};
    for (const auto& w : words_up_to_weight(max_weight)) words.push_back(w);
    CheckResult same{"duality: <Sigma_v|Pi_u> = delta (same weight)"};
    CheckResult cross{"duality: <Sigma_v|Pi_u> = 0 (different weight)"};
    std::vector<std::size_t> per_weight(max_weight + 1, 0);
    for (const auto& v : words) {
        const NCPolynomial& s = sigma(v);
        for (const auto& u : words) {
            const QCoefficient value = pairing(s, pi(u));
            if (weight(u) == weight(v)) {
                ++per_weight[weight(u)];
                record(same, value == QCoefficient(u == v ? 1 : 0),
                       "<Sigma_" + v.to_string() + "|Pi_" + u.to_string() + "> = " + to_text(value));
            } else {
                record(cross, value.is_zero(),
                       "<Sigma_" + v.to_string() + "|Pi_" + u.to_string() + "> = " + to_text(value));
            }
        }
    }
    if (same.passed) {
        std::ostringstream out;
        out << "pairs per weight:";
        for (unsigned n = 0; n <= max_weight; ++n) out << ' ' << n << ':' << per_weight[n];
        same.detail = out.str();
    }
    return Report{{same, cross}};
}

Report Bases::verify_factorization(unsigned max_weight) const {
    const unsigned bound = 2 * max_weight;
    const Tensor2Polynomial diagonal = diagonal_series(max_weight).value;

    Tensor2Polynomial dual_sum;
    dual_sum.add_term(Word(), Word(), QCoefficient(1));
    for (const auto& w : words_up_to_weight(max_weight)) dual_sum += tensor(sigma(w), pi(w));

    auto lyndon = lyndon_up_to_weight(max_weight);
    std::sort(lyndon.begin(), lyndon.end(), [](const Word& a, const Word& b) { return b < a; });
    Tensor2Polynomial ordered_product = Tensor2Polynomial::one();
    for (const auto& l : lyndon) {
        const Tensor2Polynomial x = tensor(sigma(l), pi(l));
        Tensor2Polynomial factor = Tensor2Polynomial::one();
        Tensor2Polynomial term = Tensor2Polynomial::one();
        for (unsigned k = 1; k * weight(l) <= max_weight; ++k) {
            term = algebra().tensor_mul_mixed(term, x, bound) * QCoefficient(Rational(1, static_cast<long>(k)));
            factor += term;
        }
        ordered_product = algebra().tensor_mul_mixed(ordered_product, factor, bound);
    }

    CheckResult middle{"factorization: sum_w Sigma_w (x) Pi_w = D_Y"};
    record(middle, dual_sum == diagonal, "difference has " + std::to_string((dual_sum - diagonal).size()) + " terms");
    middle.checked = diagonal.size();
    CheckResult product{"factorization: prod_l exp(Sigma_l (x) Pi_l) = D_Y"};
    record(product, ordered_product == diagonal,
           "difference has " + std::to_string((ordered_product - diagonal).size()) + " terms");
    product.checked = lyndon.size();
    return Report{{middle, product}};
}

Report Bases::verify_proper_pairings(unsigned max_weight, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const auto lyndon = lyndon_up_to_weight(max_weight);

    // m Lyndon words with total weight <= max_weight.
    auto pick_lyndon = [&](std::size_t m) {
        while (true) {
            std::vector<Word> picked;
            unsigned total = 0;
            for (std::size_t j = 0; j < m; ++j) {
                picked.push_back(lyndon[uniform(0, lyndon.size() - 1)]);
                total += weight(picked.back());
            }
            if (total <= max_weight) return picked;
        }
    };
    // Proper polynomial mixing Sigma/Pi-related words with random words of weight <= limit.
    auto random_proper = [&](unsigned limit, const std::vector<Word>& hints) {
        NCPolynomial s;
        const std::size_t terms = uniform(1, 4);
        for (std::size_t t = 0; t < terms; ++t) {
            Word w;
            if (!hints.empty() && uniform(0, 1) == 0) {
                w = hints[uniform(0, hints.size() - 1)];
            } else {
                const auto layer = words_of_weight(static_cast<unsigned>(uniform(1, limit)));
                w = layer[uniform(0, layer.size() - 1)];
            }
            const auto c = static_cast<long>(uniform(0, 6)) - 3;
            s.add_term(w, QCoefficient::monomial(Rational(c == 0 ? 1 : c), static_cast<unsigned>(uniform(0, 1))));
        }
        return s;
    };
    auto lhs = [&](const std::vector<NCPolynomial>& s, const std::vector<Word>& l) {
        unsigned total = 0;
        NCPolynomial p = NCPolynomial::one();
        for (const auto& w : l) {
            total += weight(w);
            p = p * pi(w);
        }
        return pairing(algebra().product_of(s, total), p);
    };

    CheckResult vanish{"proper pairings: n > m gives 0"};
    CheckResult permanent{"proper pairings: n = m gives the permanent"};
    for (int trial = 0; trial < 24; ++trial) {
        const std::size_t m = uniform(1, std::min<std::size_t>(2, max_weight));
        const auto l = pick_lyndon(m);
        unsigned total = 0;
        for (const auto& w : l) total += weight(w);
        const std::size_t n = m + uniform(1, 2);
        std::vector<NCPolynomial> s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(random_proper(total, l));
        const QCoefficient value = lhs(s, l);
        record(vanish, value.is_zero(), "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ": " + to_text(value));
    }
    auto permanent_of = [&](const std::vector<NCPolynomial>& s, const std::vector<Word>& l) {
        std::vector<std::size_t> perm(l.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        QCoefficient sum;
        do {
            QCoefficient term(1);
            for (std::size_t i = 0; i < perm.size(); ++i) term *= pairing(s[i], pi(l[perm[i]]));
            sum += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return sum;
    };
    auto check_permanent = [&](const std::vector<NCPolynomial>& s, const std::vector<Word>& l) {
        const QCoefficient value = lhs(s, l);
        const QCoefficient expected = permanent_of(s, l);
        record(permanent, value == expected,
               "m=" + std::to_string(l.size()) + ": " + to_text(value) + " vs " + to_text(expected));
    };
    for (int trial = 0; trial < 24; ++trial) {
        const std::size_t m = uniform(1, std::min<std::size_t>(3, max_weight));
        const auto l = pick_lyndon(m);
        unsigned total = 0;
        for (const auto& w : l) total += weight(w);
        std::vector<Word> hints = l;
        for (const auto& w : l) hints.push_back(sigma(w).begin()->first);
        std::vector<NCPolynomial> s;
        for (std::size_t i = 0; i < m; ++i) s.push_back(random_proper(total, hints));
        check_permanent(s, l);
    }
    // S_i = Sigma_{l_i}: the permanent of the delta matrix.
    for (const auto& a : lyndon)
        for (const auto& b : lyndon) {
            if (weight(a) + weight(b) > max_weight) continue;
            const std::vector<Word> l{a, b};
            const QCoefficient value = lhs({sigma(a), sigma(b)}, l);
            record(permanent, value == QCoefficient(a == b ? 2 : 1),
                   "Sigma pair " + a.to_string() + ", " + b.to_string() + ": " + to_text(value));
        }
    return Report{{vanish, permanent}};
}

}  // namespace qstuffle
