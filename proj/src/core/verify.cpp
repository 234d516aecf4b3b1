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

#include "qstuffle/verify.hpp"

#include <stdexcept>
#include <tuple>

#include "qstuffle/format.hpp"

namespace qstuffle {

namespace {

void record(CheckResult& check, bool ok, const std::string& failure) {
    ++check.checked;
    if (ok) return;
    if (check.failed++ == 0) check.detail = failure;
    check.passed = false;
}

using Tensor3 = std::map<std::tuple<Word, Word, Word>, QCoefficient>;

void add3(Tensor3& t, const Word& a, const Word& b, const Word& c, const QCoefficient& x) {
    auto [it, fresh] = t.try_emplace({a, b, c}, x);
    if (!fresh) {
        it->second += x;
        if (it->second.is_zero()) t.erase(it);
    }
}

std::vector<Word> words_with_empty(unsigned max_weight) {
    std::vector<Word> out{Word()};
    for (auto& w : words_up_to_weight(max_weight)) out.push_back(std::move(w));
    return out;
}

}  // namespace

const char* to_string(Suite suite) {
    switch (suite) {
        case Suite::duality: return "duality";
        case Suite::primitivity: return "primitivity";
        case Suite::factorization: return "factorization";
        case Suite::axioms: return "axioms";
        case Suite::all: return "all";
    }
    return "?";
}

Suite parse_suite(const std::string& text) {
    for (Suite s : {Suite::duality, Suite::primitivity, Suite::factorization, Suite::axioms, Suite::all})
        if (text == to_string(s)) return s;
    throw std::invalid_argument("unknown suite '" + text + "'");
}

Report verify_primitivity(const Bases& bases, unsigned max_weight) {
    const Algebra& algebra = bases.algebra();
    CheckResult lyndon{"primitivity: Delta(Pi_l) = Pi_l (x) 1 + 1 (x) Pi_l"};
    CheckResult lyndon_pairing{"primitivity: <Pi_l | u * v> = 0 for nonempty u, v"};
    for (const auto& l : lyndon_up_to_weight(max_weight)) {
        const NCPolynomial& p = bases.pi(l);
        record(lyndon, algebra.is_primitive_by_coproduct(p, max_weight), "Pi_" + l.to_string());
        record(lyndon_pairing, algebra.is_primitive_by_pairing(p, max_weight), "Pi_" + l.to_string());
    }
    CheckResult projector{"primitivity: Delta(pi_1(w)) = pi_1(w) (x) 1 + 1 (x) pi_1(w)"};
    for (const auto& w : words_up_to_weight(max_weight))
        record(projector, algebra.is_primitive_by_coproduct(bases.eulerian().pi1(w), max_weight),
               "pi_1(" + w.to_string() + ")");
    return Report{{lyndon, lyndon_pairing, projector}};
}

Report verify_axioms(const Algebra& algebra, unsigned max_weight) {
    const auto words = words_with_empty(max_weight);
    CheckResult commutative{"axioms: u * v = v * u"};
    CheckResult shuffle_limit{"axioms: u * v at q = 0 equals the shuffle"};
    CheckResult associative{"axioms: (u * v) * w = u * (v * w)"};
    for (const auto& u : words)
        for (const auto& v : words) {
            const unsigned uv = weight(u) + weight(v);
            if (uv > max_weight) continue;
            const NCPolynomial& p = algebra.product(u, v);
            record(commutative, p == algebra.product(v, u), u.to_string() + " * " + v.to_string());
            record(shuffle_limit, p.eval_q(Rational(0)) == shuffle(u, v), u.to_string() + " * " + v.to_string());
            for (const auto& w : words) {
                if (uv + weight(w) > max_weight) continue;
                const NCPolynomial left = algebra.product(p, NCPolynomial(w));
                const NCPolynomial right = algebra.product(NCPolynomial(u), algebra.product(v, w));
                record(associative, left == right,
                       u.to_string() + " * " + v.to_string() + " * " + w.to_string() + ": " + to_text(left - right));
            }
        }

    CheckResult coassociative{"axioms: (Delta (x) id) Delta = (id (x) Delta) Delta"};
    CheckResult counit_check{"axioms: (eps (x) id) Delta = id = (id (x) eps) Delta"};
    CheckResult morphism{"axioms: deconcatenation is multiplicative for the product"};
    for (const auto& w : words) {
        const Tensor2Polynomial& d = algebra.coproduct(w);
        Tensor3 left;
        Tensor3 right;
        NCPolynomial from_left;
        NCPolynomial from_right;
        for (const auto& [ab, c] : d) {
            for (const auto& [xy, c2] : algebra.coproduct(ab.first)) add3(left, xy.first, xy.second, ab.second, c * c2);
            for (const auto& [xy, c2] : algebra.coproduct(ab.second)) add3(right, ab.first, xy.first, xy.second, c * c2);
            if (ab.first.empty()) from_left.add_term(ab.second, c);
            if (ab.second.empty()) from_right.add_term(ab.first, c);
        }
        record(coassociative, left == right, w.to_string());
        record(counit_check, from_left == NCPolynomial(w) && from_right == NCPolynomial(w), w.to_string());
    }
    for (const auto& u : words)
        for (const auto& v : words) {
            if (weight(u) + weight(v) > max_weight) continue;
            const Tensor2Polynomial lhs = coproduct_conc(algebra.product(u, v));
            const Tensor2Polynomial rhs = tensor_product(
                coproduct_conc(u), coproduct_conc(v), [&](const Word& a, const Word& b) { return algebra.product(a, b); },
                [&](const Word& a, const Word& b) { return algebra.product(a, b); });
            record(morphism, lhs == rhs, u.to_string() + ", " + v.to_string());
        }
    return Report{{commutative, associative, shuffle_limit, coassociative, counit_check, morphism}};
}

Report run_suite(const Bases& bases, Suite suite, unsigned max_weight) {
    if (max_weight == 0) throw std::invalid_argument("max weight must be at least 1");
    switch (suite) {
        case Suite::duality: return bases.verify_duality(max_weight);
        case Suite::primitivity: return verify_primitivity(bases, max_weight);
        case Suite::factorization: return bases.verify_factorization(max_weight);
        case Suite::axioms: return verify_axioms(bases.algebra(), max_weight);
        case Suite::all: {
            Report r = verify_axioms(bases.algebra(), max_weight);
            r.append(verify_primitivity(bases, max_weight));
            r.append(bases.verify_duality(max_weight));
            r.append(bases.verify_factorization(max_weight));
            r.append(bases.verify_proper_pairings(max_weight));
            return r;
        }
    }
    throw std::invalid_argument("unknown suite");
}

}  // namespace qstuffle
