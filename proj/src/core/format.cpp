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

#include "qstuffle/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qstuffle {

namespace {

std::string bracketed(const Word& w) { return "[" + (w.empty() ? std::string() : w.to_string()) + "]"; }

// Magnitude of a*q^k for a > 0: "3q^2/2", "q/2", "q", "2".
std::string monomial_text(const Rational& a, std::size_t k) {
    if (k == 0) return a.to_string();
    const mpz_class num = a.numerator();
    const mpz_class den = a.denominator();
    std::string out = num == 1 ? "" : num.get_str();
    out += k == 1 ? "q" : "q^" + std::to_string(k);
    if (den != 1) out += "/" + den.get_str();
    return out;
}

std::string monomial_latex(const Rational& a, std::size_t k) {
    const mpz_class num = a.numerator();
    const mpz_class den = a.denominator();
    std::string top = k == 0 || num != 1 ? num.get_str() : "";
    if (k == 1) top += "q";
    if (k > 1) top += k < 10 ? "q^" + std::to_string(k) : "q^{" + std::to_string(k) + "}";
    return den == 1 ? top : "\\frac{" + top + "}{" + den.get_str() + "}";
}

// The single nonzero (power, coefficient) of a monomial, if it is one.
bool as_monomial(const QCoefficient& c, std::size_t& power, Rational& value) {
    if (c.term_count() != 1) return false;
    const auto& coeffs = c.coefficients();
    power = coeffs.size() - 1;
    value = coeffs.back();
    return true;
}

struct SignedTerm {
    bool negative;
    std::string body;
};

std::string join(const std::vector<SignedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) out += terms[i].negative ? "-" : "";
        else out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

std::string join_latex(const std::vector<SignedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += terms[i].negative ? "-" : (i == 0 ? "" : "+");
        out += terms[i].body;
    }
    return out;
}

// Coefficient c attached to `unit` (a rendered word, or "" for the empty word).
SignedTerm text_term(const QCoefficient& c, const std::string& unit) {
    std::size_t k = 0;
    Rational a;
    if (as_monomial(c, k, a)) {
        const bool negative = a.sign() < 0;
        if (negative) a = -a;
        const std::string m = monomial_text(a, k);
        if (unit.empty()) return {negative, m};
        return {negative, m == "1" ? unit : m + "·" + unit};
    }
    const std::string paren = "(" + to_text(c) + ")";
    return {false, unit.empty() ? paren : paren + "·" + unit};
}

SignedTerm latex_term(const QCoefficient& c, const std::string& unit) {
    std::size_t k = 0;
    Rational a;
    if (as_monomial(c, k, a)) {
        const bool negative = a.sign() < 0;
        if (negative) a = -a;
        const std::string m = monomial_latex(a, k);
        if (unit.empty()) return {negative, m};
        return {negative, m == "1" ? unit : m + unit};
    }
    const std::string paren = "\\left(" + to_latex(c) + "\\right)";
    return {false, paren + unit};
}

bool text_order(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

Json word_json(const Word& w) { return Json(w.letters()); }

Word word_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("word must be a JSON array of positive integers");
    std::vector<Letter> letters;
    for (const auto& x : j) {
        if (!x.is_number_unsigned() || x.get<std::uint64_t>() == 0 || x.get<std::uint64_t>() > 0xffffffffULL)
            throw std::invalid_argument("word letters must be positive integers");
        letters.push_back(x.get<Letter>());
    }
    return Word(std::move(letters));
}

const char* basis_symbol(BasisKind kind, bool latex) {
    switch (kind) {
        case BasisKind::pi: return latex ? "\\Pi" : "Pi";
        case BasisKind::sigma: return latex ? "\\Sigma" : "Sigma";
        case BasisKind::chi: return latex ? "\\chi" : "chi";
        case BasisKind::xi: return latex ? "\\xi" : "xi";
    }
    return "?";
}

// Entries by ascending weight, ascending word order inside a weight.
std::vector<const std::pair<const Word, NCPolynomial>*> by_weight(const GradedBasis& b) {
    std::vector<const std::pair<const Word, NCPolynomial>*> out;
    for (const auto& entry : b.entries) out.push_back(&entry);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto* x, const auto* y) { return weight(x->first) < weight(y->first); });
    return out;
}

}  // namespace

std::string to_text(const Rational& r) { return r.to_string(); }

std::string to_text(const QCoefficient& c) {
    std::vector<SignedTerm> terms;
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        const bool negative = coeffs[k].sign() < 0;
        terms.push_back({negative, monomial_text(negative ? -coeffs[k] : coeffs[k], k)});
    }
    return join(terms);
}

std::string to_text(const NCPolynomial& p) {
    std::vector<Word> words;
    for (const auto& [w, c] : p) words.push_back(w);
    std::sort(words.begin(), words.end(), text_order);
    std::vector<SignedTerm> terms;
    for (const auto& w : words) terms.push_back(text_term(p.coefficient(w), w.empty() ? "" : bracketed(w)));
    return join(terms);
}

std::string to_text(const Tensor2Polynomial& t) {
    std::vector<SignedTerm> terms;
    for (const auto& [uv, c] : t) {
        const std::string left = uv.first.empty() ? "1" : bracketed(uv.first);
        const std::string right = uv.second.empty() ? "1" : bracketed(uv.second);
        terms.push_back(text_term(c, left + "⊗" + right));
    }
    return join(terms);
}

std::string to_text(const GradedBasis& b) {
    std::ostringstream out;
    for (const auto* entry : by_weight(b))
        out << basis_symbol(b.kind, false) << "_" << bracketed(entry->first) << " = " << to_text(entry->second) << '\n';
    return out.str();
}

std::string to_latex(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const std::string index = w[i] < 10 ? std::to_string(w[i]) : "{" + std::to_string(w[i]) + "}";
        out += "y_" + index;
        if (j - i > 1) out += j - i < 10 ? "^" + std::to_string(j - i) : "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return out;
}

std::string to_latex(const QCoefficient& c) {
    std::vector<SignedTerm> terms;
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        const bool negative = coeffs[k].sign() < 0;
        terms.push_back({negative, monomial_latex(negative ? -coeffs[k] : coeffs[k], k)});
    }
    return join_latex(terms);
}

std::string to_latex(const NCPolynomial& p, TermOrder order) {
    std::vector<SignedTerm> terms;
    for (const auto& [w, c] : p) terms.push_back(latex_term(c, w.empty() ? "" : to_latex(w)));
    if (order == TermOrder::descending) std::reverse(terms.begin(), terms.end());
    return join_latex(terms);
}

std::string to_latex(const GradedBasis& b) {
    const TermOrder order =
        b.kind == BasisKind::pi || b.kind == BasisKind::xi ? TermOrder::ascending : TermOrder::descending;
    std::ostringstream out;
    out << "\\begin{eqnarray}\n";
    std::size_t remaining = b.entries.size();
    for (const auto* entry : by_weight(b)) {
        out << basis_symbol(b.kind, true) << "_{" << to_latex(entry->first) << "}&=&" << to_latex(entry->second, order)
            << (--remaining ? ",\\\\\n" : ".\n");
    }
    out << "\\end{eqnarray}\n";
    return out.str();
}

Json to_json(const QCoefficient& c) {
    Json out = Json::array();
    const auto& coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) out.push_back({{"qpow", k}, {"coeff", coeffs[k].to_string()}});
    return out;
}

Json to_json(const NCPolynomial& p) {
    Json out = Json::array();
    for (const auto& [w, c] : p) out.push_back({{"word", word_json(w)}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const Tensor2Polynomial& t) {
    Json out = Json::array();
    for (const auto& [uv, c] : t)
        out.push_back({{"left", word_json(uv.first)}, {"right", word_json(uv.second)}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const GradedBasis& b) {
    Json entries = Json::object();
    for (const auto* entry : by_weight(b)) entries[entry->first.to_string()] = to_json(entry->second);
    return {{"kind", to_string(b.kind)}, {"N", b.max_weight}, {"generator-version", kGeneratorVersion},
            {"entries", std::move(entries)}};
}

namespace {

Json label_json(const StandardSequence& s) {
    Json out = Json::array();
    for (const auto& w : s.entries()) out.push_back(word_json(w));
    return out;
}

}  // namespace

Json to_json(const DerivationTree& t) {
    Json out{{"label", label_json(t.label)}, {"op", to_string(t.op)}};
    if (!t.is_leaf()) out["rise"] = t.rise;
    Json children = Json::array();
    for (const auto& c : t.children) children.push_back(to_json(c));
    out["children"] = std::move(children);
    return out;
}

Json to_json(const ConverseTree& t) {
    Json out{{"label", label_json(t.label)}, {"op", to_string(t.op)}};
    if (t.op != TreeOp::root) out["index"] = t.index;
    Json children = Json::array();
    for (const auto& c : t.children) children.push_back(to_json(c));
    out["children"] = std::move(children);
    return out;
}

Json to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"failed", c.failed},
                          {"detail", c.detail}});
    return {{"passed", r.passed()}, {"checks", std::move(checks)}};
}

QCoefficient qcoefficient_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient must be a JSON array");
    QCoefficient out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("qpow") || !term.contains("coeff") ||
            !term["qpow"].is_number_unsigned() || !term["coeff"].is_string())
            throw std::invalid_argument("coefficient term must be {\"qpow\": n, \"coeff\": \"num/den\"}");
        out += QCoefficient::monomial(Rational::parse(term["coeff"].get<std::string>()),
                                      term["qpow"].get<unsigned>());
    }
    return out;
}

NCPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    NCPolynomial out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("word") || !term.contains("coeff"))
            throw std::invalid_argument("polynomial term must be {\"word\": [...], \"coeff\": [...]}");
        out.add_term(word_from_json(term["word"]), qcoefficient_from_json(term["coeff"]));
    }
    return out;
}

Tensor2Polynomial tensor_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("tensor must be a JSON array");
    Tensor2Polynomial out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("left") || !term.contains("right") || !term.contains("coeff"))
            throw std::invalid_argument("tensor term must be {\"left\", \"right\", \"coeff\"}");
        out.add_term(word_from_json(term["left"]), word_from_json(term["right"]), qcoefficient_from_json(term["coeff"]));
    }
    return out;
}

GradedBasis basis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("N") || !j.contains("entries") ||
        !j["kind"].is_string() || !j["N"].is_number_unsigned() || !j["entries"].is_object())
        throw std::invalid_argument("basis must be {\"kind\", \"N\", \"entries\"}");
    GradedBasis b{parse_basis_kind(j["kind"].get<std::string>()), j["N"].get<unsigned>()};
    for (const auto& [key, value] : j["entries"].items()) b.entries.emplace(Word::parse(key), polynomial_from_json(value));
    return b;
}

GradedBasis eval_q(const GradedBasis& b, const Rational& q0) {
    GradedBasis out{b.kind, b.max_weight};
    for (const auto& [w, p] : b.entries) out.entries.emplace(w, p.eval_q(q0));
    return out;
}

}  // namespace qstuffle
