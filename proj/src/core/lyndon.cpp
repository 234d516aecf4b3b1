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

#include "qstuffle/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstuffle {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!(w < w.suffix(i))) return false;
    return true;
}

std::vector<Word> lyndon_of_weight(unsigned n) {
    std::vector<Word> out;
    for (auto& w : words_of_weight(n))
        if (is_lyndon(w)) out.push_back(std::move(w));
    return out;
}

std::vector<Word> lyndon_up_to_weight(unsigned max_weight) {
    std::vector<Word> out;
    for (unsigned n = 1; n <= max_weight; ++n) {
        auto layer = lyndon_of_weight(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Word> cfl_factorize(const Word& w) {
    std::vector<Word> out;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && !letter_less(w[j], w[k])) {
            k = letter_less(w[k], w[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.push_back(w.subword(i, j - k));
            i += j - k;
        }
    }
    return out;
}

std::vector<std::pair<Word, unsigned>> cfl_factorize_grouped(const Word& w) {
    std::vector<std::pair<Word, unsigned>> out;
    for (auto& l : cfl_factorize(w)) {
        if (!out.empty() && out.back().first == l)
            ++out.back().second;
        else
            out.emplace_back(std::move(l), 1u);
    }
    return out;
}

std::pair<Word, Word> std_factorize(const Word& l) {
    if (l.size() < 2) throw std::invalid_argument("standard factorization needs a word of length >= 2");
    if (!is_lyndon(l)) throw std::invalid_argument("standard factorization of non-Lyndon word " + l.to_string());
    std::size_t best = 1;
    for (std::size_t i = 2; i < l.size(); ++i)
        if (l.suffix(i) < l.suffix(best)) best = i;
    return {l.prefix(best), l.suffix(best)};
}

StandardSequence::StandardSequence(std::vector<Word> entries) : entries_(std::move(entries)) {
    if (!is_standard(entries_)) {
        std::string text;
        for (const auto& e : entries_) text += (text.empty() ? "" : ";") + e.to_string();
        throw std::invalid_argument("not a standard sequence: (" + text + ")");
    }
}

bool StandardSequence::is_standard(const std::vector<Word>& entries) {
    if (entries.empty()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!is_lyndon(entries[i])) return false;
        if (entries[i].is_letter()) continue;
        const Word right = std_factorize(entries[i]).second;
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (right < entries[j]) return false;
    }
    return true;
}

StandardSequence StandardSequence::parse(const std::string& text) {
    std::vector<Word> entries;
    std::size_t pos = 0;
    while (true) {
        auto semi = text.find(';', pos);
        entries.push_back(Word::parse(text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return StandardSequence(std::move(entries));
}

std::string StandardSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) out += (i ? ";" : "") + entries_[i].to_string();
    return out;
}

bool StandardSequence::is_decreasing() const {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1]) return false;
    return true;
}

Word StandardSequence::flatten() const { return concat(entries_); }

std::vector<std::size_t> legal_rises(const StandardSequence& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (!(s[i] < s[i + 1])) continue;
        bool legal = true;
        for (std::size_t j = i + 2; j < s.size() && legal; ++j) legal = !(s[i + 1] < s[j]);
        if (legal) out.push_back(i);
    }
    return out;
}

namespace {

void require_legal_rise(const StandardSequence& s, std::size_t i) {
    auto rises = legal_rises(s);
    if (std::find(rises.begin(), rises.end(), i) == rises.end())
        throw std::invalid_argument("index " + std::to_string(i) + " is not a legal rise of (" + s.to_string() + ")");
}

}  // namespace

StandardSequence apply_lambda(const StandardSequence& s, std::size_t i) {
    require_legal_rise(s, i);
    std::vector<Word> e = s.entries();
    e[i] += e[i + 1];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(i + 1));
    return StandardSequence(std::move(e));
}

StandardSequence apply_rho(const StandardSequence& s, std::size_t i) {
    require_legal_rise(s, i);
    std::vector<Word> e = s.entries();
    std::swap(e[i], e[i + 1]);
    return StandardSequence(std::move(e));
}

std::vector<std::size_t> falls(const StandardSequence& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (!s[i].is_letter()) break;
        if (s[i + 1] < s[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> landmarks(const StandardSequence& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_letter()) return {i};
    return {};
}

StandardSequence apply_rho_inv(const StandardSequence& s, std::size_t i) {
    auto f = falls(s);
    if (std::find(f.begin(), f.end(), i) == f.end())
        throw std::invalid_argument("index " + std::to_string(i) + " is not a fall of (" + s.to_string() + ")");
    std::vector<Word> e = s.entries();
    std::swap(e[i], e[i + 1]);
    return StandardSequence(std::move(e));
}

StandardSequence apply_lambda_inv(const StandardSequence& s, std::size_t i) {
    auto m = landmarks(s);
    if (std::find(m.begin(), m.end(), i) == m.end())
        throw std::invalid_argument("index " + std::to_string(i) + " is not a landmark of (" + s.to_string() + ")");
    std::vector<Word> e = s.entries();
    auto [left, right] = std_factorize(e[i]);
    e[i] = std::move(left);
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(i + 1), std::move(right));
    return StandardSequence(std::move(e));
}

const char* to_string(TreeOp op) {
    switch (op) {
        case TreeOp::root: return "root";
        case TreeOp::lambda: return "lambda";
        case TreeOp::rho: return "rho";
        case TreeOp::rho_inv: return "rho_inv";
        case TreeOp::lambda_inv: return "lambda_inv";
    }
    return "?";
}

std::vector<StandardSequence> DerivationTree::leaves() const {
    if (is_leaf()) return {label};
    std::vector<StandardSequence> out;
    for (const auto& child : children) {
        auto sub = child.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

DerivationTree derivation_tree(const StandardSequence& s, RisePolicy policy) {
    DerivationTree node{s};
    if (s.is_decreasing()) return node;
    // A non-decreasing standard sequence always has a legal rise: its last rise.
    auto rises = legal_rises(s);
    if (rises.empty()) throw std::logic_error("no legal rise in non-decreasing sequence (" + s.to_string() + ")");
    node.rise = policy == RisePolicy::smallest ? rises.front() : rises.back();
    node.children.push_back(derivation_tree(apply_lambda(s, node.rise), policy));
    node.children.back().op = TreeOp::lambda;
    node.children.push_back(derivation_tree(apply_rho(s, node.rise), policy));
    node.children.back().op = TreeOp::rho;
    return node;
}

ConverseTree converse_tree(const StandardSequence& s) {
    ConverseTree node{s};
    for (std::size_t i : falls(s)) {
        node.children.push_back(converse_tree(apply_rho_inv(s, i)));
        node.children.back().op = TreeOp::rho_inv;
        node.children.back().index = i;
    }
    for (std::size_t i : landmarks(s)) {
        node.children.push_back(converse_tree(apply_lambda_inv(s, i)));
        node.children.back().op = TreeOp::lambda_inv;
        node.children.back().index = i;
    }
    return node;
}

std::set<StandardSequence> reachable_sequences(const StandardSequence& s) {
    std::set<StandardSequence> seen{s};
    std::vector<StandardSequence> stack{s};
    while (!stack.empty()) {
        StandardSequence t = std::move(stack.back());
        stack.pop_back();
        auto visit = [&](StandardSequence next) {
            if (seen.insert(next).second) stack.push_back(std::move(next));
        };
        for (std::size_t i : falls(t)) visit(apply_rho_inv(t, i));
        for (std::size_t i : landmarks(t)) visit(apply_lambda_inv(t, i));
    }
    return seen;
}

}  // namespace qstuffle
