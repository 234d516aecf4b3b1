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

#include "qstuffle/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qstuffle {

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Letter s : letters_)
        if (s == 0) throw std::invalid_argument("letter index must be >= 1");
}

Word Word::parse(std::string_view text) {
    if (text == "e") return Word();
    if (text.empty()) throw std::invalid_argument("empty word string (use \"e\" for the empty word)");
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        Letter s = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), s);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || s == 0)
            throw std::invalid_argument("malformed word: '" + std::string(text) + "'");
        letters.push_back(s);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

std::string Word::to_string() const {
    if (letters_.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
    if (pos > letters_.size()) throw std::out_of_range("subword position");
    count = std::min(count, letters_.size() - pos);
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
    return w;
}

Word& Word::operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] != v[i]) return letter_less(u[i], v[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return u.size() <=> v.size();
}

bool word_less(const Word& u, const Word& v) noexcept { return u < v; }

unsigned weight(const Word& w) noexcept {
    unsigned total = 0;
    for (Letter s : w) total += s;
    return total;
}

Word concat(std::span<const Word> parts) {
    Word w;
    for (const auto& p : parts) w += p;
    return w;
}

namespace {

void compositions(unsigned remaining, std::vector<Letter>& prefix, std::vector<Word>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (Letter first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> words_of_weight(unsigned n) {
    if (n == 0) throw std::invalid_argument("words_of_weight requires n >= 1");
    std::vector<Word> out;
    std::vector<Letter> prefix;
    compositions(n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_up_to_weight(unsigned max_weight) {
    std::vector<Word> out;
    for (unsigned n = 1; n <= max_weight; ++n) {
        auto layer = words_of_weight(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter s : w) {
        h ^= s;
        h *= 1099511628211ull;
    }
    return h ^ w.size();
}

}  // namespace qstuffle
