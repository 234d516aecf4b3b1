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
// Words over the alphabet Y = {y_1, y_2, ...} ordered y_1 > y_2 > y_3 > ...

#ifndef QSTUFFLE_WORDS_HPP
#define QSTUFFLE_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qstuffle {

// Index s of the letter y_s; always >= 1.
using Letter = std::uint32_t;

// y_a < y_b exactly when a > b: a larger index is a smaller letter.
constexpr bool letter_less(Letter a, Letter b) noexcept { return a > b; }

/* A finite word y_{s_1}...y_{s_r}, stored as its index sequence. The empty word is 1_{Y*}.
 *
 * Comparison operators implement the lexicographic order induced by letter_less, with a proper prefix smaller
 * than its extensions. This is the order every triangularity statement in the library refers to.
 */
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    static Word letter(Letter s) { return Word({s}); }

    // "3,1,2" -> y_3 y_1 y_2 ; "e" -> empty word. Throws std::invalid_argument on anything else.
    static Word parse(std::string_view text);
    std::string to_string() const;

    bool empty() const noexcept { return letters_.empty(); }
    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    bool is_letter() const noexcept { return letters_.size() == 1; }

    // Letters [pos, pos + count).
    Word subword(std::size_t pos, std::size_t count = static_cast<std::size_t>(-1)) const;
    Word suffix(std::size_t pos) const { return subword(pos); }
    Word prefix(std::size_t count) const { return subword(0, count); }

    Word& operator+=(const Word& other);
    friend Word operator+(Word a, const Word& b) { return a += b; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept;

private:
    std::vector<Letter> letters_;
};

bool word_less(const Word& u, const Word& v) noexcept;

// Sum of the letter indices.
unsigned weight(const Word& w) noexcept;

// Concatenation of a sequence of words.
Word concat(std::span<const Word> parts);

// All compositions of n, each once, ascending in the word order. n >= 1; 2^(n-1) words.
std::vector<Word> words_of_weight(unsigned n);

// words_of_weight(1) ++ ... ++ words_of_weight(max_weight).
std::vector<Word> words_up_to_weight(unsigned max_weight);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace qstuffle

#endif  // QSTUFFLE_WORDS_HPP
