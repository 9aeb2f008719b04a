#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace subshift {

// A word is a finite sequence of letters; letters are the rendered symbol
// characters themselves ('a','x','y','z' on the substitution side, 'a'..'d'
// on the presentation side). Both alphabets are ASCII-increasing, so plain
// string comparison is the alphabet's lexicographic order.
using Word = std::string;

/// Thrown when a generator would produce a word longer than the configured cap.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Thrown by extension queries on a word that is not a factor of the subshift.
class NotAFactorError : public std::invalid_argument {
public:
    explicit NotAFactorError(const std::string& what) : std::invalid_argument(what) {}
};

// Global cap on the length of any generated word (prefixes, iterates,
// relators, factor harvests). Configurable from the CLI; thread-safe.
std::size_t capacity_limit();
void set_capacity_limit(std::size_t letters);

/// Throws CapacityError unless `letters <= capacity_limit()`.
void check_capacity(std::size_t letters, const char* what);

// An ordered finite set of symbols. The order in `symbols` defines the
// letter codes 0..size()-1 and the sort order used for output.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    std::string_view symbols() const { return symbols_; }
    bool contains(char letter) const { return codes_[byte(letter)] >= 0; }

    /// Code of `letter`; throws std::domain_error if the letter is not in the alphabet.
    std::size_t code(char letter) const;
    char symbol(std::size_t code) const;

private:
    static std::size_t byte(char c) { return static_cast<unsigned char>(c); }

    std::string symbols_;
    std::array<std::int8_t, 256> codes_;
};

// A partial injective letter-to-letter map; used to relabel words between
// the {a,x,y,z} and {a,b,c,d} alphabets.
class LetterMap {
public:
    LetterMap(std::initializer_list<std::pair<char, char>> pairs);

    bool maps(char letter) const { return to_[byte(letter)] >= 0; }

    /// Image of `letter`; throws std::domain_error if unmapped.
    char map(char letter) const;
    LetterMap inverse() const;

private:
    LetterMap() { to_.fill(-1); }
    static std::size_t byte(char c) { return static_cast<unsigned char>(c); }

    std::array<std::int16_t, 256> to_;
};

/// The word with the letters in reversed order.
Word reverse(std::string_view w);

/// Letter-wise image of `w` under `map`; throws std::domain_error on an unmapped letter.
Word relabel(std::string_view w, const LetterMap& map);

}  // namespace subshift
