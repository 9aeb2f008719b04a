#include "subshift/word.hpp"

#include <atomic>

namespace subshift {

namespace {
std::atomic<std::size_t> g_capacity{std::size_t{1} << 26};
}

std::size_t capacity_limit() { return g_capacity.load(std::memory_order_relaxed); }

void set_capacity_limit(std::size_t letters) {
    if (letters == 0) throw std::invalid_argument("capacity limit must be positive");
    g_capacity.store(letters, std::memory_order_relaxed);
}

void check_capacity(std::size_t letters, const char* what) {
    const std::size_t cap = capacity_limit();
    if (letters > cap) {
        throw CapacityError(std::string(what) + ": " + std::to_string(letters) +
                            " letters exceed the capacity cap of " + std::to_string(cap));
    }
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
    codes_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const std::size_t b = byte(symbols_[i]);
        if (codes_[b] >= 0) throw std::invalid_argument("alphabet symbols must be distinct");
        codes_[b] = static_cast<std::int8_t>(i);
    }
}

std::size_t Alphabet::code(char letter) const {
    const std::int8_t c = codes_[byte(letter)];
    if (c < 0) {
        throw std::domain_error("letter '" + std::string(1, letter) + "' is not in alphabet {" +
                                symbols_ + "}");
    }
    return static_cast<std::size_t>(c);
}

char Alphabet::symbol(std::size_t code) const {
    if (code >= symbols_.size()) throw std::domain_error("letter code out of range");
    return symbols_[code];
}

LetterMap::LetterMap(std::initializer_list<std::pair<char, char>> pairs) {
    to_.fill(-1);
    std::array<bool, 256> used{};
    for (const auto& [from, to] : pairs) {
        if (to_[byte(from)] >= 0) throw std::invalid_argument("letter mapped twice");
        if (used[byte(to)]) throw std::invalid_argument("letter map is not injective");
        to_[byte(from)] = static_cast<std::int16_t>(static_cast<unsigned char>(to));
        used[byte(to)] = true;
    }
}

char LetterMap::map(char letter) const {
    const std::int16_t t = to_[byte(letter)];
    if (t < 0) throw std::domain_error("letter '" + std::string(1, letter) + "' is unmapped");
    return static_cast<char>(t);
}

LetterMap LetterMap::inverse() const {
    LetterMap inv;
    for (std::size_t b = 0; b < to_.size(); ++b) {
        if (to_[b] >= 0) inv.to_[static_cast<std::size_t>(to_[b])] = static_cast<std::int16_t>(b);
    }
    return inv;
}

Word reverse(std::string_view w) { return Word(w.rbegin(), w.rend()); }

Word relabel(std::string_view w, const LetterMap& map) {
    Word out;
    out.reserve(w.size());
    for (char c : w) out.push_back(map.map(c));
    return out;
}

}  // namespace subshift
