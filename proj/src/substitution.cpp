#include "subshift/substitution.hpp"

#include <limits>

namespace subshift {

Substitution::Substitution(Alphabet alphabet, std::vector<std::pair<char, Word>> images)
    : alphabet_(std::move(alphabet)), images_(alphabet_.size()) {
    std::vector<bool> seen(alphabet_.size(), false);
    for (auto& [letter, image] : images) {
        if (!alphabet_.contains(letter)) {
            throw std::invalid_argument("image given for letter outside the alphabet");
        }
        const std::size_t c = alphabet_.code(letter);
        if (seen[c]) throw std::invalid_argument("duplicate image for a letter");
        if (image.empty()) throw std::invalid_argument("substitution must be non-erasing");
        for (char d : image) {
            if (!alphabet_.contains(d)) {
                throw std::invalid_argument("image contains a letter outside the alphabet");
            }
        }
        images_[c] = std::move(image);
        seen[c] = true;
    }
    for (std::size_t c = 0; c < seen.size(); ++c) {
        if (!seen[c]) {
            throw std::invalid_argument("no image for letter '" +
                                        std::string(1, alphabet_.symbol(c)) + "'");
        }
    }
}

Word apply(const Substitution& sub, std::string_view w) {
    std::size_t len = 0;
    for (char c : w) len += sub.image(c).size();
    Word out;
    out.reserve(len);
    for (char c : w) out += sub.image(c);
    return out;
}

Word iterate(const Substitution& sub, char letter, int n) {
    if (n < 0) throw std::invalid_argument("iteration count must be non-negative");
    const Alphabet& alpha = sub.alphabet();
    const std::size_t k = alpha.size();

    // Project the final length through letter counts before materializing
    // anything; the count vector evolves linearly under the substitution.
    std::vector<std::uint64_t> counts(k, 0);
    counts[alpha.code(letter)] = 1;
    std::vector<std::vector<std::uint64_t>> occ(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t c = 0; c < k; ++c) {
        for (char d : sub.image(alpha.symbol(c))) occ[c][alpha.code(d)] += 1;
    }
    for (int step = 0; step < n; ++step) {
        std::vector<std::uint64_t> next(k, 0);
        std::uint64_t len = 0;
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t d = 0; d < k; ++d) {
                std::uint64_t term = 0;
                if (__builtin_mul_overflow(counts[c], occ[c][d], &term) ||
                    __builtin_add_overflow(next[d], term, &next[d]) ||
                    __builtin_add_overflow(len, term, &len)) {
                    throw CapacityError("iterate: projected length overflows");
                }
            }
        }
        check_capacity(len, "iterate");
        counts = std::move(next);
    }

    Word w(1, letter);
    for (int step = 0; step < n; ++step) w = apply(sub, w);
    return w;
}

const Substitution& tau() {
    static const Substitution t{Alphabet{"axyz"},
                                {{'a', "axa"}, {'x', "y"}, {'y', "z"}, {'z', "x"}}};
    return t;
}

char tau_n_x(int n) {
    if (n < 0) throw std::invalid_argument("power must be non-negative");
    return "xyz"[n % 3];
}

Word tau_n_a(int n) {
    if (n < 0) throw std::invalid_argument("power must be non-negative");
    if (n >= 62) throw CapacityError("tau_n_a: length 2^(n+1)-1 is astronomically large");
    const std::size_t len = (std::size_t{1} << (n + 1)) - 1;
    check_capacity(len, "tau_n_a");

    Word w;
    w.reserve(len);
    w.push_back('a');
    for (int i = 0; i < n; ++i) {
        const std::size_t half = w.size();
        w.push_back(tau_n_x(i));
        w.append(w.data(), half);  // no reallocation: capacity was reserved up front
    }
    return w;
}

Word eta_prefix(std::size_t len) {
    if (len == 0) throw std::invalid_argument("prefix length must be positive");
    check_capacity(len, "eta_prefix");

    Word w;
    w.reserve(len);
    w.push_back('a');
    for (int i = 0; w.size() < len; ++i) {
        const std::size_t half = w.size();
        w.push_back(tau_n_x(i));
        // Full doubling step while it fits, then just the needed head of w.
        const std::size_t take = (2 * half + 1 <= len) ? half : len - half - 1;
        w.append(w.data(), take);
    }
    return w;
}

}  // namespace subshift
