#pragma once

#include <concepts>
#include <type_traits>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

// A non-erasing substitution: a total map letter -> non-empty word over a
// fixed alphabet, extended to words by concatenation.
class Substitution {
public:
    Substitution(Alphabet alphabet, std::vector<std::pair<char, Word>> images);

    const Alphabet& alphabet() const { return alphabet_; }

    /// Image of a single letter; throws std::domain_error for letters outside the alphabet.
    const Word& image(char letter) const { return images_[alphabet_.code(letter)]; }

private:
    Alphabet alphabet_;
    std::vector<Word> images_;  // indexed by letter code
};

/// Concatenation of the images of the letters of `w`, in order.
Word apply(const Substitution& sub, std::string_view w);

// Word arguments make std an associated namespace, which would hand
// unqualified calls in translation units that include <tuple> to std::apply;
// this more-specialized overload keeps them here.
template <class W>
    requires std::same_as<std::remove_cvref_t<W>, Word>
Word apply(const Substitution& sub, W&& w) {
    return apply(sub, std::string_view(w));
}

/// n-fold application to the one-letter word `letter`; n = 0 gives that word.
/// Capacity-guarded: the result length is computed before materialization.
Word iterate(const Substitution& sub, char letter, int n);

/// The substitution a -> axa, x -> y, y -> z, z -> x over {a,x,y,z}.
const Substitution& tau();

// tau^n(x) is a single letter cycling x -> y -> z -> x.
char tau_n_x(int n);

/// tau^n(a), built by the doubling step w -> w . tau^i(x) . w; length 2^(n+1)-1.
Word tau_n_a(int n);

// The one-sided fixed point eta = lim tau^n(a) starts a x a y a x a z ...;
// eta_prefix(len) materializes exactly its first `len` letters.
Word eta_prefix(std::size_t len);

}  // namespace subshift
