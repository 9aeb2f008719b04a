#include "subshift/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace subshift {

const Substitution& kappa() {
    static const Substitution k(Alphabet("abcd"),
                                {{'a', "aca"}, {'b', "d"}, {'c', "b"}, {'d', "c"}});
    return k;
}

const std::vector<Word>& static_relators() {
    static const std::vector<Word> relators = {"aa", "bb", "cc", "dd", "bcd"};
    return relators;
}

const Word& relator_base(RelatorFamily family) {
    static const Word ad4 = "adadadad";
    static const Word adacac4 = "adacacadacacadacacadacac";
    return family == RelatorFamily::Ad4 ? ad4 : adacac4;
}

Word relator(RelatorFamily family, int k) {
    if (k < 0) throw std::invalid_argument("relator level must be non-negative");
    const Word& base = relator_base(family);
    const std::size_t a_count =
        static_cast<std::size_t>(std::count(base.begin(), base.end(), 'a'));

    // |kappa^k(w)| = |w| + 2*count_a(w)*(2^k - 1), since only kappa(a) grows
    // (by two letters) and the a-count doubles each round.
    if (k >= 62) throw CapacityError("relator level overflows the length law");
    const std::size_t final_length =
        base.size() + 2 * a_count * ((std::size_t{1} << k) - 1);
    check_capacity(final_length, "relator");

    Word w = base;
    for (int i = 0; i < k; ++i) w = apply(kappa(), w);
    return w;
}

std::vector<Word> lysenok_relators(int k_max) {
    if (k_max < 0) throw std::invalid_argument("relator level must be non-negative");
    std::vector<Word> relators = static_relators();
    relators.reserve(relators.size() + 2 * (static_cast<std::size_t>(k_max) + 1));
    for (int k = 0; k <= k_max; ++k) {
        relators.push_back(relator(RelatorFamily::Ad4, k));
        relators.push_back(relator(RelatorFamily::Adacac4, k));
    }
    return relators;
}

const LetterMap& tau_kappa_bridge() {
    static const LetterMap bridge{{'a', 'a'}, {'x', 'c'}, {'y', 'b'}, {'z', 'd'}};
    return bridge;
}

}  // namespace subshift
