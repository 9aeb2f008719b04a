#pragma once

#include <vector>

#include "subshift/substitution.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// The presentation substitution over {a,b,c,d}:
/// kappa(a)=aca, kappa(b)=d, kappa(c)=b, kappa(d)=c.
const Substitution& kappa();

/// The five fixed relators: aa, bb, cc, dd, bcd.
const std::vector<Word>& static_relators();

// The two iterated relator families. All generators are involutions, so
// relators are plain positive words — no inverse letters are needed.
enum class RelatorFamily {
    Ad4,      // base (ad)^4,     |kappa^k(base)| = 2^(k+3)
    Adacac4,  // base (adacac)^4, |kappa^k(base)| = 3*2^(k+3)
};

const Word& relator_base(RelatorFamily family);

/// kappa applied k times to the family base; capacity-guarded.
Word relator(RelatorFamily family, int k);

/// The full relator list up to level k_max: the five static relators, then
/// for each k = 0..k_max the Ad4 member followed by the Adacac4 member.
std::vector<Word> lysenok_relators(int k_max);

/// The letter bijection {a->a, x->c, y->b, z->d}; conjugates tau to kappa:
/// relabel(apply(tau, w)) == apply(kappa, relabel(w)) for every word w
/// over {a,x,y,z}.
const LetterMap& tau_kappa_bridge();

}  // namespace subshift
