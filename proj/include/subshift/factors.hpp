#pragma once

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

/// Least n such that |tau^n(a)| = 2^(n+1)-1 >= length.
int sufficient_power(std::size_t length);

// The complete set of length-L factors of the subshift, harvested by sliding
// a window over tau^(sufficient_power(L)+3)(a). Completeness: every factor of
// length <= 2^(n+1)-1 appears in tau^(n+3)(a).
class FactorSet {
public:
    static FactorSet build(std::size_t length);
    /// Harvest from tau^(harvest_power)(a) instead of the default
    /// tau^(sufficient_power(length)+3)(a); used by the stability checks.
    static FactorSet build(std::size_t length, int harvest_power);

    std::size_t length() const { return length_; }
    /// The n for which the harvest word was tau^(n+3)(a).
    int source_power() const { return source_power_; }
    std::size_t size() const { return words_.size(); }
    bool contains(std::string_view w) const;

    /// All factors, lexicographically sorted; views into a shared buffer.
    const std::vector<std::string_view>& words() const { return words_; }

private:
    FactorSet() = default;

    std::shared_ptr<const Word> text_;
    std::vector<std::string_view> words_;
    std::size_t length_ = 0;
    int source_power_ = 0;
};

struct ExtensionRecord {
    Word word;
    std::string right;  // distinct letters s with word.s a factor, sorted
    std::string left;   // distinct letters s with s.word a factor, sorted

    friend bool operator==(const ExtensionRecord&, const ExtensionRecord&) = default;
};

/// Both extension sets of a factor; throws NotAFactorError otherwise.
ExtensionRecord extensions(std::string_view w);

/// Number of distinct length-L factors.
std::size_t complexity_oracle(std::size_t length);

/// All length-L factors with at least two right (resp. left) extensions,
/// sorted by word, each with both extension sets filled.
std::vector<ExtensionRecord> right_special_oracle(std::size_t length);
std::vector<ExtensionRecord> left_special_oracle(std::size_t length);

/// Membership in the factor language; the empty word counts as a factor.
bool is_factor(std::string_view w);

// Per-length data delivered by sweep_lengths: counts for L and L+1 plus the
// special words of length L. Identical semantics to the single-length
// operations above, but all lengths share one harvest pass.
struct LengthData {
    std::size_t length;
    std::size_t count;       // C(L)
    std::size_t next_count;  // C(L+1)
    std::vector<ExtensionRecord> right_special;
    std::vector<ExtensionRecord> left_special;
};

/// Streams LengthData for L = 1..max_length in order; the visitor returns
/// false to stop early.
void sweep_lengths(std::size_t max_length, const std::function<bool(const LengthData&)>& visit);

}  // namespace subshift
