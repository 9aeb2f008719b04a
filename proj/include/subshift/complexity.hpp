#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

/// The dyadic decomposition L = 2^n + k with n = floor(log2 L), 0 <= k < 2^n.
/// The closed forms below are stated for n >= 2 (i.e. L >= 4); smaller
/// lengths use the tabulated values.
struct Regime {
    int n;
    std::size_t k;

    friend bool operator==(const Regime&, const Regime&) = default;
};

/// Decompose L >= 1; throws std::invalid_argument for L = 0.
Regime regime_of(std::size_t length);

/// The exact complexity function: number of distinct factors of length L.
/// C(1)=4, C(2)=6, C(3)=8; for L = 2^n + k (n >= 2, 0 <= k < 2^n):
///   C(L) = 2^(n+1) + 2^(n-1) + 3k   if k < 2^(n-1)
///   C(L) = 2^(n+1) + 2^n     + 2k   otherwise.
/// C(0) = 1 by convention (the empty word); that value is a convention of
/// this library, not part of the verified range.
std::size_t complexity_formula(std::size_t length);

/// First difference C(L+1) - C(L) in closed form: 3 if k < 2^(n-1), else 2.
/// Only defined in the formula regime L >= 4; throws std::domain_error below
/// it (the small first differences C(2)-C(1), C(3)-C(2), C(4)-C(3) all
/// equal 2 and are covered by the values themselves).
int complexity_delta_formula(std::size_t length);

/// Which clause produced a predicted right-special word.
enum class SpecialConstruction {
    SmallLengthTable,  // L in {1,2,3}: tabulated, outside the closed form's regime
    SuffixOfPower,     // suffix of tau^n(a), right extensions {x,y,z}
    SuffixOfJunction,  // suffix of tau^(n-2)(a).tau^(n-2)(x).tau^(n-1)(a)
};

struct SpecialEntry {
    Word word;
    std::string extensions;  // distinct right-extension letters, sorted
    SpecialConstruction construction;

    friend bool operator==(const SpecialEntry&, const SpecialEntry&) = default;
};

/// The predicted right-special words of one length, sorted by word.
struct SpecialWordReport {
    std::size_t length = 0;
    std::vector<SpecialEntry> entries;
};

/// Closed-form right-special words. For L >= 4 with L = 2^n + k: always the
/// length-L suffix of tau^n(a) with extensions {x,y,z}; if additionally
/// k < 2^(n-1), also the length-L suffix of tau^(n-2)(a).tau^(n-2)(x).tau^(n-1)(a)
/// with extensions {tau^(n-2)(x), tau^(n-1)(x)}. For L in {1,2,3} the
/// tabulated single word ("a", "xa", "axa") with extensions {x,y,z}.
SpecialWordReport right_special_formula(std::size_t length);

// Outcome of the formula-vs-oracle cross-check. On failure the first
// counterexample is recorded: the length, which quantity disagreed, and both
// rendered values.
struct VerifyResult {
    std::size_t max_length = 0;
    bool pass = true;
    std::size_t fail_length = 0;
    std::string fail_kind;  // "complexity" | "delta" | "right-special"
    std::string formula_value;
    std::string oracle_value;

    /// Machine-readable one-liner: `VERIFY pass L_max=64`.
    std::string summary_line() const;
    /// Human-readable counterexample line; empty when pass.
    std::string failure_detail() const;
};

/// Check, for every L <= max_length: complexity_formula(L) equals the
/// brute-force count, the first differences agree (closed form for L >= 4),
/// and right_special_formula(L) equals the oracle's right-special words as
/// (word, extension-set) pairs. Stops at the first mismatch.
VerifyResult verify_range(std::size_t max_length);

struct ComplexityRow {
    std::size_t length;
    std::size_t c_formula;
    std::size_t c_oracle;
    std::size_t delta;  // C(L+1) - C(L), measured on the oracle
    int regime_n;
    std::size_t regime_k;
};

struct ComplexityProfile {
    std::size_t max_length = 0;
    std::vector<ComplexityRow> rows;  // one per length 1..max_length
};

/// Tabulate formula and oracle side by side for L = 1..max_length.
ComplexityProfile profile_range(std::size_t max_length);

/// Profile and verification from one shared sweep (the verification result
/// still reports only the first mismatch, but the profile is always full).
struct ProfileVerification {
    ComplexityProfile profile;
    VerifyResult verification;
};
ProfileVerification profile_and_verify(std::size_t max_length);

enum class TableFormat { Table, Csv, Tsv };

/// Emit the profile. Csv/Tsv use the fixed header
/// `L,C_formula,C_oracle,delta,regime_n,regime_k`; Table aligns the same
/// columns for reading. Output is byte-deterministic.
void write_profile(const ComplexityProfile& profile, std::ostream& out, TableFormat format);

}  // namespace subshift
