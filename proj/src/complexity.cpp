#include "subshift/complexity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "subshift/factors.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

Regime regime_of(std::size_t length) {
    if (length == 0) throw std::invalid_argument("regime decomposition needs L >= 1");
    const int n = std::bit_width(length) - 1;
    return Regime{n, length - (std::size_t{1} << n)};
}

std::size_t complexity_formula(std::size_t length) {
    switch (length) {
        case 0: return 1;  // the empty word, by convention
        case 1: return 4;
        case 2: return 6;
        case 3: return 8;
        default: break;
    }
    const auto [n, k] = regime_of(length);
    const std::size_t pow_n = std::size_t{1} << n;
    if (k < pow_n / 2) return 2 * pow_n + pow_n / 2 + 3 * k;
    return 2 * pow_n + pow_n + 2 * k;
}

int complexity_delta_formula(std::size_t length) {
    if (length < 4) throw std::domain_error("first-difference closed form needs L >= 4");
    const auto [n, k] = regime_of(length);
    return k < (std::size_t{1} << (n - 1)) ? 3 : 2;
}

SpecialWordReport right_special_formula(std::size_t length) {
    if (length == 0) throw std::invalid_argument("special words need L >= 1");
    SpecialWordReport report;
    report.length = length;
    if (length <= 3) {
        static constexpr std::array<std::string_view, 3> kTable = {"a", "xa", "axa"};
        report.entries.push_back(
            {Word(kTable[length - 1]), "xyz", SpecialConstruction::SmallLengthTable});
        return report;
    }

    const auto [n, k] = regime_of(length);
    const Word power = tau_n_a(n);
    report.entries.push_back(
        {power.substr(power.size() - length), "xyz", SpecialConstruction::SuffixOfPower});
    if (k < (std::size_t{1} << (n - 1))) {
        // tau^(n-2)(a) . tau^(n-2)(x) . tau^(n-1)(a), of length 3*2^(n-1)-1,
        // which is exactly the longest L of this regime.
        Word junction = tau_n_a(n - 2);
        junction.push_back(tau_n_x(n - 2));
        junction += tau_n_a(n - 1);
        std::string ext{tau_n_x(n - 2), tau_n_x(n - 1)};
        std::sort(ext.begin(), ext.end());
        report.entries.push_back({junction.substr(junction.size() - length), std::move(ext),
                                  SpecialConstruction::SuffixOfJunction});
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const SpecialEntry& a, const SpecialEntry& b) { return a.word < b.word; });
    return report;
}

std::string VerifyResult::summary_line() const {
    return std::string("VERIFY ") + (pass ? "pass" : "fail") + " L_max=" +
           std::to_string(max_length);
}

std::string VerifyResult::failure_detail() const {
    if (pass) return {};
    return "mismatch at L=" + std::to_string(fail_length) + " (" + fail_kind +
           "): formula=" + formula_value + " oracle=" + oracle_value;
}

namespace {

void record_failure(VerifyResult& verify, std::size_t length, const char* kind,
                    std::string formula_value, std::string oracle_value) {
    verify.pass = false;
    verify.fail_length = length;
    verify.fail_kind = kind;
    verify.formula_value = std::move(formula_value);
    verify.oracle_value = std::move(oracle_value);
}

std::string render_pairs(const std::vector<std::pair<std::string_view, std::string_view>>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ",";
        out += "(";
        out += items[i].first;
        out += "|";
        out += items[i].second;
        out += ")";
    }
    out += "}";
    return out;
}

void check_right_special(VerifyResult& verify, const LengthData& data) {
    const SpecialWordReport predicted = right_special_formula(data.length);
    bool equal = predicted.entries.size() == data.right_special.size();
    for (std::size_t i = 0; equal && i < predicted.entries.size(); ++i) {
        equal = predicted.entries[i].word == data.right_special[i].word &&
                predicted.entries[i].extensions == data.right_special[i].right;
    }
    if (equal) return;
    std::vector<std::pair<std::string_view, std::string_view>> lhs, rhs;
    for (const SpecialEntry& e : predicted.entries) lhs.emplace_back(e.word, e.extensions);
    for (const ExtensionRecord& r : data.right_special) rhs.emplace_back(r.word, r.right);
    record_failure(verify, data.length, "right-special", render_pairs(lhs), render_pairs(rhs));
}

// One oracle sweep feeding the profile and/or the verification; the
// verification records only the first mismatch, the profile is always full.
void scan(std::size_t max_length, ComplexityProfile* profile, VerifyResult* verify) {
    if (max_length == 0) throw std::invalid_argument("max_length must be positive");
    if (verify) {
        *verify = VerifyResult{};
        verify->max_length = max_length;
    }
    if (profile) {
        *profile = ComplexityProfile{};
        profile->max_length = max_length;
        profile->rows.reserve(max_length);
    }

    sweep_lengths(max_length, [&](const LengthData& data) {
        const std::size_t length = data.length;
        const std::size_t formula = complexity_formula(length);
        const long long oracle_delta = static_cast<long long>(data.next_count) -
                                       static_cast<long long>(data.count);

        if (profile) {
            const Regime regime = regime_of(length);
            profile->rows.push_back({length, formula, data.count,
                                     data.next_count - data.count, regime.n, regime.k});
        }

        if (verify && verify->pass) {
            if (formula != data.count) {
                record_failure(*verify, length, "complexity", std::to_string(formula),
                               std::to_string(data.count));
            } else if (length >= 4 && complexity_delta_formula(length) != oracle_delta) {
                record_failure(*verify, length, "delta",
                               std::to_string(complexity_delta_formula(length)),
                               std::to_string(oracle_delta));
            } else {
                check_right_special(*verify, data);
            }
        }
        return profile != nullptr || (verify != nullptr && verify->pass);
    });
}

}  // namespace

VerifyResult verify_range(std::size_t max_length) {
    VerifyResult result;
    scan(max_length, nullptr, &result);
    return result;
}

ComplexityProfile profile_range(std::size_t max_length) {
    ComplexityProfile profile;
    scan(max_length, &profile, nullptr);
    return profile;
}

ProfileVerification profile_and_verify(std::size_t max_length) {
    ProfileVerification both;
    scan(max_length, &both.profile, &both.verification);
    return both;
}

namespace {

std::array<std::string, 6> row_cells(const ComplexityRow& row) {
    return {std::to_string(row.length),   std::to_string(row.c_formula),
            std::to_string(row.c_oracle), std::to_string(row.delta),
            std::to_string(row.regime_n), std::to_string(row.regime_k)};
}

constexpr std::array<std::string_view, 6> kColumns = {"L",     "C_formula", "C_oracle",
                                                      "delta", "regime_n",  "regime_k"};

}  // namespace

void write_profile(const ComplexityProfile& profile, std::ostream& out, TableFormat format) {
    if (format == TableFormat::Csv || format == TableFormat::Tsv) {
        const char sep = format == TableFormat::Csv ? ',' : '\t';
        for (std::size_t c = 0; c < kColumns.size(); ++c) {
            if (c > 0) out << sep;
            out << kColumns[c];
        }
        out << '\n';
        for (const ComplexityRow& row : profile.rows) {
            const auto cells = row_cells(row);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c > 0) out << sep;
                out << cells[c];
            }
            out << '\n';
        }
        return;
    }

    std::array<std::size_t, 6> width;
    for (std::size_t c = 0; c < kColumns.size(); ++c) width[c] = kColumns[c].size();
    std::vector<std::array<std::string, 6>> body;
    body.reserve(profile.rows.size());
    for (const ComplexityRow& row : profile.rows) {
        body.push_back(row_cells(row));
        for (std::size_t c = 0; c < width.size(); ++c) {
            width[c] = std::max(width[c], body.back()[c].size());
        }
    }
    const auto emit = [&](const auto& cells) {
        for (std::size_t c = 0; c < width.size(); ++c) {
            if (c > 0) out << "  ";
            out << std::string(width[c] - std::string_view(cells[c]).size(), ' ') << cells[c];
        }
        out << '\n';
    };
    emit(kColumns);
    for (const auto& cells : body) emit(cells);
}

}  // namespace subshift
