#include "subshift/factors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "subshift/substitution.hpp"

namespace subshift {

int sufficient_power(std::size_t length) {
    int n = 0;
    while ((std::uint64_t{1} << (n + 1)) - 1 < length) ++n;
    return n;
}

namespace {

// Doubling-rank table over one text: ranks_[j][i] is the equivalence class of
// the window text[i..i+2^j), with class numbers assigned in lexicographic
// order. Two same-length windows are equal iff their (class of first 2^j
// chars, class of last 2^j chars) pairs are equal, where 2^j is the largest
// power of two not exceeding the length — the two halves overlap and cover
// the window. Keys are exact identities; nothing depends on hashing.
class RankTable {
public:
    explicit RankTable(std::string_view text) : size_(text.size()) {
        std::array<bool, 256> seen{};
        for (unsigned char c : text) seen[c] = true;
        std::array<std::uint32_t, 256> cls{};
        std::uint32_t next_class = 0;
        for (std::size_t c = 0; c < cls.size(); ++c) {
            if (seen[c]) cls[c] = next_class++;
        }

        ranks_.emplace_back(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            ranks_[0][i] = cls[static_cast<unsigned char>(text[i])];
        }

        std::vector<std::uint32_t> order;
        for (std::size_t half = 1; half * 2 <= size_; half *= 2) {
            const std::vector<std::uint32_t>& prev = ranks_.back();
            const std::size_t count = size_ - half * 2 + 1;
            order.resize(count);
            std::iota(order.begin(), order.end(), 0u);
            const auto pair_of = [&](std::uint32_t i) {
                return std::pair(prev[i], prev[i + half]);
            };
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
                return pair_of(a) < pair_of(b);
            });
            std::vector<std::uint32_t> rank(count);
            std::uint32_t cls_id = 0;
            for (std::size_t r = 0; r < count; ++r) {
                if (r > 0 && pair_of(order[r]) != pair_of(order[r - 1])) ++cls_id;
                rank[order[r]] = cls_id;
            }
            ranks_.push_back(std::move(rank));
        }
    }

    /// Exact identity key of the window [pos, pos+len); comparing keys of
    /// same-length windows compares the windows lexicographically.
    std::uint64_t key(std::size_t pos, std::size_t len) const {
        const int level = std::bit_width(len) - 1;  // floor(log2 len)
        const std::vector<std::uint32_t>& r = ranks_[static_cast<std::size_t>(level)];
        const std::size_t tail = pos + len - (std::size_t{1} << level);
        return (static_cast<std::uint64_t>(r[pos]) << 32) | r[tail];
    }

private:
    std::size_t size_;
    std::vector<std::vector<std::uint32_t>> ranks_;
};

// The distinct fixed-length windows of one text, indexed 0,1,... in
// first-occurrence order; rep(i) is the first position of class i.
class WindowSet {
public:
    WindowSet(const RankTable& table, std::size_t len) : table_(&table), len_(len) {}

    void insert(std::size_t pos) {
        auto [it, fresh] = index_.try_emplace(table_->key(pos, len_),
                                              static_cast<std::uint32_t>(reps_.size()));
        if (fresh) reps_.push_back(static_cast<std::uint32_t>(pos));
    }

    /// Index of the window class at `pos`; throws if that content was never inserted.
    std::size_t index_of(std::size_t pos) const {
        const auto it = index_.find(table_->key(pos, len_));
        if (it == index_.end()) {
            throw std::logic_error("factor harvest inconsistency: window content not present");
        }
        return it->second;
    }

    std::size_t size() const { return reps_.size(); }
    std::uint32_t rep(std::size_t index) const { return reps_[index]; }
    std::size_t length() const { return len_; }

private:
    const RankTable* table_;
    std::size_t len_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> reps_;
};

WindowSet collect_windows(const RankTable& table, std::size_t len, std::size_t end) {
    WindowSet ws(table, len);
    for (std::size_t pos = 0; pos + len <= end; ++pos) ws.insert(pos);
    return ws;
}

const Alphabet& tau_alphabet() { return tau().alphabet(); }

std::string letters_of(std::uint8_t mask) {
    std::string out;
    for (std::size_t c = 0; c < tau_alphabet().size(); ++c) {
        if (mask & (1u << c)) out.push_back(tau_alphabet().symbol(c));
    }
    return out;
}

}  // namespace

FactorSet FactorSet::build(std::size_t length) {
    return build(length, sufficient_power(length) + 3);
}

FactorSet FactorSet::build(std::size_t length, int harvest_power) {
    if (length == 0) throw std::invalid_argument("factor length must be positive");
    if (harvest_power < sufficient_power(length) + 3) {
        throw std::invalid_argument("harvest power too small for completeness");
    }

    FactorSet fs;
    fs.length_ = length;
    fs.source_power_ = harvest_power - 3;
    fs.text_ = std::make_shared<const Word>(tau_n_a(harvest_power));
    const std::string_view text = *fs.text_;
    if (text.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw CapacityError("factor harvest exceeds the 32-bit indexing range");
    }

    const RankTable table(text);
    const WindowSet ws = collect_windows(table, length, text.size());

    // Key order is lexicographic order for same-length windows.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> by_key;
    by_key.reserve(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        by_key.emplace_back(table.key(ws.rep(i), length), ws.rep(i));
    }
    std::sort(by_key.begin(), by_key.end());
    fs.words_.reserve(by_key.size());
    for (const auto& [key, pos] : by_key) fs.words_.push_back(text.substr(pos, length));
    return fs;
}

bool FactorSet::contains(std::string_view w) const {
    if (w.size() != length_) return false;
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::size_t complexity_oracle(std::size_t length) { return FactorSet::build(length).size(); }

bool is_factor(std::string_view w) {
    if (w.empty()) return true;
    return FactorSet::build(w.size()).contains(w);
}

namespace {

ExtensionRecord extensions_in(std::string_view w, const FactorSet& longer) {
    ExtensionRecord rec;
    rec.word = Word(w);
    Word probe;
    for (char s : tau_alphabet().symbols()) {
        probe.assign(w);
        probe.push_back(s);
        if (longer.contains(probe)) rec.right.push_back(s);
        probe.assign(1, s);
        probe.append(w);
        if (longer.contains(probe)) rec.left.push_back(s);
    }
    return rec;
}

}  // namespace

ExtensionRecord extensions(std::string_view w) {
    if (!is_factor(w)) throw NotAFactorError("'" + Word(w) + "' is not a factor");
    const FactorSet longer = FactorSet::build(w.size() + 1);
    return extensions_in(w, longer);
}

std::vector<ExtensionRecord> right_special_oracle(std::size_t length) {
    const FactorSet here = FactorSet::build(length);
    const FactorSet longer = FactorSet::build(length + 1);
    std::vector<ExtensionRecord> out;
    for (std::string_view w : here.words()) {
        ExtensionRecord rec = extensions_in(w, longer);
        if (rec.right.size() >= 2) out.push_back(std::move(rec));
    }
    return out;  // here.words() is sorted, so out is too
}

std::vector<ExtensionRecord> left_special_oracle(std::size_t length) {
    const FactorSet here = FactorSet::build(length);
    const FactorSet longer = FactorSet::build(length + 1);
    std::vector<ExtensionRecord> out;
    for (std::string_view w : here.words()) {
        ExtensionRecord rec = extensions_in(w, longer);
        if (rec.left.size() >= 2) out.push_back(std::move(rec));
    }
    return out;
}

void sweep_lengths(std::size_t max_length, const std::function<bool(const LengthData&)>& visit) {
    if (max_length == 0) throw std::invalid_argument("max_length must be positive");

    // One harvest buffer serves every length: the per-length harvest words
    // tau^(sufficient_power(L)+3)(a) are nested prefixes of the largest one.
    const Word text_word = tau_n_a(sufficient_power(max_length + 1) + 3);
    const std::string_view text = text_word;
    const RankTable table(text);

    const auto harvest_len = [&](std::size_t len) {
        return std::min(text.size(), (std::size_t{1} << (sufficient_power(len) + 4)) - 1);
    };

    WindowSet cur = collect_windows(table, 1, harvest_len(1));
    for (std::size_t len = 1; len <= max_length; ++len) {
        WindowSet next = collect_windows(table, len + 1, harvest_len(len + 1));

        // Group the (len+1)-factors by their length-len prefix (right
        // extensions) and suffix (left extensions), as letter bitmasks.
        std::vector<std::uint8_t> right_mask(cur.size(), 0);
        std::vector<std::uint8_t> left_mask(cur.size(), 0);
        for (std::size_t j = 0; j < next.size(); ++j) {
            const std::size_t pos = next.rep(j);
            right_mask[cur.index_of(pos)] |=
                static_cast<std::uint8_t>(1u << tau_alphabet().code(text[pos + len]));
            left_mask[cur.index_of(pos + 1)] |=
                static_cast<std::uint8_t>(1u << tau_alphabet().code(text[pos]));
        }

        LengthData data;
        data.length = len;
        data.count = cur.size();
        data.next_count = next.size();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const bool rs = std::popcount(right_mask[i]) >= 2;
            const bool ls = std::popcount(left_mask[i]) >= 2;
            if (!rs && !ls) continue;
            ExtensionRecord rec{Word(text.substr(cur.rep(i), len)), letters_of(right_mask[i]),
                                letters_of(left_mask[i])};
            if (rs) data.right_special.push_back(rec);
            if (ls) data.left_special.push_back(std::move(rec));
        }
        const auto by_word = [](const ExtensionRecord& a, const ExtensionRecord& b) {
            return a.word < b.word;
        };
        std::sort(data.right_special.begin(), data.right_special.end(), by_word);
        std::sort(data.left_special.begin(), data.left_special.end(), by_word);

        if (!visit(data)) return;
        cur = std::move(next);
    }
}

}  // namespace subshift
