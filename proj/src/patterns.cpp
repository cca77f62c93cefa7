#include "patience/patterns.hpp"

#include <algorithm>
#include <array>

#include "patience/errors.hpp"
#include "patience/sweep.hpp"

namespace patience {

namespace {

constexpr int kMaxPatternLength = 16;

}  // namespace

GenPattern::GenPattern(std::vector<int> letters, std::vector<bool> joined, std::optional<int> barred)
    : letters_(std::move(letters)), joined_(std::move(joined)), barred_(barred) {
    const int m = length();
    if (m > kMaxPatternLength) throw ParseError("patterns are limited to 16 letters");
    if (joined_.size() != letters_.size()) throw ParseError("block flags do not match letters");
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : letters_) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) throw ParseError("letters must be a permutation of 1..m");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (!joined_.empty()) joined_[0] = false;
    if (barred_) {
        const int b = *barred_;
        if (b < 0 || b >= m) throw ParseError("barred index out of range");
        if (this->joined(b) || (b + 1 < m && this->joined(b + 1))) {
            throw UnsupportedBar("a barred letter must form its own dash-delimited block");
        }
    }
}

std::vector<std::vector<int>> GenPattern::blocks() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < length(); ++i) {
        if (!joined(i)) out.emplace_back();
        out.back().push_back(i);
    }
    return out;
}

GenPattern GenPattern::core() const {
    if (!barred_) return *this;
    const int b = *barred_;
    const int removed = letters_[static_cast<std::size_t>(b)];
    std::vector<int> letters;
    std::vector<bool> joined;
    for (int i = 0; i < length(); ++i) {
        if (i == b) continue;
        const int v = letters_[static_cast<std::size_t>(i)];
        letters.push_back(v > removed ? v - 1 : v);
        joined.push_back(this->joined(i));
    }
    return GenPattern(std::move(letters), std::move(joined));
}

GenPattern GenPattern::stripped() const { return GenPattern(letters_, joined_); }

std::string GenPattern::to_string() const {
    std::string s;
    for (int i = 0; i < length(); ++i) {
        if (i > 0 && !joined(i)) s += '-';
        if (barred_ && *barred_ == i) s += '!';
        s += static_cast<char>('0' + letters_[static_cast<std::size_t>(i)]);
    }
    return s;
}

GenPattern parse_pattern(std::string_view text) {
    if (text.empty()) throw ParseError("empty pattern");
    std::vector<int> letters;
    std::vector<bool> joined;
    std::optional<int> barred;
    bool block_open = false;  // current block already has a letter
    bool pending_bar = false;
    int bars = 0;
    for (char c : text) {
        if (c == '-') {
            if (!block_open || pending_bar) throw ParseError("empty block in pattern '" + std::string(text) + "'");
            block_open = false;
        } else if (c == '!') {
            if (pending_bar) throw ParseError("doubled bar in pattern '" + std::string(text) + "'");
            pending_bar = true;
        } else if (c >= '1' && c <= '9') {
            if (pending_bar) {
                ++bars;
                barred = static_cast<int>(letters.size());
                pending_bar = false;
            }
            letters.push_back(c - '0');
            joined.push_back(block_open);
            block_open = true;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in pattern");
        }
    }
    if (!block_open || pending_bar) throw ParseError("pattern ends with an empty block");
    if (bars > 1) throw UnsupportedBar("at most one barred letter is supported");
    return GenPattern(std::move(letters), std::move(joined), barred);
}

PatternMatcher::PatternMatcher(GenPattern pattern) : pattern_(std::move(pattern)) {
    const GenPattern core = pattern_.core();
    core_letters_ = core.letters();
    for (int i = 0; i < core.length(); ++i) core_joined_.push_back(core.joined(i));
    if (const auto b = pattern_.barred()) {
        bar_ = *b;
        const auto& letters = pattern_.letters();
        const int v = letters[static_cast<std::size_t>(bar_)];
        for (int i = 0; i < pattern_.length(); ++i) {
            if (letters[static_cast<std::size_t>(i)] == v - 1) below_ = i;
            if (letters[static_cast<std::size_t>(i)] == v + 1) above_ = i;
        }
    }
}

// Backtracks over pattern letters left to right, pruning on block contiguity
// and incremental order-isomorphism. visit(positions) returns false to stop;
// search returns false if stopped.
template <class Visit>
bool PatternMatcher::search(std::span<const int> word, const std::vector<int>& letters,
                            const std::vector<bool>& joined, Visit& visit) const {
    const int n = static_cast<int>(word.size());
    const int m = static_cast<int>(letters.size());
    if (m == 0) return visit(std::span<const int>{});
    if (m > n) return true;
    std::array<int, kMaxPatternLength> pos{};  // 0-based host positions

    auto fits = [&](int i, int q) {
        const int v = word[static_cast<std::size_t>(q)];
        for (int k = 0; k < i; ++k) {
            const bool host_less = v < word[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])];
            if (host_less != (letters[static_cast<std::size_t>(i)] < letters[static_cast<std::size_t>(k)])) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return visit(std::span<const int>(pos.data(), static_cast<std::size_t>(m)));
        const int first = i == 0 ? 0 : pos[static_cast<std::size_t>(i - 1)] + 1;
        const int last = joined[static_cast<std::size_t>(i)] && i > 0 ? first : n - (m - i);
        for (int q = first; q <= last; ++q) {
            if (!fits(i, q)) continue;
            pos[static_cast<std::size_t>(i)] = q;
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

bool PatternMatcher::extends(std::span<const int> word, std::span<const int> core_positions) const {
    // Host position of original letter i (i != bar_), 0-based.
    auto at = [&](int i) { return core_positions[static_cast<std::size_t>(i < bar_ ? i : i - 1)]; };
    const int n = static_cast<int>(word.size());
    const int lo_pos = bar_ == 0 ? -1 : at(bar_ - 1);
    const int hi_pos = bar_ == pattern_.length() - 1 ? n : at(bar_ + 1);
    const int lo_val = below_ < 0 ? 0 : word[static_cast<std::size_t>(at(below_))];
    const int hi_val = above_ < 0 ? n + 1 : word[static_cast<std::size_t>(at(above_))];
    for (int q = lo_pos + 1; q < hi_pos; ++q) {
        const int v = word[static_cast<std::size_t>(q)];
        if (v > lo_val && v < hi_val) return true;
    }
    return false;
}

bool PatternMatcher::avoided_by(std::span<const int> word) const {
    if (bar_ < 0) {
        auto stop = [](std::span<const int>) { return false; };
        return search(word, core_letters_, core_joined_, stop);
    }
    auto check = [&](std::span<const int> core_positions) { return extends(word, core_positions); };
    return search(word, core_letters_, core_joined_, check);
}

std::vector<Occurrence> PatternMatcher::occurrences(std::span<const int> word) const {
    if (bar_ >= 0) throw BarredNotAllowed("occurrences() needs an unbarred pattern; use avoids()");
    std::vector<Occurrence> out;
    auto collect = [&](std::span<const int> pos) {
        Occurrence o;
        for (int q : pos) o.positions.push_back(q + 1);
        out.push_back(std::move(o));
        return true;
    };
    search(word, core_letters_, core_joined_, collect);
    return out;
}

std::vector<Occurrence> occurrences(const Permutation& p, const GenPattern& pattern) {
    if (pattern.barred()) throw BarredNotAllowed("occurrences() needs an unbarred pattern; use avoids()");
    return PatternMatcher(pattern).occurrences(p.word());
}

bool avoids(const Permutation& p, const GenPattern& pattern) { return PatternMatcher(pattern).avoided_by(p.word()); }

namespace {

std::vector<PatternMatcher> compile(std::span<const GenPattern> patterns) {
    std::vector<PatternMatcher> out;
    out.reserve(patterns.size());
    for (const GenPattern& pat : patterns) out.emplace_back(pat);
    return out;
}

bool avoids_all(const std::vector<PatternMatcher>& matchers, std::span<const int> word) {
    return std::all_of(matchers.begin(), matchers.end(), [&](const PatternMatcher& m) { return m.avoided_by(word); });
}

}  // namespace

std::vector<Permutation> avoidance_set(int n, std::span<const GenPattern> patterns, int bound) {
    if (n > bound) throw OracleBoundExceeded(n, bound);
    const auto matchers = compile(patterns);
    return filter_symmetric_group(n, [&](const Permutation& p) { return avoids_all(matchers, p.word()); });
}

std::uint64_t avoidance_count(int n, std::span<const GenPattern> patterns) {
    if (n > 12) throw OracleBoundExceeded(n, 12);
    const auto matchers = compile(patterns);
    return count_symmetric_group(n, [&](const Permutation& p) { return avoids_all(matchers, p.word()); });
}

Permutation layered_pattern(const Shape& shape) {
    std::vector<int> w;
    int base = 0;
    for (int part : shape.parts) {
        if (part < 1) throw InvalidPermutation("layered pattern parts must be positive");
        for (int v = base + part; v > base; --v) w.push_back(v);
        base += part;
    }
    return Permutation::from_trusted(std::move(w));
}

bool is_layered(const Permutation& p) {
    const int n = p.size();
    int i = 0;  // 0-based start of the current layer
    while (i < n) {
        const int top = p(i + 1);
        if (top <= i) return false;
        for (int k = i; k < top; ++k) {
            if (k >= n || p(k + 1) != top - (k - i)) return false;
        }
        i = top;
    }
    return true;
}

bool is_strongly_monotone(const PileConfig& r) {
    // Minima are distinct, so ordering by minimum is the only candidate.
    std::vector<std::pair<int, int>> blocks;  // (min, max)
    for (const Pile& pile : r.piles()) {
        blocks.emplace_back(*std::min_element(pile.begin(), pile.end()), *std::max_element(pile.begin(), pile.end()));
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i].second <= blocks[i - 1].second) return false;
    }
    return true;
}

bool rows_increasing(const PileConfig& r) {
    std::size_t depth = 0;
    for (const Pile& pile : r.piles()) depth = std::max(depth, pile.size());
    for (std::size_t d = 0; d < depth; ++d) {
        int prev = 0;
        for (const Pile& pile : r.piles()) {
            if (pile.size() <= d) continue;
            if (pile[d] <= prev) return false;
            prev = pile[d];
        }
    }
    return true;
}

bool rows_monotone(const StablePair& pair) { return rows_increasing(pair.insertion) && rows_increasing(pair.recording); }

}  // namespace patience
