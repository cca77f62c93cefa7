#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patience/patience.hpp"
#include "patience/permutation.hpp"

namespace patience {

// Generalized permutation pattern with dash-delimited blocks and at most one
// barred letter. Letters inside a block must match contiguous host
// positions; a dash allows any gap.
class GenPattern {
public:
    // `joined[i]` is true when letter i shares a block with letter i - 1
    // (joined[0] is ignored). Throws ParseError if `letters` is not a
    // permutation of 1..m with m <= 16, UnsupportedBar if the barred letter is
    // joined to a neighbour.
    GenPattern(std::vector<int> letters, std::vector<bool> joined, std::optional<int> barred = std::nullopt);

    int length() const noexcept { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const noexcept { return letters_; }
    bool joined(int i) const { return i > 0 && joined_[static_cast<std::size_t>(i)]; }
    std::optional<int> barred() const noexcept { return barred_; }

    // Letter indices grouped by block, left to right.
    std::vector<std::vector<int>> blocks() const;

    // Barred letter deleted, remaining letters re-ranked; the flanking
    // dashes stay dashes. Equal to *this when nothing is barred.
    GenPattern core() const;

    // Same letters and blocks with the bar dropped.
    GenPattern stripped() const;

    std::string to_string() const;

    friend bool operator==(const GenPattern&, const GenPattern&) = default;

private:
    std::vector<int> letters_;
    std::vector<bool> joined_;
    std::optional<int> barred_;
};

// Syntax: blocks of digits 1..9 separated by '-'; a digit prefixed by '!'
// is barred. "3-!1-42", "23-1", "!2-41-3".
GenPattern parse_pattern(std::string_view text);

struct Occurrence {
    std::vector<int> positions;  // 1-based, strictly increasing

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Precompiled containment test, reusable across many hosts.
//
// Barred semantics: a host avoids a barred pattern iff every occurrence of
// its core extends to an occurrence of the stripped pattern by placing the
// barred letter at some further host position.
class PatternMatcher {
public:
    explicit PatternMatcher(GenPattern pattern);

    const GenPattern& pattern() const noexcept { return pattern_; }

    bool avoided_by(std::span<const int> word) const;
    bool contained_in(std::span<const int> word) const { return !avoided_by(word); }

    // Occurrences of the unbarred pattern in lexicographic position order.
    std::vector<Occurrence> occurrences(std::span<const int> word) const;

private:
    template <class Visit>
    bool search(std::span<const int> word, const std::vector<int>& letters, const std::vector<bool>& joined,
                Visit& visit) const;

    bool extends(std::span<const int> word, std::span<const int> core_positions) const;

    GenPattern pattern_;
    std::vector<int> core_letters_;
    std::vector<bool> core_joined_;
    int bar_ = -1;
    int below_ = -1;  // original index of the letter just below the barred one
    int above_ = -1;  // original index of the letter just above it
};

// All occurrences in lexicographic position order. Throws BarredNotAllowed
// for barred patterns.
std::vector<Occurrence> occurrences(const Permutation& p, const GenPattern& pattern);

bool avoids(const Permutation& p, const GenPattern& pattern);

inline constexpr int kDefaultAvoidanceBound = 10;

// Every p in S_n avoiding all patterns, lexicographic. Throws
// OracleBoundExceeded for n > bound.
std::vector<Permutation> avoidance_set(int n, std::span<const GenPattern> patterns,
                                       int bound = kDefaultAvoidanceBound);

// Streaming count of the same set; no materialization.
std::uint64_t avoidance_count(int n, std::span<const GenPattern> patterns);

// Decreasing runs gamma_1..1, then (gamma_1+gamma_2)..(gamma_1+1), ...
Permutation layered_pattern(const Shape& shape);

bool is_layered(const Permutation& p);

// Piles as blocks of a set partition: some ordering of the blocks makes
// minima and maxima increase together.
bool is_strongly_monotone(const PileConfig& r);

// Every row (cards at equal depth from the pile bottoms) increases left to
// right.
bool rows_increasing(const PileConfig& r);

// rows_increasing for both the insertion and the recording piles.
bool rows_monotone(const StablePair& pair);

}  // namespace patience
