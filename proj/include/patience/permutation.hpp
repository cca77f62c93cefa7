#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patience {

// A permutation of {1..n} in one-line notation. Positions and values are
// both 1-based at the API surface; the empty permutation (n = 0) is valid.
class Permutation {
public:
    Permutation() = default;

    // Throws InvalidPermutation unless `word` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    // Skips validation. For sweep internals that generate words known to be
    // permutations.
    static Permutation from_trusted(std::vector<int> word);

    // Accepts "6,4,5,1,8,7,2,3" or, for n <= 9, the digit word "64518723".
    // Commas select the list form. The empty string is the empty permutation.
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    bool empty() const noexcept { return word_.empty(); }

    // Value at a 1-based position.
    int operator()(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }

    std::span<const int> word() const noexcept { return word_; }

    // Steps to the lexicographic successor in place. Returns false (and
    // wraps to the identity) after the last permutation, like
    // std::next_permutation.
    bool advance();

    // Comma form by default; `compact` emits the digit word when n <= 9.
    std::string to_string(bool compact = false) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

struct Entry {
    int position;
    int value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

// Subsequence of a permutation that keeps original positions next to values.
struct PartialPermutation {
    int ambient = 0;  // n of the host permutation
    std::vector<Entry> entries;

    std::vector<int> values() const;
    std::vector<int> positions() const;

    friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
};

// Cards listed bottom to top; strictly decreasing.
using Pile = std::vector<int>;

// Ordered piles whose cards together are exactly {1..n}.
class PileConfig {
public:
    PileConfig() = default;

    // Throws InvalidPileConfig if a pile is empty or not strictly decreasing
    // bottom to top, or if the cards are not exactly {1..n}.
    explicit PileConfig(std::vector<Pile> piles);

    static PileConfig from_trusted(std::vector<Pile> piles, int n);

    int size() const noexcept { return n_; }
    int pile_count() const noexcept { return static_cast<int>(piles_.size()); }
    const std::vector<Pile>& piles() const noexcept { return piles_; }
    const Pile& operator[](std::size_t i) const { return piles_[i]; }

    // True iff this configuration is an image of patience sorting:
    // patience_sort(reverse_patience_word(*this)) == *this.
    bool is_patience_image() const;

    // "6 4 1 | 5 2 | 8 7 3"
    std::string to_string() const;

    friend bool operator==(const PileConfig&, const PileConfig&) = default;
    friend auto operator<=>(const PileConfig&, const PileConfig&) = default;

private:
    std::vector<Pile> piles_;
    int n_ = 0;
};

struct Shape {
    std::vector<int> parts;

    int total() const;

    friend bool operator==(const Shape&, const Shape&) = default;
};

// Iterated left-to-right minima subsequences s1, s2, ... obtained by peeling.
std::vector<PartialPermutation> left_to_right_minima_decomposition(const Permutation& p);
std::vector<PartialPermutation> left_to_right_maxima_decomposition(const Permutation& p);

// Piles read bottom to top, left to right.
Permutation reverse_patience_word(const PileConfig& r);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

Shape shape_of(const PileConfig& r);

}  // namespace patience
