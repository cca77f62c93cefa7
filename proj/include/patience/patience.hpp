#pragma once

#include <vector>

#include "patience/permutation.hpp"

namespace patience {

// Insertion piles R and recording piles S produced by extended patience
// sorting. Both are stored physically bottom to top: a recording pile gets
// each new index at its bottom, so its entries decrease bottom to top just
// like card piles.
struct StablePair {
    PileConfig insertion;
    PileConfig recording;

    int size() const noexcept { return insertion.size(); }

    friend bool operator==(const StablePair&, const StablePair&) = default;
};

inline constexpr int kDefaultPreimageBound = 10;

// Each card goes atop the left-most pile whose top card is larger, else it
// starts a new right-most pile. Values are distinct, so "left-most larger
// top" never ties. Pile tops increase left to right, which makes the lookup
// a binary search.
PileConfig patience_sort(const Permutation& p);

// Repeatedly removes the smallest visible top card.
std::vector<int> gather(const PileConfig& r);

StablePair extended_patience_sort(const Permutation& p);

// Replays the card plays backwards from time n down to 1. Throws
// MalformedPair if the pair is not an image of extended_patience_sort.
Permutation invert_extended(const StablePair& pair);

// Every p with patience_sort(p) == r, in lexicographic order. Generated by
// interleaving the piles while simulating the sort, so each branch that
// survives is a preimage. Throws OracleBoundExceeded when r.size() > bound.
std::vector<Permutation> preimages(const PileConfig& r, int bound = kDefaultPreimageBound);

// Pattern test on the reverse patience word: avoids 3-!1-42 and 3-!1-24.
bool has_unique_preimage(const PileConfig& r);

bool ps_equivalent(const Permutation& p, const Permutation& q);

// Recording piles re-listed in the order their indices were recorded
// (physically top to bottom), and back.
std::vector<Pile> arrival_order(const PileConfig& recording);
PileConfig recording_from_arrival_order(std::vector<Pile> piles);

}  // namespace patience
