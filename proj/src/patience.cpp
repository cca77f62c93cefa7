#include "patience/patience.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "patience/errors.hpp"
#include "patience/patterns.hpp"

namespace patience {

PileConfig patience_sort(const Permutation& p) {
    std::vector<Pile> piles;
    std::vector<int> tops;
    for (int c : p.word()) {
        auto it = std::upper_bound(tops.begin(), tops.end(), c);
        if (it == tops.end()) {
            tops.push_back(c);
            piles.push_back({c});
        } else {
            *it = c;
            piles[static_cast<std::size_t>(it - tops.begin())].push_back(c);
        }
    }
    return PileConfig::from_trusted(std::move(piles), p.size());
}

std::vector<int> gather(const PileConfig& r) {
    using Top = std::pair<int, std::size_t>;  // (card, pile)
    std::priority_queue<Top, std::vector<Top>, std::greater<>> visible;
    std::vector<std::size_t> height;
    for (std::size_t j = 0; j < r.piles().size(); ++j) {
        height.push_back(r[j].size());
        visible.emplace(r[j].back(), j);
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(r.size()));
    while (!visible.empty()) {
        auto [card, j] = visible.top();
        visible.pop();
        out.push_back(card);
        if (--height[j] > 0) visible.emplace(r[j][height[j] - 1], j);
    }
    return out;
}

StablePair extended_patience_sort(const Permutation& p) {
    std::vector<Pile> cards;
    std::vector<Pile> indices;  // arrival order while building
    std::vector<int> tops;
    for (int i = 1; i <= p.size(); ++i) {
        const int c = p(i);
        auto it = std::upper_bound(tops.begin(), tops.end(), c);
        if (it == tops.end()) {
            tops.push_back(c);
            cards.push_back({c});
            indices.push_back({i});
        } else {
            *it = c;
            const auto j = static_cast<std::size_t>(it - tops.begin());
            cards[j].push_back(c);
            indices[j].push_back(i);
        }
    }
    for (Pile& s : indices) std::reverse(s.begin(), s.end());
    return {PileConfig::from_trusted(std::move(cards), p.size()),
            PileConfig::from_trusted(std::move(indices), p.size())};
}

Permutation invert_extended(const StablePair& pair) {
    const int n = pair.insertion.size();
    if (pair.recording.size() != n) throw MalformedPair("R and S hold different numbers of entries");
    if (shape_of(pair.insertion) != shape_of(pair.recording)) throw MalformedPair("R and S have different shapes");

    std::vector<Pile> cards = pair.insertion.piles();
    std::vector<Pile> indices = arrival_order(pair.recording);
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t j = 0; j < indices.size(); ++j) {
        for (int i : indices[j]) {
            if (i < 1 || i > n || owner[static_cast<std::size_t>(i)] != -1) {
                throw MalformedPair("recording indices are not exactly 1..n");
            }
            owner[static_cast<std::size_t>(i)] = static_cast<int>(j);
        }
    }

    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const auto j = static_cast<std::size_t>(owner[static_cast<std::size_t>(i)]);
        if (indices[j].empty() || indices[j].back() != i) {
            throw MalformedPair("index " + std::to_string(i) + " is not exposed at the bottom of its recording pile");
        }
        if (cards[j].empty()) throw MalformedPair("insertion pile emptied out of sync");
        word[static_cast<std::size_t>(i - 1)] = cards[j].back();
        cards[j].pop_back();
        indices[j].pop_back();
        if (cards[j].empty() != indices[j].empty()) throw MalformedPair("insertion pile emptied out of sync");
        if (cards[j].empty()) {
            // A pile born at time i was the right-most pile at that time.
            for (std::size_t k = j + 1; k < cards.size(); ++k) {
                if (!cards[k].empty()) {
                    throw MalformedPair("pile " + std::to_string(j + 1) + " started after pile " + std::to_string(k + 1));
                }
            }
        }
    }

    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int c : word) {
        if (c < 1 || c > n || seen[static_cast<std::size_t>(c)]) throw MalformedPair("insertion cards are not exactly 1..n");
        seen[static_cast<std::size_t>(c)] = 1;
    }
    Permutation p = Permutation::from_trusted(std::move(word));
    if (extended_patience_sort(p) != pair) throw MalformedPair("pair is not in the image of extended patience sorting");
    return p;
}

namespace {

class PreimageSearch {
public:
    explicit PreimageSearch(const PileConfig& r)
        : piles_(r.piles()), next_(piles_.size(), 0), word_(static_cast<std::size_t>(r.size())) {}

    std::vector<Permutation> run() {
        extend(0);
        return std::move(out_);
    }

private:
    void extend(std::size_t depth) {
        if (depth == word_.size()) {
            out_.push_back(Permutation::from_trusted(word_));
            return;
        }
        // (card, pile) candidates that land on their own pile, smallest card first.
        std::vector<std::pair<int, std::size_t>> candidates;
        for (std::size_t j = 0; j < piles_.size(); ++j) {
            if (next_[j] == piles_[j].size()) continue;
            const int c = piles_[j][next_[j]];
            const auto landing = static_cast<std::size_t>(std::upper_bound(tops_.begin(), tops_.end(), c) - tops_.begin());
            if (landing == j) candidates.emplace_back(c, j);
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [c, j] : candidates) {
            const bool fresh = j == tops_.size();
            const int saved = fresh ? 0 : tops_[j];
            if (fresh) {
                tops_.push_back(c);
            } else {
                tops_[j] = c;
            }
            ++next_[j];
            word_[depth] = c;
            extend(depth + 1);
            --next_[j];
            if (fresh) {
                tops_.pop_back();
            } else {
                tops_[j] = saved;
            }
        }
    }

    const std::vector<Pile>& piles_;
    std::vector<std::size_t> next_;
    std::vector<int> tops_;
    std::vector<int> word_;
    std::vector<Permutation> out_;
};

}  // namespace

std::vector<Permutation> preimages(const PileConfig& r, int bound) {
    if (r.size() > bound) throw OracleBoundExceeded(r.size(), bound);
    return PreimageSearch(r).run();
}

bool has_unique_preimage(const PileConfig& r) {
    static const GenPattern a = parse_pattern("3-!1-42");
    static const GenPattern b = parse_pattern("3-!1-24");
    const Permutation w = reverse_patience_word(r);
    return avoids(w, a) && avoids(w, b);
}

bool ps_equivalent(const Permutation& p, const Permutation& q) {
    return p.size() == q.size() && patience_sort(p) == patience_sort(q);
}

std::vector<Pile> arrival_order(const PileConfig& recording) {
    std::vector<Pile> piles = recording.piles();
    for (Pile& s : piles) std::reverse(s.begin(), s.end());
    return piles;
}

PileConfig recording_from_arrival_order(std::vector<Pile> piles) {
    for (Pile& s : piles) std::reverse(s.begin(), s.end());
    return PileConfig(std::move(piles));
}

}  // namespace patience
