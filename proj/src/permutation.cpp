#include "patience/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "patience/errors.hpp"
#include "patience/patience.hpp"

namespace patience {

namespace {

bool is_bijection(std::span<const int> word) {
    std::vector<char> seen(word.size() + 1, 0);
    for (int v : word) {
        if (v < 1 || v > static_cast<int>(word.size()) || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Peels the requested record subsequence off `remaining` until it is empty.
template <class Better>
std::vector<PartialPermutation> peel_records(const Permutation& p, Better better) {
    std::vector<Entry> remaining;
    remaining.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) remaining.push_back({i, p(i)});

    std::vector<PartialPermutation> out;
    while (!remaining.empty()) {
        PartialPermutation record{p.size(), {}};
        std::vector<Entry> rest;
        for (const Entry& e : remaining) {
            if (record.entries.empty() || better(e.value, record.entries.back().value)) {
                record.entries.push_back(e);
            } else {
                rest.push_back(e);
            }
        }
        out.push_back(std::move(record));
        remaining = std::move(rest);
    }
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (!is_bijection(word_)) {
        throw InvalidPermutation("not a permutation of 1..n");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return from_trusted(std::move(w));
}

Permutation Permutation::from_trusted(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    text = trim(text);
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view tok = trim(text.substr(start, end - start));
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw ParseError("bad permutation entry '" + std::string(tok) + "'");
            }
            word.push_back(v);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw ParseError(std::string("bad digit '") + c + "' in permutation word");
            }
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

bool Permutation::advance() { return std::next_permutation(word_.begin(), word_.end()); }

std::string Permutation::to_string(bool compact) const {
    std::string s;
    const bool digits = compact && size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!digits && i > 0) s += ',';
        s += std::to_string(word_[i]);
    }
    return s;
}

std::vector<int> PartialPermutation::values() const {
    std::vector<int> v;
    v.reserve(entries.size());
    for (const Entry& e : entries) v.push_back(e.value);
    return v;
}

std::vector<int> PartialPermutation::positions() const {
    std::vector<int> v;
    v.reserve(entries.size());
    for (const Entry& e : entries) v.push_back(e.position);
    return v;
}

PileConfig::PileConfig(std::vector<Pile> piles) : piles_(std::move(piles)) {
    std::vector<int> all;
    for (const Pile& pile : piles_) {
        if (pile.empty()) throw InvalidPileConfig("empty pile");
        for (std::size_t i = 1; i < pile.size(); ++i) {
            if (pile[i] >= pile[i - 1]) {
                throw InvalidPileConfig("pile cards must strictly decrease bottom to top");
            }
        }
        all.insert(all.end(), pile.begin(), pile.end());
    }
    if (!is_bijection(all)) throw InvalidPileConfig("pile cards are not exactly 1..n");
    n_ = static_cast<int>(all.size());
}

PileConfig PileConfig::from_trusted(std::vector<Pile> piles, int n) {
    PileConfig r;
    r.piles_ = std::move(piles);
    r.n_ = n;
    return r;
}

bool PileConfig::is_patience_image() const {
    return patience_sort(reverse_patience_word(*this)) == *this;
}

std::string PileConfig::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < piles_.size(); ++j) {
        if (j > 0) s += " | ";
        for (std::size_t i = 0; i < piles_[j].size(); ++i) {
            if (i > 0) s += ' ';
            s += std::to_string(piles_[j][i]);
        }
    }
    return s;
}

int Shape::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<PartialPermutation> left_to_right_minima_decomposition(const Permutation& p) {
    return peel_records(p, [](int v, int record) { return v < record; });
}

std::vector<PartialPermutation> left_to_right_maxima_decomposition(const Permutation& p) {
    return peel_records(p, [](int v, int record) { return v > record; });
}

Permutation reverse_patience_word(const PileConfig& r) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(r.size()));
    for (const Pile& pile : r.piles()) w.insert(w.end(), pile.begin(), pile.end());
    return Permutation::from_trusted(std::move(w));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation::from_trusted(std::move(w));
}

Permutation complement(const Permutation& p) {
    std::vector<int> w(p.word().begin(), p.word().end());
    for (int& v : w) v = p.size() + 1 - v;
    return Permutation::from_trusted(std::move(w));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) w[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation::from_trusted(std::move(w));
}

Shape shape_of(const PileConfig& r) {
    Shape s;
    for (const Pile& pile : r.piles()) s.parts.push_back(static_cast<int>(pile.size()));
    return s;
}

}  // namespace patience
