#pragma once

// Slow reference implementations that share no code with the library beyond
// the plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patience/patterns.hpp"
#include "patience/permutation.hpp"

namespace oracle {

using Word = std::vector<int>;
using boost::multiprecision::cpp_int;

inline std::vector<Word> all_words(int n) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// O(n^2) longest increasing subsequence.
inline int lis(const Word& w) {
    std::vector<int> best(w.size(), 1);
    int out = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
        }
        out = std::max(out, best[i]);
    }
    return out;
}

// Piles by linear scan, bottom to top.
inline std::vector<Word> piles(const Word& w) {
    std::vector<Word> out;
    for (int v : w) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Word& p) { return p.back() > v; });
        if (it == out.end()) {
            out.push_back({v});
        } else {
            it->push_back(v);
        }
    }
    return out;
}

inline Word rpw(const std::vector<Word>& ps) {
    Word out;
    for (const Word& p : ps) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Every increasing index tuple of size k in [0, n).
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int i, int start) {
        if (i == k) {
            f(idx);
            return;
        }
        for (int q = start; q < n; ++q) {
            idx[static_cast<std::size_t>(i)] = q;
            rec(i + 1, q + 1);
        }
    };
    rec(0, 0);
}

inline bool matches(const Word& w, const std::vector<int>& pos, const std::vector<int>& letters,
                    const std::vector<bool>& joined) {
    for (std::size_t i = 1; i < pos.size(); ++i) {
        if (joined[i] && pos[i] != pos[i - 1] + 1) return false;
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = 0; j < pos.size(); ++j) {
            const bool host = w[static_cast<std::size_t>(pos[i])] < w[static_cast<std::size_t>(pos[j])];
            if (host != (letters[i] < letters[j])) return false;
        }
    }
    return true;
}

inline std::vector<std::vector<int>> occurrences(const Word& w, const std::vector<int>& letters,
                                                 const std::vector<bool>& joined) {
    std::vector<std::vector<int>> out;
    for_each_subset(static_cast<int>(w.size()), static_cast<int>(letters.size()), [&](const std::vector<int>& pos) {
        if (matches(w, pos, letters, joined)) out.push_back(pos);
    });
    return out;
}

inline std::vector<bool> joins(const patience::GenPattern& g) {
    std::vector<bool> out;
    for (int i = 0; i < g.length(); ++i) out.push_back(g.joined(i));
    return out;
}

// Every occurrence of the core must be the trace of an occurrence of the
// whole pattern with the barred letter removed.
inline bool avoids(const Word& w, const patience::GenPattern& g) {
    if (!g.barred()) return occurrences(w, g.letters(), joins(g)).empty();
    const std::size_t bar = static_cast<std::size_t>(*g.barred());
    const int removed = g.letters()[bar];
    std::vector<int> core_letters;
    std::vector<bool> core_joined;
    const std::vector<bool> all_joined = joins(g);
    for (std::size_t i = 0; i < g.letters().size(); ++i) {
        if (i == bar) continue;
        const int v = g.letters()[i];
        core_letters.push_back(v > removed ? v - 1 : v);
        core_joined.push_back(all_joined[i]);
    }
    std::set<std::vector<int>> traces;
    for (std::vector<int> pos : occurrences(w, g.letters(), joins(g))) {
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(bar));
        traces.insert(pos);
    }
    for (const auto& pos : occurrences(w, core_letters, core_joined)) {
        if (!traces.count(pos)) return false;
    }
    return true;
}

// Number of set partitions of [n] by restricted growth strings.
inline std::uint64_t set_partitions(int n) {
    std::uint64_t count = 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            ++count;
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (n == 0) return 1;
    rec(0, -1);
    return count;
}

inline cpp_int fibonacci(int n) {
    cpp_int a = 1, b = 1;
    for (int i = 1; i < n; ++i) {
        cpp_int c = a + b;
        a = b;
        b = c;
    }
    return b;
}

// Sum over compositions of total into `parts` nonnegative parts of the
// product of Fibonacci numbers.
inline cpp_int fibonacci_compositions(int total, int parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    cpp_int sum = 0;
    for (int first = 0; first <= total; ++first) sum += fibonacci(first) * fibonacci_compositions(total - first, parts - 1);
    return sum;
}

// a(n, k): k + 1 Fibonacci factors summing to n - k - 2.
inline cpp_int convolved(int n, int k) {
    if (n < k + 2) return 0;
    return fibonacci_compositions(n - k - 2, k + 1);
}

// Permutations of S_n that are alone in their pile-configuration class.
inline std::uint64_t unique_preimage_count(int n) {
    std::map<std::vector<Word>, int> sizes;
    const auto words = all_words(n);
    for (const Word& w : words) ++sizes[piles(w)];
    std::uint64_t out = 0;
    for (const auto& [r, c] : sizes) out += c == 1;
    return out;
}

struct Point {
    int x;
    int y;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Every lattice point on a polyline with integer, axis-parallel segments.
inline std::set<Point> lattice_points(const std::vector<Point>& vertices) {
    std::set<Point> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        Point a = vertices[i];
        const Point b = vertices[i + 1];
        const int dx = (b.x > a.x) - (b.x < a.x);
        const int dy = (b.y > a.y) - (b.y < a.y);
        out.insert(a);
        while (a.x != b.x || a.y != b.y) {
            a.x += dx;
            a.y += dy;
            out.insert(a);
        }
    }
    return out;
}

}  // namespace oracle
