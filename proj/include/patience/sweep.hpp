#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "patience/permutation.hpp"

namespace patience {

// Largest n for which n! fits the rank type.
inline constexpr int kMaxSweepN = 20;

std::uint64_t factorial(int n);

// The permutation of lexicographic rank `rank` in S_n (rank 0 = identity).
Permutation unrank(int n, std::uint64_t rank);

// Worker count for sweeps: PS_THREADS if set to a positive integer, else
// the machine's hardware concurrency.
int sweep_threads();

// Visits every permutation of S_n in lexicographic rank order, sharded into
// contiguous rank ranges. Each shard folds into its own accumulator copy of
// `init` with visit(acc, p); shards are merged left to right with
// merge(into, from), so the result does not depend on the thread count.
template <class T, class Visit, class Merge>
T sweep_symmetric_group(int n, T init, Visit visit, Merge merge, int threads = sweep_threads()) {
    const std::uint64_t total = factorial(n);
    const auto shards = static_cast<std::uint64_t>(std::max(1, threads));
    const std::uint64_t used = std::min<std::uint64_t>(shards, total);

    std::vector<T> partial(static_cast<std::size_t>(used), init);
    auto work = [&](std::uint64_t shard) {
        const std::uint64_t begin = total * shard / used;
        const std::uint64_t end = total * (shard + 1) / used;
        Permutation p = unrank(n, begin);
        T& acc = partial[static_cast<std::size_t>(shard)];
        for (std::uint64_t r = begin; r < end; ++r) {
            visit(acc, std::as_const(p));
            p.advance();
        }
    };

    if (used == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(used));
        for (std::uint64_t s = 0; s < used; ++s) pool.emplace_back(work, s);
    }

    T result = std::move(partial.front());
    for (std::size_t s = 1; s < partial.size(); ++s) merge(result, std::move(partial[s]));
    return result;
}

// Counts permutations satisfying `pred`.
template <class Pred>
std::uint64_t count_symmetric_group(int n, Pred pred, int threads = sweep_threads()) {
    return sweep_symmetric_group(
        n, std::uint64_t{0},
        [&](std::uint64_t& acc, const Permutation& p) {
            if (pred(p)) ++acc;
        },
        [](std::uint64_t& into, std::uint64_t from) { into += from; }, threads);
}

// Collects permutations satisfying `pred`, in lexicographic order.
template <class Pred>
std::vector<Permutation> filter_symmetric_group(int n, Pred pred, int threads = sweep_threads()) {
    return sweep_symmetric_group(
        n, std::vector<Permutation>{},
        [&](std::vector<Permutation>& acc, const Permutation& p) {
            if (pred(p)) acc.push_back(p);
        },
        [](std::vector<Permutation>& into, std::vector<Permutation>&& from) {
            into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
        },
        threads);
}

}  // namespace patience
