#include "patience/sweep.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace patience {

std::uint64_t factorial(int n) {
    if (n < 0 || n > kMaxSweepN) throw std::out_of_range("factorial: n outside 0..20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation unrank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto digit = static_cast<std::size_t>(rank / block);
        rank %= block;
        word.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation::from_trusted(std::move(word));
}

int sweep_threads() {
    if (const char* env = std::getenv("PS_THREADS")) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec == std::errc{} && *ptr == '\0' && v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace patience
