#include "seir/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace seir {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound);
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % bound;
}

std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count, std::uint64_t seed)
{
    std::vector<std::size_t> pool(population);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    if (count >= population) {
        return pool;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        auto j = i + static_cast<std::size_t>(uniform_below(rng, population - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace seir
