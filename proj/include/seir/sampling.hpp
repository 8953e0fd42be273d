#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace seir {

/// Uniform integer in [0, bound) by rejection on raw mt19937_64 output, so the
/// sequence is identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// `count` distinct positions from [0, population), returned ascending.
/// Partial Fisher-Yates driven by `seed`; count >= population returns all.
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count, std::uint64_t seed);

}  // namespace seir
