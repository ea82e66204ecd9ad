#pragma once

#include <memory>
#include <random>
#include <vector>

#include "greedykit/basis.hpp"

namespace greedykit {

/// Seeded element generator mixing three coefficient profiles: dense
/// uniform[-1,1], sparse (at most half the universe), and signed geometric
/// decay over a random permutation.
Element random_element(const std::shared_ptr<const Basis>& basis,
                       std::mt19937_64& rng);

/// `size` distinct indices from 0..universe-1, sorted ascending.
std::vector<int> random_subset(int universe, int size, std::mt19937_64& rng);

/// `count` independent signs, each +1 or -1.
std::vector<int> random_signs(std::size_t count, std::mt19937_64& rng);

}  // namespace greedykit
