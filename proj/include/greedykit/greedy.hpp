#pragma once

#include <random>
#include <span>
#include <vector>

#include "greedykit/basis.hpp"

namespace greedykit {

/// Permutation of 0..N-1 ordering |coefficients| decreasingly; ties break by
/// ascending index, so the zero element yields the identity permutation.
std::vector<int> greedy_ordering(const Element& x);

/// First m indices of the greedy ordering, sorted ascending.
std::vector<int> greedy_set(const Element& x, int m);

/// Projection of x onto the coordinates in `indices`: coefficients are kept
/// there and zeroed elsewhere.
Element project(const Element& x, std::span<const int> indices);

/// P_{Gamma_m}(x) for the tie-broken greedy set of size m.
Element greedy_approximant(const Element& x, int m);

/// ||x - P_Gamma(x)||.
double greedy_residual_norm(const Element& x, std::span<const int> gamma);

/// Whether min_{n in Gamma} |x_n| >= t * max_{n not in Gamma} |x_n|.
/// The max over an empty complement is 0 and the min over an empty Gamma
/// passes vacuously.
bool is_t_greedy_set(const Element& x, std::span<const int> gamma, double t);

/// All size-m subsets Gamma with is_t_greedy_set(x, Gamma, t), each sorted
/// ascending, in lexicographic order.  Refuses universes above the
/// exhaustive-enumeration guard (24 indices); use sample_t_greedy_sets there.
std::vector<std::vector<int>> t_greedy_sets(const Element& x, double t, int m);

/// Up to max_sets distinct members of the size-m t-greedy family, found by a
/// random swap walk from the tie-broken greedy set.  Works at any dimension;
/// no completeness guarantee.
std::vector<std::vector<int>> sample_t_greedy_sets(const Element& x, double t,
                                                   int m, int max_sets,
                                                   std::mt19937_64& rng);

/// Sum of basis index weights over the set.
double support_weight(const Basis& basis, std::span<const int> indices);

}  // namespace greedykit
