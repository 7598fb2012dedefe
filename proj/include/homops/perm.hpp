#pragma once

#include <utility>
#include <vector>

#include "homops/finset.hpp"

namespace homops {

// A permutation of {1..n} in one-line notation.
struct Permutation {
    std::vector<int> one_line;

    explicit Permutation(std::vector<int> ol);
    int size() const { return static_cast<int>(one_line.size()); }
    int operator()(int i) const { return one_line[static_cast<size_t>(i) - 1]; }
};

// Number of positions i with sigma(i) > sigma(i+1).
int descent_count(const Permutation& sigma);

// +1 / -1 by inversion parity.
int perm_sign(const Permutation& sigma);

// All sigma in Sigma_n with k-1 descents, embedded as bijections of {1..n+1}
// fixing 1, paired with sgn(sigma). Empty outside 1 <= k <= n or n < 1.
std::vector<std::pair<FinSetMap, int>> eulerian_embedded(int n, int k);

// Eulerian number A(n, d): permutations of n letters with d descents.
mpz_class eulerian_number(int n, int d);

// All compositions of n into k positive parts.
std::vector<std::vector<int>> positive_compositions(int n, int k);

// All (p_1..p_k)-block shuffles in Sigma_n (ascending on each block),
// as permutations of {1..n}.
std::vector<Permutation> block_shuffles(const std::vector<int>& parts);

}  // namespace homops
