#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gensub/bit_matrix.hpp"

namespace gensub::kernels {

// Row-parallel (OpenMP) kernels over packed relation matrices. Each has a
// serial twin in `kernels::serial` with the same contract; tests compare the
// two and the benchmark target times them against each other.

/// In-place reflexive-transitive closure (Warshall over packed rows).
void close(BitMatrix& rel);

/// Strict cover relation of a closed, antisymmetric relation:
/// a covers-below b iff a < b and no c with a < c < b.
BitMatrix covers(const BitMatrix& closed);

/// m[i][j] = pred(i, j) for every pair. pred must be safe to call concurrently.
BitMatrix fill(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pred);

/// Number of pairs (i, j) where pred(i, j) is true.
std::size_t count_pairs(std::size_t n,
                        const std::function<bool(std::size_t, std::size_t)>& pred);

/// Returns indices of a cycle (first repeated at the end) among distinct
/// elements of the raw relation, or empty when acyclic.
std::vector<std::size_t> find_cycle(const BitMatrix& rel);

namespace serial {

void close(BitMatrix& rel);
BitMatrix covers(const BitMatrix& closed);
BitMatrix fill(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pred);
std::size_t count_pairs(std::size_t n,
                        const std::function<bool(std::size_t, std::size_t)>& pred);

}  // namespace serial

/// Threads OpenMP would use for a parallel region (1 when built without OpenMP).
int max_threads();

}  // namespace gensub::kernels
