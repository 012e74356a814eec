#pragma once

#include <cstdint>
#include <vector>

#include "pentaform/enumerate.hpp"

// Data-parallel inner loops. Every parallel kernel has a serial reference
// with identical output; the tests compare the two.
namespace pentaform::kernels {

/// Worker cap for the parallel kernels (<= 0 restores the runtime default).
void set_threads(int n);
int threads();

std::vector<std::uint8_t> sieve_serial(const ShortVectorSearch& search, Int bound);
std::vector<std::uint8_t> sieve_parallel(const ShortVectorSearch& search, Int bound);

/// n in [0, bound] with no a p_k(x) + b p_k(y) + c p_k(z) = n, ascending.
std::vector<Int> polygonal_gaps_serial(Int k, Int a, Int b, Int c, Int bound);
std::vector<Int> polygonal_gaps_parallel(Int k, Int a, Int b, Int c, Int bound);

/// Sorted distinct generalized k-gonal numbers <= bound.
std::vector<Int> generalized_polygonal_values(Int k, Int bound);

}  // namespace pentaform::kernels
