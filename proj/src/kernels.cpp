#include "pentaform/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pentaform::kernels {

namespace {
int thread_cap = 0;
}

void set_threads(int n) {
  thread_cap = n > 0 ? n : 0;
#ifdef _OPENMP
  if (thread_cap > 0) omp_set_num_threads(thread_cap);
#endif
}

int threads() {
#ifdef _OPENMP
  return thread_cap > 0 ? thread_cap : omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::uint8_t> sieve_serial(const ShortVectorSearch& search, Int bound) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(bound) + 1, 0);
  // v and -v have the same norm, so x0 >= 0 suffices.
  const Int hi = search.outer_range(bound).second;
  search.upto(bound, 0, hi, [&](const Vector3&, Int q) {
    bits[static_cast<std::size_t>(q)] = 1;
    return false;
  });
  return bits;
}

std::vector<std::uint8_t> sieve_parallel(const ShortVectorSearch& search, Int bound) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(bound) + 1, 0);
  const Int hi = search.outer_range(bound).second;
#pragma omp parallel num_threads(threads())
  {
    std::vector<std::uint8_t> local(bits.size(), 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (Int x0 = 0; x0 <= hi; ++x0) {
      search.upto(bound, x0, x0, [&](const Vector3&, Int q) {
        local[static_cast<std::size_t>(q)] = 1;
        return false;
      });
    }
#pragma omp critical
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] |= local[i];
  }
  return bits;
}

std::vector<Int> generalized_polygonal_values(Int k, Int bound) {
  std::vector<Int> out;
  for (Int x = 0;; ++x) {
    const Int pos = polygonal(k, x);
    const Int neg = polygonal(k, -x);
    if (pos > bound && neg > bound) break;
    if (pos <= bound) out.push_back(pos);
    if (neg <= bound) out.push_back(neg);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Table of a p(x) + b p(y) <= bound.
std::vector<std::uint8_t> two_term_table(const std::vector<Int>& values, Int a, Int b, Int bound) {
  std::vector<std::uint8_t> two(static_cast<std::size_t>(bound) + 1, 0);
  for (Int u : values) {
    if (a * u > bound) break;
    for (Int v : values) {
      const Int s = a * u + b * v;
      if (s > bound) break;
      two[static_cast<std::size_t>(s)] = 1;
    }
  }
  return two;
}

bool has_third_term(const std::vector<std::uint8_t>& two, const std::vector<Int>& values, Int c, Int n) {
  for (Int w : values) {
    const Int cw = c * w;
    if (cw > n) break;
    if (two[static_cast<std::size_t>(n - cw)]) return true;
  }
  return false;
}

}  // namespace

std::vector<Int> polygonal_gaps_serial(Int k, Int a, Int b, Int c, Int bound) {
  const auto values = generalized_polygonal_values(k, bound);
  const auto two = two_term_table(values, a, b, bound);
  std::vector<Int> gaps;
  for (Int n = 0; n <= bound; ++n)
    if (!has_third_term(two, values, c, n)) gaps.push_back(n);
  return gaps;
}

std::vector<Int> polygonal_gaps_parallel(Int k, Int a, Int b, Int c, Int bound) {
  const auto values = generalized_polygonal_values(k, bound);
  const auto two = two_term_table(values, a, b, bound);
  std::vector<std::uint8_t> missing(static_cast<std::size_t>(bound) + 1, 0);
#pragma omp parallel for schedule(static) num_threads(threads())
  for (Int n = 0; n <= bound; ++n) missing[static_cast<std::size_t>(n)] = has_third_term(two, values, c, n) ? 0 : 1;
  std::vector<Int> gaps;
  for (Int n = 0; n <= bound; ++n)
    if (missing[static_cast<std::size_t>(n)]) gaps.push_back(n);
  return gaps;
}

}  // namespace pentaform::kernels
