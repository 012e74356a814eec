#include "pentaform/enumerate.hpp"

#include "pentaform/kernels.hpp"

namespace pentaform {

ShortVectorSearch::ShortVectorSearch(const TernaryForm& form)
    : form_(form),
      g00_(form(0, 0)),
      g01_(form(0, 1)),
      g02_(form(0, 2)),
      g11_(form(1, 1)),
      g12_(form(1, 2)),
      g22_(form(2, 2)),
      h00_(g22_ * g00_ - g02_ * g02_),
      h01_(g22_ * g01_ - g02_ * g12_),
      h11_(g22_ * g11_ - g12_ * g12_),
      det_(form.determinant()) {}

std::pair<Int, Int> ShortVectorSearch::outer_range(Int bound) const {
  if (bound < 0) return {1, 0};
  // det x0^2 <= h11 bound
  const Int r = isqrt(narrow(static_cast<__int128>(h11_) * bound / det_));
  return {-r, r};
}

std::pair<Int, Int> ShortVectorSearch::middle_range(Int bound, Int x0) const {
  // (h11 x1 + h01 x0)^2 <= g22 (h11 bound - det x0^2)
  const __int128 inner = static_cast<__int128>(h11_) * bound - static_cast<__int128>(det_) * x0 * x0;
  if (inner < 0) return {1, 0};
  const Int s = isqrt(narrow(inner * g22_));
  const Int shift = h01_ * x0;
  return {ceil_div(-s - shift, h11_), floor_div(s - shift, h11_)};
}

std::vector<Int> RepresentationSieve::values() const {
  std::vector<Int> out;
  for (Int a = 0; a <= bound; ++a)
    if (bits[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

std::vector<Vector3> enumerate_representations(const TernaryForm& form, Int a) {
  std::vector<Vector3> out;
  ShortVectorSearch(form).exact(a, INT64_MIN, INT64_MAX, [&](const Vector3& v, Int) {
    out.push_back(v);
    return false;
  });
  return out;
}

Int representation_count(const TernaryForm& form, Int a) {
  Int count = 0;
  ShortVectorSearch(form).exact(a, INT64_MIN, INT64_MAX, [&](const Vector3&, Int) {
    ++count;
    return false;
  });
  return count;
}

RepresentationSieve represented_set(const TernaryForm& form, Int bound) {
  if (bound < 0) throw InputError("sieve bound must be non-negative");
  RepresentationSieve sieve;
  sieve.bound = bound;
  sieve.source = RepresentationSieve::Source::Form;
  ShortVectorSearch search(form);
  sieve.bits = kernels::threads() > 1 ? kernels::sieve_parallel(search, bound) : kernels::sieve_serial(search, bound);
  return sieve;
}

}  // namespace pentaform
