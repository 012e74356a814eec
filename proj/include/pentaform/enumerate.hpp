#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pentaform/form.hpp"

namespace pentaform {

/// Exact nested-interval search over lattice vectors of bounded norm.
///
/// Completing the square twice gives, with h = adj-style minors,
///   g22 * Q = (g22 x2 + L)^2 + H(x0, x1)
///   h11 * H = (h11 x1 + h01 x0)^2 + g22 det(G) x0^2
/// so each coordinate range is an integer square-root bound. Loops run
/// x0 outermost, ascending, which makes the visiting order lexicographic.
class ShortVectorSearch {
 public:
  explicit ShortVectorSearch(const TernaryForm& form);

  /// Inclusive x0 range of vectors with Q <= bound.
  std::pair<Int, Int> outer_range(Int bound) const;

  /// Visits each v with Q(v) <= bound and x0 in [lo, hi], lexicographically.
  /// visit(v, q) returns true to stop; the return value says whether it stopped.
  template <class Visit>
  bool upto(Int bound, Int lo, Int hi, Visit&& visit) const;

  /// Visits each v with Q(v) == value and x0 in [lo, hi], lexicographically.
  template <class Visit>
  bool exact(Int value, Int lo, Int hi, Visit&& visit) const;

  const TernaryForm& form() const { return form_; }

 private:
  std::pair<Int, Int> middle_range(Int bound, Int x0) const;

  TernaryForm form_;
  Int g00_, g01_, g02_, g11_, g12_, g22_;
  Int h00_, h01_, h11_;
  Int det_;
};

/// Membership table of values represented over [0, bound].
struct RepresentationSieve {
  enum class Source { Form, GenusUnion };

  Int bound = 0;
  std::vector<std::uint8_t> bits;
  Source source = Source::Form;

  bool contains(Int a) const { return a >= 0 && a <= bound && bits[static_cast<std::size_t>(a)] != 0; }
  std::vector<Int> values() const;
};

/// Every v with Q(v) = a, in lexicographic order.
std::vector<Vector3> enumerate_representations(const TernaryForm& form, Int a);

Int representation_count(const TernaryForm& form, Int a);

/// Lexicographically smallest representation of a satisfying the predicate.
template <class Predicate>
std::optional<Vector3> find_representation_with(const TernaryForm& form, Int a, Predicate&& pred);

/// Values represented by the form up to bound, computed in one pass over
/// all vectors of norm <= bound.
RepresentationSieve represented_set(const TernaryForm& form, Int bound);

// ---------------------------------------------------------------------------

template <class Visit>
bool ShortVectorSearch::upto(Int bound, Int lo, Int hi, Visit&& visit) const {
  if (bound < 0) return false;
  auto [olo, ohi] = outer_range(bound);
  lo = std::max(lo, olo);
  hi = std::min(hi, ohi);
  for (Int x0 = lo; x0 <= hi; ++x0) {
    auto [mlo, mhi] = middle_range(bound, x0);
    for (Int x1 = mlo; x1 <= mhi; ++x1) {
      const __int128 h = static_cast<__int128>(h00_) * x0 * x0 + static_cast<__int128>(2 * h01_) * x0 * x1 +
                         static_cast<__int128>(h11_) * x1 * x1;
      const __int128 r = static_cast<__int128>(g22_) * bound - h;
      if (r < 0) continue;
      const Int t = isqrt(narrow(r));
      const Int lin = g02_ * x0 + g12_ * x1;
      const Int x2lo = ceil_div(-t - lin, g22_);
      const Int x2hi = floor_div(t - lin, g22_);
      const Int base = g00_ * x0 * x0 + 2 * g01_ * x0 * x1 + g11_ * x1 * x1;
      for (Int x2 = x2lo; x2 <= x2hi; ++x2) {
        const Int q = g22_ * x2 * x2 + 2 * lin * x2 + base;
        if (visit(Vector3{x0, x1, x2}, q)) return true;
      }
    }
  }
  return false;
}

template <class Visit>
bool ShortVectorSearch::exact(Int value, Int lo, Int hi, Visit&& visit) const {
  if (value < 0) return false;
  auto [olo, ohi] = outer_range(value);
  lo = std::max(lo, olo);
  hi = std::min(hi, ohi);
  for (Int x0 = lo; x0 <= hi; ++x0) {
    auto [mlo, mhi] = middle_range(value, x0);
    for (Int x1 = mlo; x1 <= mhi; ++x1) {
      const __int128 h = static_cast<__int128>(h00_) * x0 * x0 + static_cast<__int128>(2 * h01_) * x0 * x1 +
                         static_cast<__int128>(h11_) * x1 * x1;
      const __int128 r = static_cast<__int128>(g22_) * value - h;
      if (r < 0) continue;
      const Int t = exact_sqrt(narrow(r));
      if (t < 0) continue;
      const Int lin = g02_ * x0 + g12_ * x1;
      // roots of (g22 x2 + lin)^2 = r, smaller first
      if ((-t - lin) % g22_ == 0 && visit(Vector3{x0, x1, (-t - lin) / g22_}, value)) return true;
      if (t != 0 && (t - lin) % g22_ == 0 && visit(Vector3{x0, x1, (t - lin) / g22_}, value)) return true;
    }
  }
  return false;
}

template <class Predicate>
std::optional<Vector3> find_representation_with(const TernaryForm& form, Int a, Predicate&& pred) {
  ShortVectorSearch search(form);
  std::optional<Vector3> found;
  search.exact(a, INT64_MIN, INT64_MAX, [&](const Vector3& v, Int) {
    if (!pred(v)) return false;
    found = v;
    return true;
  });
  return found;
}

}  // namespace pentaform
