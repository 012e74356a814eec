#pragma once

#include <vector>

#include "pentaform/enumerate.hpp"
#include "pentaform/form.hpp"

namespace pentaform {

struct GenusList {
  /// Reduced, pairwise non-isometric, sorted.
  std::vector<TernaryForm> representatives;
  TernaryForm seed;
  std::vector<Int> primes_used;

  std::size_t class_number() const { return representatives.size(); }
  /// Index of the representative isometric to form, or -1.
  int index_of(const TernaryForm& form) const;
};

/// Kneser p-neighbors of form, one per isotropic line of L/pL, each reduced.
/// Requires p odd prime, p not dividing det.
std::vector<TernaryForm> p_neighbors(const TernaryForm& form, Int p);

/// Closure of form under p-neighbor steps for every listed prime.
GenusList genus_classes(const TernaryForm& form, const std::vector<Int>& primes);

/// The `count` smallest odd primes not dividing 2 det(form).
std::vector<Int> admissible_primes(const TernaryForm& form, std::size_t count = 2);

/// Union of the represented sets of every class in the genus.
RepresentationSieve eligible_set(const GenusList& genus, Int bound);
RepresentationSieve eligible_set(const TernaryForm& form, Int bound, const std::vector<Int>& primes);

}  // namespace pentaform
