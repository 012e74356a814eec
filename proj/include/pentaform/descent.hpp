#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentaform/transfer.hpp"

namespace pentaform {

/// Decides infinite order by the crystallographic restriction: a finite-order
/// element of GL3(Q) has order 1, 2, 3, 4 or 6. Throws InputError when tau is
/// not an isometry of `space`.
bool has_infinite_order(const RationalIsometry& tau, const TernaryForm& space);

/// Primitive z with tau z = det(tau) z, first nonzero coordinate positive.
Vector3 fixed_eigenvector(const RationalIsometry& tau, const TernaryForm& space);

struct DescentPartition {
  ResidueVectorSet classes;
  RationalIsometry tau;
  /// Indices of partitions (possibly this one) that tau may land in.
  std::vector<std::size_t> allowed_targets;
  std::optional<Vector3> eigenvector;

  bool self_loop(std::size_t self) const;
};

/// Data for a descent argument over R(N,d,a).
///
/// The good set comes from supplied isometries, from an exhaustive search of
/// R(M,N,d), or from an explicit class list (used when the "good" classes
/// are a congruence condition on N itself rather than a transfer into M).
struct DescentCertificate {
  enum class GoodMode { Sigmas, Search, Classes };

  TernaryForm n = TernaryForm::diagonal(1, 1, 1);
  TernaryForm m = TernaryForm::diagonal(1, 1, 1);
  Int d = 1;
  Int a = 0;
  GoodMode good_mode = GoodMode::Sigmas;
  std::vector<RationalIsometry> sigmas;
  std::size_t search_cap = 1000000;
  ResidueVectorSet good_classes;
  std::vector<DescentPartition> partitions;
};

struct DescentCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExceptionalLine {
  std::size_t partition = 0;
  Vector3 z{};
  Int norm = 0;
  /// Some t z reduces into R(N,d,a), so Q(z) t^2 meets the progression.
  bool meets_progression = false;
  /// Same question with z read in M's coordinates.
  bool meets_progression_in_m = false;
};

struct DescentReport {
  bool valid = false;
  std::vector<DescentCheck> checks;
  ResidueVectorSet residues;
  ResidueVectorSet good;
  ResidueVectorSet bad;
  std::vector<ExceptionalLine> exceptional;

  std::vector<Int> exceptional_norms() const;
};

DescentReport verify_descent_certificate(const DescentCertificate& cert);

struct GapReport {
  bool ok = false;
  Int bound = 0;
  /// Values in S_{d,a} cap Q(N) that are neither covered nor exceptional.
  std::vector<Int> violations;
  /// Values in S_{d,a} cap Q(N) not covered but of the form Q(z) t^2.
  std::vector<Int> excluded;
  /// Exceptional-shaped values that turned out to be covered anyway.
  std::vector<Int> exceptional_but_covered;
};

/// Empirical check of the descent conclusion: every a' = a (mod d) up to
/// bound represented by N is covered (represented by M, or by N through a
/// good class in class mode) unless it is Q(z_i) t^2.
GapReport descent_gap_check(const DescentCertificate& cert, Int bound);

}  // namespace pentaform
