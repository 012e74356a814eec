#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentaform/form.hpp"

namespace pentaform {

/// A set of classes in (Z/dZ)^3, coordinates reduced to [0, d), kept sorted.
class ResidueVectorSet {
 public:
  explicit ResidueVectorSet(Int modulus = 1);
  ResidueVectorSet(Int modulus, const std::vector<Vector3>& vectors);

  Int modulus() const { return modulus_; }
  const std::vector<Vector3>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  bool contains(const Vector3& v) const;

  Vector3 reduce(const Vector3& v) const;
  void insert(const Vector3& v);

  ResidueVectorSet minus(const ResidueVectorSet& other) const;
  ResidueVectorSet united(const ResidueVectorSet& other) const;

  friend bool operator==(const ResidueVectorSet&, const ResidueVectorSet&) = default;

 private:
  Int modulus_;
  std::vector<Vector3> vectors_;
};

/// The rational map num / den acting on coordinate column vectors.
struct RationalIsometry {
  Int den = 1;
  Matrix3 num{};

  static RationalIsometry identity();
  /// Divides out the common factor of den and all entries.
  RationalIsometry normalized() const;
  RationalIsometry operator-() const;
  RationalIsometry compose(const RationalIsometry& rhs) const;

  /// (num v) / den if integral.
  std::optional<Vector3> apply_integral(const Vector3& v) const;
  /// True when num^T G_target num = den^2 G_source.
  bool is_isometry(const TernaryForm& source, const TernaryForm& target) const;
  /// True when d * num / den is an integer matrix.
  bool scales_into_lattice(Int d) const;
  /// det(num) / den^3, which is +-1 for an isometry.
  Int determinant_sign() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const RationalIsometry& a, const RationalIsometry& b);
  friend bool operator<(const RationalIsometry& a, const RationalIsometry& b);
};

/// Classes x in N/dN with Q_N(x) = a (mod d).
ResidueVectorSet residue_rep_set(const TernaryForm& n, Int d, Int a);

/// sigma in R(M, N, d): an isometry from N's space onto M's with sigma(dN) in M.
bool is_isometry_into(const RationalIsometry& sigma, const TernaryForm& m, const TernaryForm& n, Int d);

struct IsometrySearch {
  std::vector<RationalIsometry> found;
  /// The cap stopped the search before exhaustion.
  bool truncated = false;
};

/// Every sigma = num / d with num^T G_M num = d^2 G_N, up to cap results.
IsometrySearch search_isometries(const TernaryForm& m, const TernaryForm& n, Int d, std::size_t cap);

/// Classes of R(N, d, a) carried into M by some sigma. Validity for all
/// lifts follows from d * sigma being integral, so one representative per
/// class suffices.
ResidueVectorSet good_vectors(const TernaryForm& n, const TernaryForm& m, Int d, Int a,
                              const std::vector<RationalIsometry>& sigmas);

struct PrecReport {
  enum class Mode { Supplied, Search };

  bool holds = false;
  Mode mode = Mode::Supplied;
  std::size_t sigma_count = 0;
  bool search_truncated = false;
  ResidueVectorSet residues;
  ResidueVectorSet good;
  ResidueVectorSet bad;
};

/// N <_{d,a} M with the supplied isometries.
PrecReport check_prec(const TernaryForm& n, const TernaryForm& m, Int d, Int a,
                      const std::vector<RationalIsometry>& sigmas);

/// N <_{d,a} M using every element of R(M, N, d) found by search.
PrecReport check_prec_search(const TernaryForm& n, const TernaryForm& m, Int d, Int a, std::size_t cap = 1000000);

}  // namespace pentaform
