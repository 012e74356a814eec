#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "pentaform/integer.hpp"

namespace pentaform {

using Vector3 = std::array<Int, 3>;
using Matrix3 = std::array<std::array<Int, 3>, 3>;

Matrix3 identity_matrix();
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& a);
Vector3 apply(const Matrix3& a, const Vector3& v);
Int determinant(const Matrix3& a);
bool is_symmetric(const Matrix3& a);
std::string to_string(const Vector3& v);
std::string to_string(const Matrix3& m);

/// Positive definite ternary quadratic form given by its Gram matrix of
/// bilinear values, so Q(v) = v^T G v.
///
/// The constructor rejects non-symmetric and non-positive-definite
/// matrices. Primitivity is reported by is_primitive() rather than enforced,
/// because scaled forms such as 2M appear as intermediate objects.
class TernaryForm {
 public:
  explicit TernaryForm(const Matrix3& gram);

  static TernaryForm diagonal(Int a, Int b, Int c);
  /// <a> + [b, c; c, d]
  static TernaryForm block(Int a, Int b, Int c, Int d);
  /// [a, b; b, c] + <d>
  static TernaryForm block_first(Int a, Int b, Int c, Int d);

  const Matrix3& gram() const { return gram_; }
  Int operator()(int i, int j) const { return gram_[i][j]; }

  Int eval(const Vector3& v) const;
  Int bilinear(const Vector3& u, const Vector3& v) const;
  Int determinant() const;
  bool is_primitive() const;
  TernaryForm scaled(Int k) const;
  /// Gram matrix of the basis given by the columns of u: u^T G u.
  TernaryForm transformed(const Matrix3& u) const;

  std::string to_string() const;

  friend auto operator<=>(const TernaryForm&, const TernaryForm&) = default;
  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  Matrix3 gram_;
};

Int eval_form(const TernaryForm& form, const Vector3& v);

/// Generalized m-gonal number ((m-2)x^2 - (m-4)x) / 2.
Int polygonal(Int m, Int x);

struct PolygonalIndex {
  Int order;
  Int argument;

  PolygonalIndex(Int m, Int x);
  Int value() const { return polygonal(order, argument); }
};

/// All three leading principal minors positive. Throws InputError when the
/// matrix is not symmetric.
bool is_positive_definite(const Matrix3& gram);

/// Canonical reduced representative of the isometry class.
///
/// The diagonal is the successive minima (ascending). Among every basis
/// that realizes the successive minima, the one whose off-diagonal triple
/// (g12, g13, g23) is lexicographically largest is returned, so two forms
/// reduce to the same matrix exactly when they are isometric.
TernaryForm minkowski_reduce(const TernaryForm& form);

/// Like minkowski_reduce, also returning the change of basis U with
/// U^T G U = reduced (columns of U are the new basis vectors).
TernaryForm minkowski_reduce(const TernaryForm& form, Matrix3& basis);

bool is_isometric(const TernaryForm& lhs, const TernaryForm& rhs);

}  // namespace pentaform
