#include "pentaform/form.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "pentaform/enumerate.hpp"

namespace pentaform {

Matrix3 identity_matrix() { return Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      __int128 s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<__int128>(a[i][k]) * b[k][j];
      r[i][j] = narrow(s);
    }
  return r;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Vector3 apply(const Matrix3& a, const Vector3& v) {
  Vector3 r{};
  for (int i = 0; i < 3; ++i) {
    __int128 s = 0;
    for (int k = 0; k < 3; ++k) s += static_cast<__int128>(a[i][k]) * v[k];
    r[i] = narrow(s);
  }
  return r;
}

Int determinant(const Matrix3& a) {
  using W = __int128;
  W d = W(a[0][0]) * (W(a[1][1]) * a[2][2] - W(a[1][2]) * a[2][1]) -
        W(a[0][1]) * (W(a[1][0]) * a[2][2] - W(a[1][2]) * a[2][0]) +
        W(a[0][2]) * (W(a[1][0]) * a[2][1] - W(a[1][1]) * a[2][0]);
  return narrow(d);
}

bool is_symmetric(const Matrix3& a) {
  return a[0][1] == a[1][0] && a[0][2] == a[2][0] && a[1][2] == a[2][1];
}

std::string to_string(const Vector3& v) {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return os.str();
}

std::string to_string(const Matrix3& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    if (i) os << "; ";
    os << m[i][0] << ',' << m[i][1] << ',' << m[i][2];
  }
  os << ']';
  return os.str();
}

bool is_positive_definite(const Matrix3& g) {
  if (!is_symmetric(g)) throw InputError("Gram matrix is not symmetric: " + to_string(g));
  const __int128 m2 = static_cast<__int128>(g[0][0]) * g[1][1] - static_cast<__int128>(g[0][1]) * g[1][0];
  return g[0][0] > 0 && m2 > 0 && determinant(g) > 0;
}

TernaryForm::TernaryForm(const Matrix3& gram) : gram_(gram) {
  if (!is_positive_definite(gram_)) throw InputError("Gram matrix is not positive definite: " + pentaform::to_string(gram_));
}

TernaryForm TernaryForm::diagonal(Int a, Int b, Int c) { return TernaryForm(Matrix3{{{a, 0, 0}, {0, b, 0}, {0, 0, c}}}); }

TernaryForm TernaryForm::block(Int a, Int b, Int c, Int d) {
  return TernaryForm(Matrix3{{{a, 0, 0}, {0, b, c}, {0, c, d}}});
}

TernaryForm TernaryForm::block_first(Int a, Int b, Int c, Int d) {
  return TernaryForm(Matrix3{{{a, b, 0}, {b, c, 0}, {0, 0, d}}});
}

Int TernaryForm::eval(const Vector3& v) const { return bilinear(v, v); }

Int TernaryForm::bilinear(const Vector3& u, const Vector3& v) const {
  __int128 s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += static_cast<__int128>(u[i]) * gram_[i][j] * v[j];
  return narrow(s);
}

Int TernaryForm::determinant() const { return pentaform::determinant(gram_); }

bool TernaryForm::is_primitive() const {
  Int g = 0;
  for (const auto& row : gram_)
    for (Int e : row) g = gcd(g, e);
  return g == 1;
}

TernaryForm TernaryForm::scaled(Int k) const {
  Matrix3 m = gram_;
  for (auto& row : m)
    for (Int& e : row) e = checked_mul(e, k);
  return TernaryForm(m);
}

TernaryForm TernaryForm::transformed(const Matrix3& u) const { return TernaryForm(multiply(transpose(u), multiply(gram_, u))); }

std::string TernaryForm::to_string() const { return pentaform::to_string(gram_); }

Int eval_form(const TernaryForm& form, const Vector3& v) { return form.eval(v); }

Int polygonal(Int m, Int x) {
  if (m < 3) throw InputError("polygonal order must be at least 3, got " + std::to_string(m));
  const Int num = checked_sub(checked_mul(checked_mul(m - 2, x), x), checked_mul(m - 4, x));
  return num / 2;
}

PolygonalIndex::PolygonalIndex(Int m, Int x) : order(m), argument(x) {
  if (m < 3) throw InputError("polygonal order must be at least 3, got " + std::to_string(m));
}

namespace {

Vector3 column(const Matrix3& u, int j) { return Vector3{u[0][j], u[1][j], u[2][j]}; }

void set_column(Matrix3& u, int j, const Vector3& v) {
  for (int i = 0; i < 3; ++i) u[i][j] = v[i];
}

Matrix3 from_columns(const Vector3& a, const Vector3& b, const Vector3& c) {
  Matrix3 u{};
  set_column(u, 0, a);
  set_column(u, 1, b);
  set_column(u, 2, c);
  return u;
}

// Pairwise size reduction; only used to bound the short-vector search.
Matrix3 pairwise_reduce(const TernaryForm& form) {
  Matrix3 u = identity_matrix();
  bool changed = true;
  while (changed) {
    changed = false;
    std::array<Vector3, 3> b = {column(u, 0), column(u, 1), column(u, 2)};
    std::sort(b.begin(), b.end(), [&](const Vector3& x, const Vector3& y) { return form.eval(x) < form.eval(y); });
    for (int j = 1; j < 3; ++j)
      for (int i = 0; i < j; ++i) {
        const Int qi = form.eval(b[i]);
        const Int bij = form.bilinear(b[i], b[j]);
        if (2 * std::abs(bij) > qi) {
          const Int q = floor_div(2 * bij + qi, 2 * qi);
          for (int k = 0; k < 3; ++k) b[j][k] -= q * b[i][k];
          changed = true;
        }
      }
    u = from_columns(b[0], b[1], b[2]);
  }
  return u;
}

Int rank_of(const std::vector<Vector3>& vs) {
  if (vs.empty()) return 0;
  auto cross = [](const Vector3& a, const Vector3& b) {
    return Vector3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (determinant(from_columns(vs[i], vs[j], vs[k])) != 0) return 3;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (cross(vs[i], vs[j]) != Vector3{0, 0, 0}) return 2;
  return 1;
}

}  // namespace

TernaryForm minkowski_reduce(const TernaryForm& form, Matrix3& basis) {
  const Matrix3 pre = pairwise_reduce(form);
  Int bound = 0;
  for (int j = 0; j < 3; ++j) bound = std::max(bound, form.eval(column(pre, j)));

  std::vector<std::pair<Int, Vector3>> shorts;
  ShortVectorSearch(form).upto(bound, INT64_MIN, INT64_MAX, [&](const Vector3& v, Int q) {
    if (q > 0) shorts.emplace_back(q, v);
    return false;
  });
  std::stable_sort(shorts.begin(), shorts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Successive minima from norm groups; keep a small independent set.
  std::array<Int, 3> minima{};
  std::vector<Vector3> independent;
  int found = 0;
  for (std::size_t i = 0; i < shorts.size() && found < 3;) {
    std::size_t j = i;
    while (j < shorts.size() && shorts[j].first == shorts[i].first) ++j;
    for (std::size_t k = i; k < j && found < 3; ++k) {
      auto trial = independent;
      trial.push_back(shorts[k].second);
      if (rank_of(trial) > found) {
        independent = trial;
        minima[found++] = shorts[i].first;
      }
    }
    i = j;
  }
  if (found < 3) throw std::logic_error("short-vector search did not reach rank 3");

  auto with_norm = [&](Int n) {
    std::vector<Vector3> out;
    for (const auto& [q, v] : shorts)
      if (q == n) out.push_back(v);
    return out;
  };
  const auto s0 = with_norm(minima[0]);
  const auto s1 = with_norm(minima[1]);
  const auto s2 = with_norm(minima[2]);

  bool have = false;
  std::tuple<Int, Int, Int> best{};
  for (const auto& a : s0)
    for (const auto& b : s1) {
      const Int ab = form.bilinear(a, b);
      if (have && ab < std::get<0>(best)) continue;
      for (const auto& c : s2) {
        const Matrix3 u = from_columns(a, b, c);
        const Int det = determinant(u);
        if (det != 1 && det != -1) continue;
        const std::tuple<Int, Int, Int> key{ab, form.bilinear(a, c), form.bilinear(b, c)};
        if (!have || key > best) {
          best = key;
          basis = u;
          have = true;
        }
      }
    }
  if (!have) throw std::logic_error("no basis realizes the successive minima");
  const auto [g01, g02, g12] = best;
  return TernaryForm(Matrix3{{{minima[0], g01, g02}, {g01, minima[1], g12}, {g02, g12, minima[2]}}});
}

TernaryForm minkowski_reduce(const TernaryForm& form) {
  Matrix3 basis{};
  return minkowski_reduce(form, basis);
}

bool is_isometric(const TernaryForm& lhs, const TernaryForm& rhs) {
  if (lhs.determinant() != rhs.determinant()) return false;
  return minkowski_reduce(lhs) == minkowski_reduce(rhs);
}

}  // namespace pentaform
