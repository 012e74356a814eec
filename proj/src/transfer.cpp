#include "pentaform/transfer.hpp"

#include <algorithm>
#include <sstream>

#include "pentaform/enumerate.hpp"
#include "pentaform/kernels.hpp"

namespace pentaform {

ResidueVectorSet::ResidueVectorSet(Int modulus) : modulus_(modulus) {
  if (modulus < 1) throw InputError("residue modulus must be positive");
}

ResidueVectorSet::ResidueVectorSet(Int modulus, const std::vector<Vector3>& vectors) : ResidueVectorSet(modulus) {
  for (const auto& v : vectors) vectors_.push_back(reduce(v));
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

Vector3 ResidueVectorSet::reduce(const Vector3& v) const {
  return {mod(v[0], modulus_), mod(v[1], modulus_), mod(v[2], modulus_)};
}

bool ResidueVectorSet::contains(const Vector3& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), reduce(v));
}

void ResidueVectorSet::insert(const Vector3& v) {
  const Vector3 r = reduce(v);
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), r);
  if (it == vectors_.end() || *it != r) vectors_.insert(it, r);
}

ResidueVectorSet ResidueVectorSet::minus(const ResidueVectorSet& other) const {
  ResidueVectorSet out(modulus_);
  for (const auto& v : vectors_)
    if (!other.contains(v)) out.vectors_.push_back(v);
  return out;
}

ResidueVectorSet ResidueVectorSet::united(const ResidueVectorSet& other) const {
  ResidueVectorSet out(modulus_, vectors_);
  for (const auto& v : other.vectors_) out.insert(v);
  return out;
}

RationalIsometry RationalIsometry::identity() { return RationalIsometry{1, identity_matrix()}; }

RationalIsometry RationalIsometry::normalized() const {
  if (den == 0) throw InputError("isometry denominator must be nonzero");
  Int g = den;
  for (const auto& row : num)
    for (Int e : row) g = gcd(g, e);
  RationalIsometry out = *this;
  if (den < 0) g = -g;
  out.den /= g;
  for (auto& row : out.num)
    for (Int& e : row) e /= g;
  return out;
}

RationalIsometry RationalIsometry::operator-() const {
  RationalIsometry out = *this;
  for (auto& row : out.num)
    for (Int& e : row) e = -e;
  return out;
}

RationalIsometry RationalIsometry::compose(const RationalIsometry& rhs) const {
  return RationalIsometry{checked_mul(den, rhs.den), multiply(num, rhs.num)}.normalized();
}

std::optional<Vector3> RationalIsometry::apply_integral(const Vector3& v) const {
  Vector3 w = pentaform::apply(num, v);
  for (Int& e : w) {
    if (e % den != 0) return std::nullopt;
    e /= den;
  }
  return w;
}

bool RationalIsometry::is_isometry(const TernaryForm& source, const TernaryForm& target) const {
  const Matrix3 lhs = multiply(transpose(num), multiply(target.gram(), num));
  const Int d2 = checked_mul(den, den);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (lhs[i][j] != checked_mul(d2, source(i, j))) return false;
  return true;
}

bool RationalIsometry::scales_into_lattice(Int d) const {
  for (const auto& row : num)
    for (Int e : row)
      if (checked_mul(d, e) % den != 0) return false;
  return true;
}

Int RationalIsometry::determinant_sign() const {
  const Int det = determinant(num);
  const Int cube = checked_mul(checked_mul(den, den), den);
  if (det == cube) return 1;
  if (det == -cube) return -1;
  throw InputError("matrix " + to_string() + " has determinant other than +-1");
}

bool RationalIsometry::is_identity() const {
  const auto x = normalized();
  return x.den == 1 && x.num == identity_matrix();
}

std::string RationalIsometry::to_string() const {
  std::ostringstream os;
  os << "(1/" << den << ")" << pentaform::to_string(num);
  return os.str();
}

bool operator==(const RationalIsometry& a, const RationalIsometry& b) {
  const auto x = a.normalized(), y = b.normalized();
  return x.den == y.den && x.num == y.num;
}

bool operator<(const RationalIsometry& a, const RationalIsometry& b) {
  const auto x = a.normalized(), y = b.normalized();
  return std::tie(x.den, x.num) < std::tie(y.den, y.num);
}

ResidueVectorSet residue_rep_set(const TernaryForm& n, Int d, Int a) {
  if (d < 1) throw InputError("modulus must be positive");
  if (a < 0 || a >= d) throw InputError("residue must satisfy 0 <= a < d");
  std::vector<Vector3> out;
  for (Int x = 0; x < d; ++x)
    for (Int y = 0; y < d; ++y)
      for (Int z = 0; z < d; ++z)
        if (mod(n.eval({x, y, z}), d) == a) out.push_back({x, y, z});
  return ResidueVectorSet(d, out);
}

bool is_isometry_into(const RationalIsometry& sigma, const TernaryForm& m, const TernaryForm& n, Int d) {
  if (sigma.den <= 0) throw InputError("isometry denominator must be positive");
  return sigma.is_isometry(n, m) && sigma.scales_into_lattice(d);
}

IsometrySearch search_isometries(const TernaryForm& m, const TernaryForm& n, Int d, std::size_t cap) {
  if (d < 1) throw InputError("modulus must be positive");
  const Int d2 = d * d;
  std::array<std::vector<Vector3>, 3> columns;
  for (int i = 0; i < 3; ++i) columns[i] = enumerate_representations(m, checked_mul(d2, n(i, i)));
  IsometrySearch result;
  for (const auto& c0 : columns[0])
    for (const auto& c1 : columns[1]) {
      if (m.bilinear(c0, c1) != d2 * n(0, 1)) continue;
      for (const auto& c2 : columns[2]) {
        if (m.bilinear(c0, c2) != d2 * n(0, 2) || m.bilinear(c1, c2) != d2 * n(1, 2)) continue;
        if (result.found.size() == cap) {
          result.truncated = true;
          return result;
        }
        Matrix3 num{};
        for (int r = 0; r < 3; ++r) {
          num[r][0] = c0[r];
          num[r][1] = c1[r];
          num[r][2] = c2[r];
        }
        result.found.push_back(RationalIsometry{d, num}.normalized());
      }
    }
  return result;
}

ResidueVectorSet good_vectors(const TernaryForm& n, const TernaryForm& m, Int d, Int a,
                              const std::vector<RationalIsometry>& sigmas) {
  for (const auto& s : sigmas)
    if (!is_isometry_into(s, m, n, d))
      throw InputError("matrix " + s.to_string() + " is not in R(M,N," + std::to_string(d) + ")");
  const ResidueVectorSet residues = residue_rep_set(n, d, a);
  const auto& classes = residues.vectors();
  std::vector<std::uint8_t> good(classes.size(), 0);
#pragma omp parallel for schedule(dynamic, 16) num_threads(kernels::threads())
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& s : sigmas)
      if (s.apply_integral(classes[i])) {
        good[i] = 1;
        break;
      }
  std::vector<Vector3> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (good[i]) out.push_back(classes[i]);
  return ResidueVectorSet(d, out);
}

namespace {

PrecReport make_report(const TernaryForm& n, const TernaryForm& m, Int d, Int a,
                       const std::vector<RationalIsometry>& sigmas) {
  PrecReport report;
  report.sigma_count = sigmas.size();
  report.residues = residue_rep_set(n, d, a);
  report.good = good_vectors(n, m, d, a, sigmas);
  report.bad = report.residues.minus(report.good);
  report.holds = report.bad.empty();
  return report;
}

}  // namespace

PrecReport check_prec(const TernaryForm& n, const TernaryForm& m, Int d, Int a,
                      const std::vector<RationalIsometry>& sigmas) {
  PrecReport report = make_report(n, m, d, a, sigmas);
  report.mode = PrecReport::Mode::Supplied;
  return report;
}

PrecReport check_prec_search(const TernaryForm& n, const TernaryForm& m, Int d, Int a, std::size_t cap) {
  const IsometrySearch search = search_isometries(m, n, d, cap);
  PrecReport report = make_report(n, m, d, a, search.found);
  report.mode = PrecReport::Mode::Search;
  report.search_truncated = search.truncated;
  return report;
}

}  // namespace pentaform
