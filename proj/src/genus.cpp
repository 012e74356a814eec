#include "pentaform/genus.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pentaform {

namespace {

// Row-echelon basis of the Z-span of full-rank integer vectors.
Matrix3 echelon_basis(const std::vector<Vector3>& gens) {
  std::array<Vector3, 3> rows{};
  std::array<bool, 3> filled{};
  for (Vector3 v : gens) {
    for (int c = 0; c < 3; ++c) {
      if (v[c] == 0) continue;
      if (!filled[c]) {
        rows[c] = v;
        filled[c] = true;
        break;
      }
      // Extended gcd on the pivots, then eliminate column c from v.
      Int a = rows[c][c], b = v[c];
      Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      Int r0 = a, r1 = b;
      while (r1 != 0) {
        const Int q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
      }
      const Int g = r0;
      Vector3 pivot{}, rest{};
      for (int k = 0; k < 3; ++k) {
        pivot[k] = checked_add(checked_mul(s0, rows[c][k]), checked_mul(t0, v[k]));
        rest[k] = checked_sub(checked_mul(a / g, v[k]), checked_mul(b / g, rows[c][k]));
      }
      rows[c] = pivot;
      v = rest;
    }
  }
  if (!filled[0] || !filled[1] || !filled[2]) throw std::logic_error("neighbor generators are not of full rank");
  // Keep entries small: reduce above-pivot columns.
  for (int c = 0; c < 3; ++c) {
    if (rows[c][c] < 0)
      for (Int& e : rows[c]) e = -e;
    for (int r = 0; r < c; ++r) {
      const Int q = floor_div(rows[r][c], rows[c][c]);
      for (int k = 0; k < 3; ++k) rows[r][k] -= q * rows[c][k];
    }
  }
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) m[i] = rows[i];
  return m;
}

void check_prime(const TernaryForm& form, Int p) {
  if (p <= 2 || !is_prime(p)) throw InputError("neighbor prime must be an odd prime, got " + std::to_string(p));
  if (form.determinant() % p == 0)
    throw InputError("prime " + std::to_string(p) + " divides the determinant " + std::to_string(form.determinant()));
}

}  // namespace

std::vector<TernaryForm> p_neighbors(const TernaryForm& form, Int p) {
  check_prime(form, p);
  const Matrix3& g = form.gram();
  std::vector<TernaryForm> out;
  // Projective points of P^2(F_p), first nonzero coordinate 1.
  std::vector<Vector3> points;
  for (Int y = 0; y < p; ++y)
    for (Int z = 0; z < p; ++z) points.push_back({1, y, z});
  for (Int z = 0; z < p; ++z) points.push_back({0, 1, z});
  points.push_back({0, 0, 1});

  for (const Vector3& v0 : points) {
    if (mod(form.eval(v0), p) != 0) continue;
    const Vector3 u0 = pentaform::apply(g, v0);
    int j = 0;
    while (j < 3 && mod(u0[j], p) == 0) ++j;
    if (j == 3) throw std::logic_error("radical vector modulo a prime not dividing det");
    // Lift so that Q(v) = 0 mod p^2.
    Vector3 v = v0;
    const Int c = mod(-(form.eval(v0) / p) * inverse_mod(2 * u0[j], p), p);
    v[j] += p * c;
    if (mod(form.eval(v), p * p) != 0) throw std::logic_error("isotropic lift failed");
    const Vector3 u = pentaform::apply(g, v);
    const Int inv = inverse_mod(u[j], p);

    // p * (L_v + Z v/p), as integer generators.
    std::vector<Vector3> gens;
    Vector3 e{};
    e[j] = p * p;
    gens.push_back(e);
    for (int i = 0; i < 3; ++i) {
      if (i == j) continue;
      Vector3 w{};
      w[i] = p;
      w[j] = -p * mod(u[i] * inv, p);
      gens.push_back(w);
    }
    gens.push_back(v);
    const Matrix3 rows = echelon_basis(gens);
    const Matrix3 scaled = multiply(rows, multiply(g, transpose(rows)));
    Matrix3 gram{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (scaled[a][b] % (p * p) != 0) throw std::logic_error("neighbor lattice is not integral");
        gram[a][b] = scaled[a][b] / (p * p);
      }
    out.push_back(minkowski_reduce(TernaryForm(gram)));
  }
  return out;
}

GenusList genus_classes(const TernaryForm& form, const std::vector<Int>& primes) {
  if (primes.empty()) throw InputError("genus closure needs at least one prime");
  for (Int p : primes) check_prime(form, p);
  std::set<TernaryForm> seen;
  std::deque<TernaryForm> queue;
  const TernaryForm start = minkowski_reduce(form);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const TernaryForm current = queue.front();
    queue.pop_front();
    for (Int p : primes)
      for (const TernaryForm& nb : p_neighbors(current, p))
        if (seen.insert(nb).second) queue.push_back(nb);
  }
  auto sorted_primes = primes;
  std::sort(sorted_primes.begin(), sorted_primes.end());
  sorted_primes.erase(std::unique(sorted_primes.begin(), sorted_primes.end()), sorted_primes.end());
  return GenusList{std::vector<TernaryForm>(seen.begin(), seen.end()), form, sorted_primes};
}

int GenusList::index_of(const TernaryForm& form) const {
  const TernaryForm r = minkowski_reduce(form);
  for (std::size_t i = 0; i < representatives.size(); ++i)
    if (representatives[i] == r) return static_cast<int>(i);
  return -1;
}

std::vector<Int> admissible_primes(const TernaryForm& form, std::size_t count) {
  std::vector<Int> out;
  for (Int p = 3; out.size() < count; p += 2)
    if (is_prime(p) && form.determinant() % p != 0) out.push_back(p);
  return out;
}

RepresentationSieve eligible_set(const GenusList& genus, Int bound) {
  RepresentationSieve out;
  out.bound = bound;
  out.source = RepresentationSieve::Source::GenusUnion;
  out.bits.assign(static_cast<std::size_t>(bound) + 1, 0);
  for (const TernaryForm& rep : genus.representatives) {
    const auto s = represented_set(rep, bound);
    for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] |= s.bits[i];
  }
  return out;
}

RepresentationSieve eligible_set(const TernaryForm& form, Int bound, const std::vector<Int>& primes) {
  return eligible_set(genus_classes(form, primes), bound);
}

}  // namespace pentaform
