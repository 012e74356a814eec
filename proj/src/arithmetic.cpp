#include "pentaform/arithmetic.hpp"

namespace pentaform {

int kronecker_symbol(Int a, Int n) {
  if (n == 0) throw InputError("Kronecker symbol with n = 0");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Factor out 2 from n: (a/2) = 0 if a even, 1 if a = +-1 mod 8, -1 if a = +-3 mod 8.
  while (n % 2 == 0) {
    n /= 2;
    const Int r = mod(a, 8);
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // n odd positive: Jacobi symbol.
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

BinaryFormDiag::BinaryFormDiag(Int k_) : k(k_) {
  if (k < 1) throw InputError("binary form coefficient must be positive");
}

Int BinaryFormDiag::representation_count(Int value) const {
  if (value < 0) return 0;
  Int count = 0;
  for (Int y = -isqrt(value / k); y <= isqrt(value / k); ++y) {
    const Int x = exact_sqrt(value - k * y * y);
    if (x < 0) continue;
    count += x == 0 ? 1 : 2;
  }
  return count;
}

bool BinaryFormDiag::represents(Int value) const { return representation_count(value) > 0; }

std::optional<BinarySolution> coprime_square_solution(Int k, Int p) {
  const Int p2 = p * p;
  for (Int x = 1; x * x <= p2; ++x) {
    if (x % p == 0) continue;
    const Int rest = p2 - x * x;
    if (rest % k != 0) continue;
    const Int y = exact_sqrt(rest / k);
    if (y > 0 && y % p != 0) return BinarySolution{x, y};
  }
  return std::nullopt;
}

bool descent_precondition(Int k, Int p) {
  const BinaryFormDiag form(k);
  const bool hits = form.represents(p) || form.representation_count(p * p) > 2;
  return hits && coprime_square_solution(k, p).has_value();
}

std::optional<BinarySolution> compose_coprime(Int k, Int p, BinarySolution s, BinarySolution t) {
  const auto [a, b] = s;
  const auto [c, d] = t;
  for (int sign : {1, -1}) {
    // (AC + s kBD)^2 + k (AD - s BC)^2 = (A^2 + kB^2)(C^2 + kD^2)
    const Int x = checked_add(checked_mul(a, c), sign * checked_mul(k, checked_mul(b, d)));
    const Int y = checked_sub(checked_mul(a, d), sign * checked_mul(b, c));
    if (x % p != 0 && y % p != 0) return BinarySolution{x, y};
  }
  return std::nullopt;
}

namespace {

int p_valuation(Int v, Int p) {
  if (v == 0) return 1 << 20;
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

namespace {

void check_descent_input(const BinaryFormDiag& form, Int k, Int p, BinarySolution sol, Int target) {
  if (p <= 2 || !is_prime(p)) throw InputError("descent prime must be an odd prime");
  if (k % p == 0) throw InputError("descent prime divides k");
  if (target % p != 0) throw InputError("target is not divisible by the prime");
  if (form.eval(sol.first, sol.second) != target) throw InputError("starting pair does not represent the target");
}

}  // namespace

std::optional<BinarySolution> lemma24_construct(Int k, Int p, BinarySolution sol, Int target) {
  const BinaryFormDiag form(k);
  check_descent_input(form, k, p, sol, target);
  if (sol.first % p != 0 && sol.second % p != 0) return BinarySolution{std::abs(sol.first), std::abs(sol.second)};
  if (!descent_precondition(k, p))
    throw InputError("x^2 + " + std::to_string(k) + "y^2 neither represents " + std::to_string(p) +
                     " nor has a coprime representation of its square");
  const BinarySolution unit = *coprime_square_solution(k, p);

  // Strip the common power of p, then compose back with the unit solution.
  const int e = std::min(p_valuation(sol.first, p), p_valuation(sol.second, p));
  Int scale = 1;
  for (int i = 0; i < e; ++i) scale *= p;
  BinarySolution current{sol.first / scale, sol.second / scale};
  Int value = target / (scale * scale);
  for (int i = 0; i < e; ++i) {
    const auto next = compose_coprime(k, p, current, unit);
    if (!next) return std::nullopt;
    current = *next;
    value *= p * p;
    if (form.eval(current.first, current.second) != value) throw CertificateError("composition identity failed");
  }
  if (current.first % p == 0 || current.second % p == 0) return std::nullopt;
  return BinarySolution{std::abs(current.first), std::abs(current.second)};
}

BinarySolution lemma24_descend(Int k, Int p, BinarySolution sol, Int target) {
  if (const auto built = lemma24_construct(k, p, sol, target)) return *built;
  const auto searched = coprime_solution_search(k, p, target);
  if (!searched) throw CertificateError("no p-coprime representation of " + std::to_string(target));
  return *searched;
}

std::optional<BinarySolution> coprime_solution_search(Int k, Int p, Int target) {
  if (target < 0) return std::nullopt;
  for (Int y = 0; k * y * y <= target; ++y) {
    if (y % p == 0) continue;
    const Int x = exact_sqrt(target - k * y * y);
    if (x >= 0 && x % p != 0) return BinarySolution{x, y};
  }
  return std::nullopt;
}

}  // namespace pentaform
