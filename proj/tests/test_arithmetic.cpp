#include <doctest.h>

#include <random>

#include "pentaform/arithmetic.hpp"

using namespace pentaform;

namespace {

int legendre_brute(Int a, Int p) {
  const Int r = mod(a, p);
  if (r == 0) return 0;
  for (Int x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(mod(-7, 3) == 2);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(exact_sqrt(144) == 12);
  CHECK(exact_sqrt(145) == -1);
  CHECK(gcd(-12, 18) == 6);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS(checked_mul(Int{1} << 40, Int{1} << 40));
}

TEST_CASE("Kronecker symbol agrees with Euler's criterion on odd primes") {
  for (Int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
    for (Int a = -40; a <= 40; ++a) CHECK(kronecker_symbol(a, p) == legendre_brute(a, p));
  // (-2/p) = 1 iff p = 1, 3 mod 8
  for (Int p : {5, 7, 11, 13}) CHECK(kronecker_symbol(-2, p) == ((p % 8 == 1 || p % 8 == 3) ? 1 : -1));
  CHECK(kronecker_symbol(2, 1) == 1);
  CHECK(kronecker_symbol(3, 8) == -1);
  CHECK(kronecker_symbol(7, 8) == 1);
  CHECK_THROWS_AS(kronecker_symbol(3, 0), InputError);
}

TEST_CASE("binary diagonal forms") {
  const BinaryFormDiag f(5);
  CHECK(f.eval(2, 1) == 9);
  CHECK(f.represents(9));
  CHECK_FALSE(f.represents(2));
  CHECK(f.representation_count(9) == 6);  // (+-3,0), (+-2,+-1)
  CHECK_THROWS_AS(BinaryFormDiag(0), InputError);
}

TEST_CASE("coprime square solutions and the precondition") {
  CHECK(coprime_square_solution(5, 3) == BinarySolution{2, 1});
  CHECK(coprime_square_solution(2, 3) == BinarySolution{1, 2});
  CHECK_FALSE(coprime_square_solution(1, 3));
  CHECK(descent_precondition(5, 3));
  CHECK(descent_precondition(2, 3));
  CHECK_FALSE(descent_precondition(1, 3));
}

TEST_CASE("lemma descent examples") {
  CHECK(lemma24_descend(5, 3, {3, 3}, 54) == BinarySolution{7, 1});
  CHECK(lemma24_descend(5, 3, {3, 0}, 9) == BinarySolution{2, 1});
  CHECK_THROWS_AS(lemma24_descend(5, 3, {1, 1}, 7), InputError);
}

TEST_CASE("composition keeps coprimality") {
  const auto c = compose_coprime(5, 3, {2, 1}, {2, 1});
  REQUIRE(c);
  CHECK(c->first * c->first + 5 * c->second * c->second == 81);
  CHECK(c->first % 3 != 0);
  CHECK(c->second % 3 != 0);
}

TEST_CASE("randomized lemma instances") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Int> pick_k(1, 30), pick_p(0, 2), coord(0, 100), power(0, 2);
  const Int primes[] = {3, 5, 7};
  int done = 0, attempts = 0, stripped = 0;
  while (done < 500 && attempts < 200000) {
    ++attempts;
    const Int k = pick_k(rng), p = primes[pick_p(rng)];
    if (k % p == 0 || !descent_precondition(k, p)) continue;
    // most instances start from a pair with p | x and p | y
    Int scale = 1;
    for (Int e = power(rng); e > 0; --e) scale *= p;
    const Int x = scale * (coord(rng) / scale), y = scale * (coord(rng) / (4 * scale));
    const Int target = x * x + k * y * y;
    if (target == 0 || target > 10000 || target % p != 0) continue;
    if (x % p == 0 && y % p == 0) ++stripped;
    const auto built = lemma24_construct(k, p, {x, y}, target);
    REQUIRE_MESSAGE(built, "k=", k, " p=", p, " (", x, ",", y, ")");
    const auto [a, b] = *built;
    CHECK(a * a + k * b * b == target);
    CHECK(a % p != 0);
    CHECK(b % p != 0);
    const auto searched = coprime_solution_search(k, p, target);
    REQUIRE(searched);
    CHECK(searched->first * searched->first + k * searched->second * searched->second == target);
    ++done;
  }
  CHECK(done == 500);
  CHECK(stripped > 200);
}
