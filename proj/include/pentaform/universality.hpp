#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentaform/form.hpp"

namespace pentaform {

/// (k; a, b, c): the sum a p_k(x) + b p_k(y) + c p_k(z).
struct Quadruple {
  Int k = 5;
  Int a = 1;
  Int b = 1;
  Int c = 1;

  Quadruple() = default;
  Quadruple(Int k, Int a, Int b, Int c);
  std::string to_string() const;
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// The seven pentagonal sums with a constructive certificate here.
const std::vector<Quadruple>& constructive_quadruples();
bool has_pipeline(const Quadruple& q);

/// Smallest n in [0, bound] missed by the sum, or none.
std::optional<Int> pentagonal_oracle(const Quadruple& q, Int bound);
/// Every missed n in [0, bound].
std::vector<Int> pentagonal_gaps(const Quadruple& q, Int bound);

/// x with (6x - 1)^2 = w^2, for gcd(w, 6) = 1.
Int unit_to_pentagonal(Int w);

/// x^2 + b y^2 + c z^2 = 24 n + b + c + 1 with gcd(xyz, 6) = 1, together
/// with the pentagonal arguments recovered from it.
struct CoprimeSolution {
  Int n = 0;
  Vector3 xyz{};
  Vector3 pent{};
};

/// Runs the constructive pipeline for q (a = 1, one of the seven sums).
/// Throws CertificateError if any step fails.
CoprimeSolution coprime_solution(const Quadruple& q, Int n);

/// Checks both equations and the gcd condition; returns a reason on failure.
std::optional<std::string> validate_solution(const Quadruple& q, const CoprimeSolution& s);

enum class VerifyMode { Oracle, Constructive, Both };

struct QuadrupleFailure {
  Int n = 0;
  std::string reason;
};

struct QuadrupleReport {
  Quadruple q;
  Int bound = 0;
  VerifyMode mode = VerifyMode::Both;
  std::vector<Int> gaps;
  std::vector<QuadrupleFailure> failures;
  /// Solutions for n <= bound (constructive modes), indexed by n.
  std::vector<CoprimeSolution> solutions;
  bool success = false;
};

QuadrupleReport verify_quadruple(const Quadruple& q, Int bound, VerifyMode mode);

/// <1> + [9,3;3,10], whose represented set is the genus set minus two
/// exceptional square classes.
TernaryForm exact_q_form();

struct ExclusionReport {
  Int bound = 0;
  std::vector<Int> computed;  // eligible minus represented
  std::vector<Int> expected;  // {2 4^m, 5 4^n} up to bound
  std::size_t class_number = 0;
  bool matches() const { return computed == expected; }
};

/// Eligible-minus-represented set of exact_q_form() up to bound.
ExclusionReport exact_q_exclusions(Int bound);

}  // namespace pentaform
