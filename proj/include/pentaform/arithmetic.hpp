#pragma once

#include <optional>
#include <utility>

#include "pentaform/integer.hpp"

namespace pentaform {

/// Kronecker symbol (a / n); n = 0 is rejected.
int kronecker_symbol(Int a, Int n);

/// The binary form x^2 + k y^2.
struct BinaryFormDiag {
  Int k;

  explicit BinaryFormDiag(Int k);
  Int eval(Int x, Int y) const { return checked_add(checked_mul(x, x), checked_mul(k, checked_mul(y, y))); }
  bool represents(Int value) const;
  Int representation_count(Int value) const;
};

using BinarySolution = std::pair<Int, Int>;

/// Smallest non-negative (x, y) with x^2 + k y^2 = p^2 and p not dividing x y.
std::optional<BinarySolution> coprime_square_solution(Int k, Int p);

/// True when x^2 + k y^2 represents p or r(p^2) > 2 and a p-coprime
/// representation of p^2 exists (the latter fails only for k = 1, where
/// r(p^2) > 2 holds through (0, +-p) alone).
bool descent_precondition(Int k, Int p);

/// Composes (A, B) and (C, D) into a representation of their product with
/// p not dividing either coordinate, trying the + sign first.
std::optional<BinarySolution> compose_coprime(Int k, Int p, BinarySolution s, BinarySolution t);

/// Given x^2 + k y^2 = target with p | target, builds (x', y') >= 0 with
/// x'^2 + k y'^2 = target and p not dividing x' y' by stripping the common
/// power of p and composing back with a p-coprime square solution. Empty if
/// some composition step leaves a coordinate divisible by p.
std::optional<BinarySolution> lemma24_construct(Int k, Int p, BinarySolution sol, Int target);

/// lemma24_construct, falling back to exhaustive search.
BinarySolution lemma24_descend(Int k, Int p, BinarySolution sol, Int target);

/// Exhaustive search for the same postcondition (test oracle and fallback).
std::optional<BinarySolution> coprime_solution_search(Int k, Int p, Int target);

}  // namespace pentaform
