#include "pentaform/universality.hpp"

#include <algorithm>
#include <sstream>

#include "pentaform/arithmetic.hpp"
#include "pentaform/enumerate.hpp"
#include "pentaform/genus.hpp"
#include "pentaform/kernels.hpp"

namespace pentaform {

Quadruple::Quadruple(Int k_, Int a_, Int b_, Int c_) : k(k_), a(a_), b(b_), c(c_) {
  if (k < 3) throw InputError("polygon order must be at least 3");
  if (a < 1 || a > b || b > c) throw InputError("coefficients must satisfy 1 <= a <= b <= c");
}

std::string Quadruple::to_string() const {
  std::ostringstream os;
  os << '(' << k << ';' << a << ',' << b << ',' << c << ')';
  return os.str();
}

const std::vector<Quadruple>& constructive_quadruples() {
  static const std::vector<Quadruple> list = {{5, 1, 1, 6}, {5, 1, 1, 8},  {5, 1, 1, 9}, {5, 1, 1, 10},
                                              {5, 1, 2, 8}, {5, 1, 3, 7}, {5, 1, 3, 8}};
  return list;
}

bool has_pipeline(const Quadruple& q) {
  const auto& list = constructive_quadruples();
  return std::find(list.begin(), list.end(), q) != list.end();
}

std::vector<Int> pentagonal_gaps(const Quadruple& q, Int bound) {
  if (bound < 0) return {};
  return kernels::threads() > 1 ? kernels::polygonal_gaps_parallel(q.k, q.a, q.b, q.c, bound)
                                : kernels::polygonal_gaps_serial(q.k, q.a, q.b, q.c, bound);
}

std::optional<Int> pentagonal_oracle(const Quadruple& q, Int bound) {
  const auto gaps = pentagonal_gaps(q, bound);
  if (gaps.empty()) return std::nullopt;
  return gaps.front();
}

Int unit_to_pentagonal(Int w) {
  if (w % 2 == 0 || w % 3 == 0) throw InputError(std::to_string(w) + " is not coprime to 6");
  // pick the sign of w that is -1 mod 6, then 6x - 1 = that
  return mod(w, 6) == 5 ? (1 + w) / 6 : (1 - w) / 6;
}

namespace {

bool unit6(Int v) { return v % 2 != 0 && v % 3 != 0; }

CertificateError pipeline_error(const Quadruple& q, Int n, const std::string& what) {
  return CertificateError(q.to_string() + " n=" + std::to_string(n) + ": " + what);
}

Vector3 require_rep(const Quadruple& q, Int n, const TernaryForm& form, Int value) {
  const auto v = find_representation_with(form, value, [](const Vector3&) { return true; });
  if (!v) throw pipeline_error(q, n, std::to_string(value) + " is not represented by " + form.to_string());
  return *v;
}

Vector3 pipeline_116(const Quadruple& q, Int n) {
  const TernaryForm f(Matrix3{{{2, 1, 0}, {1, 4, 1}, {0, 1, 8}}});
  const auto v = find_representation_with(f, 6 * n + 2, [](const Vector3& r) { return (r[0] - r[2]) % 2 != 0; });
  if (!v) throw pipeline_error(q, n, "no representation with a, c of opposite parity");
  const auto [a, b, c] = *v;
  const Int d = a + 5 * c, e = -b + c, g = c;
  return {d, d - 4 * e, d - 6 * g};
}

Vector3 pipeline_118(const Quadruple& q, Int n) {
  const TernaryForm f(Matrix3{{{10, -6, -16}, {-6, 36, 0}, {-16, 0, 32}}});
  const auto [x, y, z] = require_rep(q, n, f, 24 * n + 10);
  return {x, x - 6 * y, x - 2 * z};
}

Vector3 pipeline_119(const Quadruple& q, Int n) {
  const TernaryForm f(Matrix3{{{1, 0, 0}, {0, 9, -3}, {0, -3, 10}}});
  const auto [x, y, z] = require_rep(q, n, f, 24 * n + 11);
  return {x, z - 3 * y, z};
}

Vector3 pipeline_1110(const Quadruple& q, Int n) {
  const TernaryForm f = TernaryForm::diagonal(1, 4, 5);
  auto [a, b, c] = require_rep(q, n, f, 12 * n + 6);
  if (c % 3 == 0) {
    // then 3 | a and 3 | b as well; move the factor off c on a^2 + 5c^2
    const auto [a2, c2] = lemma24_descend(5, 3, {a, c}, a * a + 5 * c * c);
    a = a2;
    c = c2;
  }
  return {a + 2 * b, a - 2 * b, c};
}

Vector3 pipeline_128(const Quadruple& q, Int n) {
  const TernaryForm f(Matrix3{{{1, 0, 0}, {0, 10, 2}, {0, 2, 58}}});
  const auto [a, b, c] = require_rep(q, n, f, 24 * n + 11);
  return {a, b + 5 * c, b - c};
}

// (3i + s 7j)/2, (i - s 3j)/2 for odd i, j, choosing s so both are odd.
std::pair<Int, Int> halve_seven(Int i, Int j) {
  for (Int s : {1, -1}) {
    const Int x = (3 * i + s * 7 * j) / 2;
    const Int y = (i - s * 3 * j) / 2;
    if (y % 2 != 0 && x % 2 != 0) return {x, y};
  }
  throw std::logic_error("halving identity produced no odd pair");
}

// Odd X, Y with X^2 + 7Y^2 = D^2 + 7F^2 for even D, F coprime to 3.
std::pair<Int, Int> make_odd_seven(Int D, Int F, int& steps) {
  if (++steps > 8) throw CertificateError("parity repair for x^2 + 7y^2 exceeded 8 identity steps");
  const Int i = D / 2, j = F / 2;
  const bool i_odd = i % 2 != 0, j_odd = j % 2 != 0;
  if (i_odd && j_odd) return halve_seven(i, j);
  if (i_odd != j_odd) throw CertificateError("D^2 + 7F^2 with D/2, F/2 of mixed parity has no odd representation");
  const Int A = i / 2, B = j / 2;
  if ((A - B) % 2 != 0) return {3 * A + 7 * B, A - 3 * B};  // 16(A^2+7B^2) = (3A+7B)^2 + 7(A-3B)^2
  const auto [x, y] = make_odd_seven(i, j, steps);
  return halve_seven(x, y);
}

Vector3 pipeline_137(const Quadruple& q, Int n) {
  const TernaryForm l(Matrix3{{{4, 1, 0}, {1, 7, 0}, {0, 0, 7}}});
  const auto [a, b, c] = require_rep(q, n, l, 24 * n + 11);
  Int d = a - 2 * b, e = a + b, f = c;
  const bool d_odd = d % 2 != 0, e_odd = e % 2 != 0, f_odd = f % 2 != 0;
  if (d_odd && e_odd && f_odd) return {d, e, f};
  if (!d_odd && !e_odd && f_odd) {
    const Int g = d / 2, h = e / 2;
    for (Int s : {1, -1}) {
      const Int d2 = g + s * 3 * h, e2 = g - s * h;
      if (e2 % 3 != 0) return {d2, e2, f};
    }
    throw pipeline_error(q, n, "both g + h and g - h divisible by 3");
  }
  if (!d_odd && e_odd && !f_odd) {
    int steps = 0;
    const auto [d2, f2] = make_odd_seven(d, f, steps);
    return {d2, e, f2};
  }
  throw pipeline_error(q, n, "unexpected parity pattern " + to_string(Vector3{d, e, f}));
}

bool conditions_138(const Vector3& v) {
  const auto [a, b, c] = v;
  return (b - c) % 2 != 0 && mod(a + b - c, 3) != 0 && mod(b - c, 3) != 0;
}

Vector3 pipeline_138(const Quadruple& q, Int n) {
  const TernaryForm f = TernaryForm::diagonal(1, 1, 2);
  const Int value = 2 * n + 1;
  // All sign patterns and the (a, b) swap are themselves representations,
  // so a lexicographic scan of R(2n+1) covers the sign search.
  auto v = find_representation_with(f, value, conditions_138);
  if (!v) {
    for (const auto& r : enumerate_representations(f, value)) {
      if (r[1] % 3 != 0 || r[2] % 3 != 0) continue;
      const auto [b2, c2] = lemma24_descend(2, 3, {r[1], r[2]}, r[1] * r[1] + 2 * r[2] * r[2]);
      for (Int sa : {1, -1})
        for (Int sb : {1, -1})
          for (Int sc : {1, -1}) {
            const Vector3 cand{sa * r[0], sb * b2, sc * c2};
            if (!v && conditions_138(cand)) v = cand;
          }
      if (v) break;
    }
  }
  if (!v) throw pipeline_error(q, n, "no representation of 2n+1 meets the congruence conditions");
  const auto [a, b, c] = *v;
  const Int d = a, e = a + b + 2 * c, f2 = c - a;
  return {e - 4 * d, e, e - 4 * d - 3 * f2};
}

}  // namespace

CoprimeSolution coprime_solution(const Quadruple& q, Int n) {
  if (n < 0) throw InputError("n must be non-negative");
  if (!has_pipeline(q)) throw InputError("no constructive pipeline for " + q.to_string());
  Vector3 xyz{};
  if (q.b == 1 && q.c == 6) xyz = pipeline_116(q, n);
  if (q.b == 1 && q.c == 8) xyz = pipeline_118(q, n);
  if (q.b == 1 && q.c == 9) xyz = pipeline_119(q, n);
  if (q.b == 1 && q.c == 10) xyz = pipeline_1110(q, n);
  if (q.b == 2 && q.c == 8) xyz = pipeline_128(q, n);
  if (q.b == 3 && q.c == 7) xyz = pipeline_137(q, n);
  if (q.b == 3 && q.c == 8) xyz = pipeline_138(q, n);
  for (Int& v : xyz) v = v < 0 ? -v : v;  // only squares enter the equation
  CoprimeSolution s;
  s.n = n;
  s.xyz = xyz;
  if (!unit6(xyz[0]) || !unit6(xyz[1]) || !unit6(xyz[2]))
    throw pipeline_error(q, n, "output " + to_string(xyz) + " is not coprime to 6");
  s.pent = {unit_to_pentagonal(xyz[0]), unit_to_pentagonal(xyz[1]), unit_to_pentagonal(xyz[2])};
  if (auto why = validate_solution(q, s)) throw pipeline_error(q, n, *why);
  return s;
}

std::optional<std::string> validate_solution(const Quadruple& q, const CoprimeSolution& s) {
  const auto [x, y, z] = s.xyz;
  const Int lhs = x * x + q.b * y * y + q.c * z * z;
  const Int rhs = 24 * s.n + q.b + q.c + 1;
  if (lhs != rhs) return "x^2 + by^2 + cz^2 = " + std::to_string(lhs) + ", expected " + std::to_string(rhs);
  if (!unit6(x) || !unit6(y) || !unit6(z)) return "gcd(xyz, 6) != 1";
  for (int i = 0; i < 3; ++i)
    if (6 * s.pent[i] - 1 != s.xyz[i] && 6 * s.pent[i] - 1 != -s.xyz[i]) return "pentagonal argument mismatch";
  const Int sum = q.a * polygonal(q.k, s.pent[0]) + q.b * polygonal(q.k, s.pent[1]) + q.c * polygonal(q.k, s.pent[2]);
  if (sum != s.n) return "pentagonal sum is " + std::to_string(sum);
  return std::nullopt;
}

QuadrupleReport verify_quadruple(const Quadruple& q, Int bound, VerifyMode mode) {
  if (bound < 0) throw InputError("bound must be non-negative");
  QuadrupleReport report;
  report.q = q;
  report.bound = bound;
  report.mode = mode;
  if (mode != VerifyMode::Constructive) report.gaps = pentagonal_gaps(q, bound);
  if (mode != VerifyMode::Oracle) {
    if (!has_pipeline(q)) throw InputError("no constructive pipeline for " + q.to_string());
    report.solutions.resize(static_cast<std::size_t>(bound) + 1);
    std::vector<std::string> errors(static_cast<std::size_t>(bound) + 1);
#pragma omp parallel for schedule(dynamic, 64) num_threads(kernels::threads())
    for (Int n = 0; n <= bound; ++n) {
      try {
        report.solutions[static_cast<std::size_t>(n)] = coprime_solution(q, n);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(n)] = e.what();
      }
    }
    for (Int n = 0; n <= bound; ++n)
      if (!errors[static_cast<std::size_t>(n)].empty()) report.failures.push_back({n, errors[static_cast<std::size_t>(n)]});
    if (mode == VerifyMode::Both)
      for (Int g : report.gaps)
        if (errors[static_cast<std::size_t>(g)].empty())
          report.failures.push_back({g, "oracle reports a gap but the pipeline produced a solution"});
  }
  report.success = report.gaps.empty() && report.failures.empty();
  return report;
}

TernaryForm exact_q_form() { return TernaryForm::block(1, 9, 3, 10); }

ExclusionReport exact_q_exclusions(Int bound) {
  if (bound < 1) throw InputError("bound must be at least 1");
  ExclusionReport report;
  report.bound = bound;
  const TernaryForm m = exact_q_form();
  const GenusList genus = genus_classes(m, admissible_primes(m, 2));
  report.class_number = genus.class_number();
  const auto eligible = eligible_set(genus, bound);
  const auto represented = represented_set(m, bound);
  for (Int v = 0; v <= bound; ++v)
    if (eligible.contains(v) && !represented.contains(v)) report.computed.push_back(v);
  for (Int base : {2, 5})
    for (Int v = base; v <= bound; v *= 4) report.expected.push_back(v);
  std::sort(report.expected.begin(), report.expected.end());
  return report;
}

}  // namespace pentaform
