#include <doctest.h>

#include <random>

#include "pentaform/form.hpp"

using namespace pentaform;

namespace {

Matrix3 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5), coef(-2, 2);
  Matrix3 u = identity_matrix();
  for (int step = 0; step < 6; ++step) {
    const int i = pick(rng) % 3, j = (i + 1 + pick(rng) % 2) % 3;
    const int c = coef(rng);
    for (int r = 0; r < 3; ++r) u[r][j] += c * u[r][i];
  }
  if (pick(rng) % 2) for (int r = 0; r < 3; ++r) u[r][0] = -u[r][0];
  return u;
}

}  // namespace

TEST_CASE("evaluation and bilinear form") {
  const TernaryForm m = TernaryForm::block(1, 9, 3, 10);
  CHECK(m.eval({1, 1, 1}) == 1 + 9 + 10 + 6);
  CHECK(m.bilinear({0, 1, 0}, {0, 0, 1}) == 3);
  CHECK(m.determinant() == 81);
  CHECK(TernaryForm::block_first(2, 1, 5, 9).determinant() == 81);
  CHECK(eval_form(m, {0, -1, 1}) == 13);
}

TEST_CASE("construction rejects bad Gram matrices") {
  CHECK_THROWS_AS(TernaryForm(Matrix3{{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}}), InputError);
  CHECK_THROWS_AS(TernaryForm::diagonal(1, -1, 1), InputError);
  CHECK_THROWS_AS(TernaryForm(Matrix3{{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}}), InputError);
  CHECK_FALSE(is_positive_definite(Matrix3{{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
  CHECK(TernaryForm::diagonal(2, 4, 6).is_primitive() == false);
  CHECK(TernaryForm::diagonal(1, 4, 6).is_primitive());
}

TEST_CASE("generalized polygonal numbers") {
  CHECK(polygonal(5, 0) == 0);
  CHECK(polygonal(5, 1) == 1);
  CHECK(polygonal(5, -1) == 2);
  CHECK(polygonal(5, 2) == 5);
  CHECK(polygonal(5, -2) == 7);
  CHECK(polygonal(3, 3) == 6);
  CHECK(polygonal(4, -3) == 9);
  CHECK_THROWS_AS(polygonal(2, 1), InputError);
  CHECK(PolygonalIndex(5, 3).value() == 12);
}

TEST_CASE("reduction of known forms") {
  CHECK(minkowski_reduce(TernaryForm::block(1, 1, 1, 10)) == minkowski_reduce(TernaryForm::diagonal(1, 1, 9)));
  CHECK(is_isometric(TernaryForm::block(1, 1, 1, 10), TernaryForm::diagonal(1, 1, 9)));
  CHECK_FALSE(is_isometric(TernaryForm::diagonal(1, 4, 5), TernaryForm::diagonal(1, 1, 20)));
  CHECK_FALSE(is_isometric(TernaryForm::diagonal(1, 1, 2), TernaryForm::diagonal(1, 1, 3)));
  CHECK_FALSE(is_isometric(TernaryForm::diagonal(1, 1, 81), TernaryForm::block(1, 9, 3, 10)));
}

TEST_CASE("reduction is a class invariant and reports its basis") {
  std::mt19937_64 rng(7);
  const std::vector<TernaryForm> seeds = {TernaryForm::block(1, 9, 3, 10), TernaryForm::diagonal(1, 3, 7),
                                          TernaryForm(Matrix3{{{4, 2, 2}, {2, 5, 1}, {2, 1, 10}}}),
                                          TernaryForm(Matrix3{{{3, 1, 1}, {1, 3, -1}, {1, -1, 9}}})};
  for (const auto& f : seeds) {
    const TernaryForm r = minkowski_reduce(f);
    for (int trial = 0; trial < 25; ++trial) {
      const Matrix3 u = random_unimodular(rng);
      const TernaryForm g = f.transformed(u);
      Matrix3 basis{};
      const TernaryForm rg = minkowski_reduce(g, basis);
      CHECK(rg == r);
      CHECK(g.transformed(basis) == rg);
      const Int det = determinant(basis);
      CHECK((det == 1 || det == -1));
    }
    // diagonal is non-decreasing successive minima
    CHECK(r.gram()[0][0] <= r.gram()[1][1]);
    CHECK(r.gram()[1][1] <= r.gram()[2][2]);
  }
}

TEST_CASE("matrix helpers") {
  const Matrix3 a{{{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}};
  CHECK(determinant(a) == 1);
  CHECK(multiply(a, identity_matrix()) == a);
  CHECK(transpose(transpose(a)) == a);
  CHECK(apply(a, {1, 0, 0}) == Vector3{1, 0, 5});
  CHECK(to_string(Vector3{1, -2, 3}) == "(1,-2,3)");
}
