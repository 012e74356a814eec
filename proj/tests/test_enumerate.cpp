#include <doctest.h>

#include <algorithm>
#include <map>

#include "pentaform/enumerate.hpp"
#include "pentaform/kernels.hpp"

using namespace pentaform;

namespace {

// Cube search; the boxes used are far wider than any short vector of these forms.
std::map<Int, Int> brute_counts(const TernaryForm& f, Int bound, Int box) {
  std::map<Int, Int> counts;
  for (Int x = -box; x <= box; ++x)
    for (Int y = -box; y <= box; ++y)
      for (Int z = -box; z <= box; ++z) {
        const Int q = f.eval({x, y, z});
        if (q <= bound) ++counts[q];
      }
  return counts;
}

const std::vector<TernaryForm>& sample_forms() {
  static const std::vector<TernaryForm> forms = {
      TernaryForm::diagonal(1, 1, 1), TernaryForm::block(1, 9, 3, 10), TernaryForm::block_first(2, 1, 5, 9),
      TernaryForm(Matrix3{{{2, 1, 0}, {1, 4, 1}, {0, 1, 8}}}), TernaryForm(Matrix3{{{5, 1, 2}, {1, 5, -2}, {2, -2, 8}}}),
      TernaryForm(Matrix3{{{10, -6, -16}, {-6, 36, 0}, {-16, 0, 32}}})};
  return forms;
}

}  // namespace

TEST_CASE("representation counts match a box search") {
  const Int bound = 60;
  for (const auto& f : sample_forms()) {
    const auto expected = brute_counts(f, bound, 40);
    for (Int a = 0; a <= bound; ++a) {
      const auto it = expected.find(a);
      CHECK_MESSAGE(representation_count(f, a) == (it == expected.end() ? 0 : it->second), f.to_string(), " a=", a);
    }
  }
}

TEST_CASE("known counts") {
  const TernaryForm n2 = TernaryForm::block_first(2, 1, 5, 9);
  CHECK(representation_count(n2, 125) == 24);
  CHECK(representation_count(TernaryForm::diagonal(1, 1, 1), 0) == 1);
  CHECK(representation_count(TernaryForm::diagonal(1, 1, 1), 3) == 8);
  CHECK(representation_count(TernaryForm::diagonal(1, 1, 1), 7) == 0);
  CHECK(representation_count(TernaryForm::diagonal(1, 1, 1), -1) == 0);
}

TEST_CASE("enumeration is lexicographic and exact") {
  const TernaryForm f = TernaryForm::block(1, 9, 3, 10);
  for (Int a : {0, 1, 11, 35, 90, 250}) {
    const auto reps = enumerate_representations(f, a);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    CHECK(std::adjacent_find(reps.begin(), reps.end()) == reps.end());
    for (const auto& v : reps) CHECK(f.eval(v) == a);
  }
  const auto first = find_representation_with(f, 11, [](const Vector3&) { return true; });
  REQUIRE(first);
  CHECK(*first == enumerate_representations(f, 11).front());
  CHECK_FALSE(find_representation_with(f, 2, [](const Vector3&) { return true; }));
}

TEST_CASE("short vector search range cover") {
  const ShortVectorSearch s(TernaryForm(Matrix3{{{5, 1, 2}, {1, 5, -2}, {2, -2, 8}}}));
  Int visited = 0;
  s.upto(50, s.outer_range(50).first, s.outer_range(50).second, [&](const Vector3& v, Int q) {
    CHECK(q == s.form().eval(v));
    CHECK(q <= 50);
    ++visited;
    return false;
  });
  Int expected = 0;
  for (const auto& [q, c] : brute_counts(s.form(), 50, 30)) expected += c;
  CHECK(visited == expected);
}

TEST_CASE("serial and parallel sieves agree") {
  for (const auto& f : sample_forms()) {
    const ShortVectorSearch s(f);
    const auto serial = kernels::sieve_serial(s, 5000);
    for (int t : {1, 2, 4}) {
      kernels::set_threads(t);
      CHECK(kernels::sieve_parallel(s, 5000) == serial);
    }
    kernels::set_threads(1);
    const auto rs = represented_set(f, 5000);
    for (Int a = 0; a <= 5000; ++a) CHECK(rs.contains(a) == (serial[static_cast<std::size_t>(a)] != 0));
  }
}

TEST_CASE("sieve agrees with per-value counts") {
  const TernaryForm f = TernaryForm::block(1, 9, 3, 10);
  const auto rs = represented_set(f, 400);
  for (Int a = 0; a <= 400; ++a) CHECK(rs.contains(a) == (representation_count(f, a) > 0));
  CHECK(rs.contains(11));
  CHECK_FALSE(rs.contains(2));
  CHECK_FALSE(rs.contains(5));
  CHECK_FALSE(rs.contains(401));
}
