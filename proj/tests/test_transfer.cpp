#include <doctest.h>

#include <random>

#include "pentaform/enumerate.hpp"
#include "pentaform/io.hpp"
#include "pentaform/transfer.hpp"

using namespace pentaform;

namespace {

const std::string kData = PENTAFORM_DATA_DIR;

TernaryForm form(const std::string& name) { return io::load_form(kData + "/forms/" + name + ".json"); }
std::vector<RationalIsometry> sigmas(const std::string& name) {
  return io::load_isometries(kData + "/isometries/" + name + ".json");
}

ResidueVectorSet listing(Int d, const std::vector<Vector3>& vs) { return ResidueVectorSet(d, vs); }

// R(N,d,a) by definition, without the library routine.
ResidueVectorSet brute_rset(const TernaryForm& n, Int d, Int a) {
  ResidueVectorSet out(d);
  for (Int x = 0; x < d; ++x)
    for (Int y = 0; y < d; ++y)
      for (Int z = 0; z < d; ++z)
        if (mod(n.eval({x, y, z}), d) == a) out.insert({x, y, z});
  return out;
}

}  // namespace

TEST_CASE("residue vector sets") {
  ResidueVectorSet s(6, {{-2, 3, 0}, {4, 9, 6}, {3, 2, 0}});
  CHECK(s.size() == 2);
  CHECK(s.contains({4, 3, 0}));
  CHECK(s.reduce({-1, -7, 13}) == Vector3{5, 5, 1});
  const ResidueVectorSet t(6, {{3, 2, 0}});
  CHECK(s.minus(t) == ResidueVectorSet(6, {{4, 3, 0}}));
  CHECK(s.minus(t).united(t) == s);
  CHECK_THROWS_AS(ResidueVectorSet(0), InputError);
}

TEST_CASE("R-sets match the listed classes") {
  std::vector<Vector3> r1;
  for (Int s = 0; s < 3; ++s)
    for (Int e : {1, 2}) {
      r1.push_back({0, e, s});
      r1.push_back({e, 0, s});
    }
  CHECK(residue_rep_set(form("diag_1_1_9"), 3, 1) == listing(3, r1));

  std::vector<Vector3> r2;
  for (Int u = 0; u < 3; ++u)
    for (Int e : {1, 2}) {
      r2.push_back({0, e, u});
      r2.push_back({e, 0, u});
      r2.push_back({e, 2 * e, u});  // (+-1, +-2) with correlated signs
    }
  CHECK(residue_rep_set(form("residue2_n"), 3, 2) == listing(3, r2));
  CHECK(residue_rep_set(form("residue2_n"), 3, 2).size() == 18);
}

TEST_CASE("R-set routine agrees with the definition") {
  for (const char* name : {"exact_q", "n118", "diag_1_3_7", "l137", "f116"})
    for (Int d : {2, 3, 6, 8})
      for (Int a = 0; a < d; ++a) CHECK(residue_rep_set(form(name), d, a) == brute_rset(form(name), d, a));
}

TEST_CASE("rational isometry arithmetic") {
  const auto s = sigmas("exact_q_residue1").front();
  CHECK(s.is_isometry(form("diag_1_1_9"), form("exact_q")));
  CHECK(s.scales_into_lattice(3));
  CHECK(s.compose(RationalIsometry::identity()) == s);
  CHECK((-(-s)) == s);
  CHECK(RationalIsometry::identity().is_identity());
  RationalIsometry scaled{6, s.num};
  for (auto& row : scaled.num)
    for (auto& v : row) v *= 2;
  CHECK(scaled == s);
  CHECK(scaled.normalized().den == 3);
  CHECK(is_isometry_into(s, form("exact_q"), form("diag_1_1_9"), 3));
  CHECK_FALSE(is_isometry_into(s, form("exact_q"), form("diag_1_1_9"), 1));
}

TEST_CASE("listed isometries lie in R(M,N,3)") {
  for (const auto& s : sigmas("exact_q_residue1")) CHECK(is_isometry_into(s, form("exact_q"), form("diag_1_1_9"), 3));
  for (const auto& s : sigmas("exact_q_residue2")) CHECK(is_isometry_into(s, form("exact_q"), form("residue2_n"), 3));
}

TEST_CASE("isometry search finds every element of R(M,N,3)") {
  const auto found = search_isometries(form("exact_q"), form("diag_1_1_9"), 3, 1000000);
  CHECK_FALSE(found.truncated);
  CHECK(found.found.size() == 16);
  for (const auto& s : sigmas("exact_q_residue1"))
    CHECK(std::find(found.found.begin(), found.found.end(), s) != found.found.end());
  const auto capped = search_isometries(form("exact_q"), form("diag_1_1_9"), 3, 5);
  CHECK(capped.truncated);
  CHECK(capped.found.size() == 5);
}

TEST_CASE("good vectors") {
  const auto n = form("diag_1_1_9"), m = form("exact_q");
  const auto all = good_vectors(n, m, 3, 1, sigmas("exact_q_residue1"));
  CHECK(all == residue_rep_set(n, 3, 1));
  // fewer isometries can only shrink the good set
  const auto one = good_vectors(n, m, 3, 1, {sigmas("exact_q_residue1").front()});
  CHECK(one.minus(all).empty());
  CHECK(one.size() < all.size());
  // a matrix that is not in R(M,N,3) is rejected outright
  RationalIsometry bogus = sigmas("exact_q_residue1").front();
  bogus.num[0][1] += 1;
  CHECK_THROWS_AS(good_vectors(n, m, 3, 1, {bogus}), InputError);
}

TEST_CASE("good classes really carry every lift into M") {
  const auto n = form("residue2_n"), m = form("exact_q");
  const auto list = sigmas("exact_q_residue2");
  const auto good = good_vectors(n, m, 3, 2, list);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> w(-20, 20);
  for (const auto& x : good.vectors()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Vector3 lift{x[0] + 3 * w(rng), x[1] + 3 * w(rng), x[2] + 3 * w(rng)};
      bool carried = false;
      for (const auto& s : list) {
        const auto img = s.apply_integral(lift);
        if (img && m.eval(*img) == n.eval(lift)) carried = true;
      }
      CHECK(carried);
    }
  }
}

TEST_CASE("prec relations") {
  CHECK(check_prec(form("diag_1_1_9"), form("exact_q"), 3, 1, sigmas("exact_q_residue1")).holds);
  CHECK(check_prec_search(form("diag_1_1_9"), form("exact_q"), 3, 1).holds);
  CHECK(check_prec_search(form("diag_1_1_20"), form("diag_1_4_5"), 6, 0).holds);
  CHECK(check_prec_search(form("n128"), form("m128"), 24, 11).holds);
  CHECK(check_prec_search(form("m128"), form("l128"), 24, 11).holds);
  CHECK(check_prec_search(form("n137"), form("diag_1_3_7"), 8, 3).holds);
  CHECK(check_prec_search(form("n137"), form("diag_1_3_7"), 24, 11).holds);

  const auto r = check_prec_search(form("n118"), form("m118"), 6, 5);
  CHECK(r.sigma_count == 64);
  CHECK(r.residues.size() == 72);
  CHECK(r.bad == listing(6, {{2, 3, 0}, {-2, 3, 0}, {3, 2, 0}, {3, -2, 0}}));
  CHECK_FALSE(r.holds);

  std::vector<Vector3> p1;
  for (Int a = 0; a < 6; ++a)
    for (Int b = 0; b < 4; ++b)
      for (Int s : {1, -1})
        if (a % 3 != 0) p1.push_back({4 * a, 6 * b + 3, s * 4 * a});
  const auto r6 = check_prec_search(form("diag_1_3_7"), form("l137"), 24, 11);
  CHECK(r6.bad == listing(24, p1));
  CHECK(r6.bad.size() == 32);
}

TEST_CASE("empirical transfer soundness") {
  struct Rel {
    const char* n;
    const char* m;
    Int d, a;
  };
  for (const Rel& rel : {Rel{"diag_1_1_9", "exact_q", 3, 1}, Rel{"diag_1_1_20", "diag_1_4_5", 6, 0},
                         Rel{"n128", "m128", 24, 11}, Rel{"m128", "l128", 24, 11}, Rel{"n137", "diag_1_3_7", 8, 3}}) {
    const auto qn = represented_set(form(rel.n), 2000);
    const auto qm = represented_set(form(rel.m), 2000);
    for (Int v = rel.a; v <= 2000; v += rel.d)
      if (qn.contains(v)) CHECK_MESSAGE(qm.contains(v), rel.n, " -> ", rel.m, " at ", v);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(residue_rep_set(form("exact_q"), 0, 0), InputError);
  CHECK_THROWS_AS(residue_rep_set(form("exact_q"), 3, 3), InputError);
  CHECK_THROWS_AS((RationalIsometry{0, identity_matrix()}.normalized()), InputError);
  CHECK_THROWS_AS((RationalIsometry{1, Matrix3{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}.determinant_sign()), InputError);
}
