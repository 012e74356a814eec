#include <doctest.h>

#include "pentaform/descent.hpp"
#include "pentaform/io.hpp"

using namespace pentaform;

namespace {

const std::string kData = PENTAFORM_DATA_DIR;

TernaryForm form(const std::string& name) { return io::load_form(kData + "/forms/" + name + ".json"); }
RationalIsometry tau(const std::string& name) {
  return io::isometry_from_json(io::read_json(kData + "/isometries/" + name + ".json"));
}
DescentCertificate cert(const std::string& name) { return io::load_descent(kData + "/certificates/" + name + ".json"); }

Vector3 direction(Vector3 v) {
  const Int g = gcd(gcd(v[0], v[1]), v[2]);
  for (auto& x : v) x /= g;
  for (auto x : v)
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  return v;
}

}  // namespace

TEST_CASE("listed tau matrices are infinite-order isometries") {
  struct Row {
    const char* tau;
    const char* space;
    Int d;
    std::optional<Vector3> eig;
  };
  const std::vector<Row> rows = {
      {"exact_q_tau1", "residue2_n", 3, Vector3{1, 0, 0}}, {"exact_q_tau2", "residue2_n", 3, Vector3{0, 1, 0}},
      {"exact_q_tau3", "residue2_n", 3, std::nullopt},    {"n118_tau1", "n118", 6, Vector3{1, 0, 0}},
      {"n118_tau2", "n118", 6, Vector3{0, 1, 0}},         {"f116_s", "f116", 2, direction({1, -2, 7})},
      {"diag_1_3_7_tau", "diag_1_3_7", 8, Vector3{0, 1, 0}}};
  for (const auto& r : rows) {
    const auto t = tau(r.tau);
    const auto space = form(r.space);
    CHECK_MESSAGE(t.is_isometry(space, space), r.tau);
    CHECK_MESSAGE(t.scales_into_lattice(r.d), r.tau);
    CHECK_MESSAGE(has_infinite_order(t, space), r.tau);
    if (r.eig) CHECK_MESSAGE(fixed_eigenvector(t, space) == *r.eig, r.tau);
  }
}

TEST_CASE("finite-order isometries are recognised") {
  const auto f = TernaryForm::diagonal(1, 1, 1);
  const RationalIsometry swap{1, Matrix3{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  const RationalIsometry cyc{1, Matrix3{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}};
  const RationalIsometry rot{1, Matrix3{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  CHECK_FALSE(has_infinite_order(swap, f));
  CHECK_FALSE(has_infinite_order(cyc, f));
  CHECK_FALSE(has_infinite_order(rot, f));
  CHECK_FALSE(has_infinite_order(RationalIsometry::identity(), f));
  CHECK_THROWS_AS(has_infinite_order(tau("exact_q_tau1"), f), InputError);
}

TEST_CASE("shipped descent certificates verify") {
  for (const char* name : {"descent_exact_q", "descent_f116", "descent_n118", "descent_diag_1_3_7"}) {
    const auto c = cert(name);
    const auto r = verify_descent_certificate(c);
    CHECK_MESSAGE(r.valid, name);
    for (const auto& check : r.checks) CHECK_MESSAGE(check.passed, name, ": ", check.name, " ", check.detail);
    const auto g = descent_gap_check(c, 2000);
    CHECK_MESSAGE(g.ok, name);
  }
}

TEST_CASE("exceptional norms") {
  CHECK(verify_descent_certificate(cert("descent_exact_q")).exceptional_norms() == std::vector<Int>{2, 5});
  const auto r2 = verify_descent_certificate(cert("descent_n118"));
  CHECK(r2.exceptional.size() == 2);
  CHECK(r2.exceptional_norms() == std::vector<Int>{5});
  CHECK(verify_descent_certificate(cert("descent_f116")).exceptional_norms() == std::vector<Int>{378});
  const auto r6 = verify_descent_certificate(cert("descent_diag_1_3_7"));
  REQUIRE(r6.exceptional.size() == 1);
  CHECK(r6.exceptional[0].norm == 3);
  CHECK_FALSE(r6.exceptional[0].meets_progression);
}

TEST_CASE("values excluded by the descent are 2t^2 and 5t^2") {
  const auto g = descent_gap_check(cert("descent_exact_q"), 2000);
  for (Int v : g.excluded) {
    const bool shape = (v % 2 == 0 && exact_sqrt(v / 2) >= 0) || (v % 5 == 0 && exact_sqrt(v / 5) >= 0);
    CHECK(shape);
  }
  CHECK(std::find(g.excluded.begin(), g.excluded.end(), 2) != g.excluded.end());
  CHECK(std::find(g.excluded.begin(), g.excluded.end(), 5) != g.excluded.end());
}

TEST_CASE("tampered certificates are rejected") {
  {
    auto c = cert("descent_exact_q");
    c.partitions[0].allowed_targets = {1};
    CHECK_FALSE(verify_descent_certificate(c).valid);
    CHECK_THROWS_AS(descent_gap_check(c, 100), CertificateError);
  }
  {
    auto c = cert("descent_exact_q");  // claim a wrong eigenvector
    c.partitions[0].eigenvector = Vector3{0, 1, 0};
    CHECK_FALSE(verify_descent_certificate(c).valid);
  }
  {
    auto c = cert("descent_exact_q");  // self-loop through a second partition
    c.partitions[1].allowed_targets = {0, 1};
    c.partitions[0].allowed_targets = {0, 1};
    CHECK_FALSE(verify_descent_certificate(c).valid);
  }
  {
    auto c = cert("descent_exact_q");  // drop a bad class from the partition
    c.partitions[2].classes = ResidueVectorSet(3, {{1, 2, 0}});
    CHECK_FALSE(verify_descent_certificate(c).valid);
  }
  {
    auto c = cert("descent_exact_q");  // remove a sigma so good classes shrink
    c.sigmas.pop_back();
    CHECK_FALSE(verify_descent_certificate(c).valid);
  }
  {
    auto c = cert("descent_f116");  // finite-order tau
    c.partitions[0].tau = RationalIsometry::identity();
    CHECK_FALSE(verify_descent_certificate(c).valid);
  }
}
