#include <doctest.h>

#include "pentaform/io.hpp"

using namespace pentaform;
using io::json;

TEST_CASE("form and isometry round trips") {
  const TernaryForm f(Matrix3{{{4, 2, 2}, {2, 5, 1}, {2, 1, 10}}});
  CHECK(io::form_from_json(io::to_json(f)) == f);
  const RationalIsometry s{6, Matrix3{{{-6, -4, -2}, {0, 6, -6}, {0, 4, 2}}}};
  CHECK(io::isometry_from_json(io::to_json(s)) == s);
  const auto list = io::isometries_from_json(json::array({io::to_json(s), io::to_json(s)}));
  CHECK(list.size() == 2);
  CHECK(io::isometries_from_json(json{{"sigmas", json::array({io::to_json(s)})}}).size() == 1);
}

TEST_CASE("malformed input is an InputError") {
  CHECK_THROWS_AS(io::form_from_json(json::parse(R"({"gram": [[1,0],[0,1]]})")), InputError);
  CHECK_THROWS_AS(io::form_from_json(json::parse(R"({"gram": [[1,0,0],[0,1,0],[0,0,"x"]]})")), InputError);
  CHECK_THROWS_AS(io::form_from_json(json::parse(R"({"matrix": []})")), InputError);
  CHECK_THROWS_AS(io::isometry_from_json(json::parse(R"({"den": 0, "num": [[1,0,0],[0,1,0],[0,0,1]]})")), InputError);
  CHECK_THROWS_AS(io::read_json("/nonexistent/file.json"), InputError);
  CHECK_THROWS_AS(io::expect_kind(json::parse(R"({"schema": 2, "kind": "prec"})"), "prec"), InputError);
  CHECK_THROWS_AS(io::expect_kind(json::parse(R"({"schema": 1, "kind": "genus"})"), "prec"), InputError);
  CHECK_THROWS_AS(io::descent_from_json(json::parse(R"({"schema": 1, "kind": "descent"})")), InputError);
}

TEST_CASE("descent certificate parsing") {
  const auto c = io::load_descent(std::string(PENTAFORM_DATA_DIR) + "/certificates/descent_diag_1_3_7.json");
  CHECK(c.d == 24);
  CHECK(c.a == 11);
  CHECK(c.good_mode == DescentCertificate::GoodMode::Search);
  REQUIRE(c.partitions.size() == 1);
  CHECK(c.partitions[0].classes.size() == 32);
  CHECK(c.partitions[0].tau.den == 8);
  CHECK(c.partitions[0].eigenvector == Vector3{0, 1, 0});
}

TEST_CASE("reports re-verify from their JSON") {
  const Quadruple q(5, 1, 3, 7);
  const auto r = verify_quadruple(q, 300, VerifyMode::Both);
  const json j = json::parse(io::to_json(r).dump());
  CHECK(j["success"].get<bool>() == r.success);
  for (const auto& s : j["solutions"]) {
    CoprimeSolution back;
    back.n = s["n"].get<Int>();
    back.xyz = io::vector_from_json(s["xyz"]);
    back.pent = io::vector_from_json(s["pent"]);
    CHECK_FALSE(validate_solution(q, back));
  }
  const auto e = io::to_json(exact_q_exclusions(500));
  CHECK(e["matches"].get<bool>());
  CHECK(e["computed"].get<std::vector<Int>>() == e["expected"].get<std::vector<Int>>());
}
