#include "pentaform/io.hpp"

#include <fstream>

namespace pentaform::io {

namespace fs = std::filesystem;

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

Int int_field(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<Int>();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Vector3 vector_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("vector must be an array of 3 integers");
  return {int_field(j[0], "vector entry"), int_field(j[1], "vector entry"), int_field(j[2], "vector entry")};
}

Matrix3 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("matrix must be a 3x3 array");
  Matrix3 m{};
  for (std::size_t i = 0; i < 3; ++i) m[i] = vector_from_json(j[i]);
  return m;
}

json to_json(const Vector3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Matrix3& m) { return json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])}); }

TernaryForm form_from_json(const json& j) { return TernaryForm(matrix_from_json(require(j, "gram"))); }

TernaryForm load_form(const fs::path& path) {
  try {
    return form_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json to_json(const TernaryForm& f) { return json{{"gram", to_json(f.gram())}}; }

RationalIsometry isometry_from_json(const json& j) {
  RationalIsometry s;
  s.den = int_field(require(j, "den"), "den");
  if (s.den == 0) throw InputError("isometry denominator is zero");
  s.num = matrix_from_json(require(j, "num"));
  return s;
}

json to_json(const RationalIsometry& s) { return json{{"den", s.den}, {"num", to_json(s.num)}}; }

std::vector<RationalIsometry> isometries_from_json(const json& j) {
  const json& list = j.is_array() ? j : require(j, "sigmas");
  if (!list.is_array()) throw InputError("\"sigmas\" must be an array");
  std::vector<RationalIsometry> out;
  for (const auto& e : list) out.push_back(isometry_from_json(e));
  return out;
}

std::vector<RationalIsometry> load_isometries(const fs::path& path) {
  try {
    return isometries_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ResidueVectorSet residues_from_json(const json& j, Int modulus) {
  if (!j.is_array()) throw InputError("residue list must be an array");
  std::vector<Vector3> vs;
  for (const auto& e : j) vs.push_back(vector_from_json(e));
  return ResidueVectorSet(modulus, vs);
}

json to_json(const ResidueVectorSet& s) {
  json list = json::array();
  for (const auto& v : s.vectors()) list.push_back(to_json(v));
  return json{{"modulus", s.modulus()}, {"size", s.size()}, {"vectors", list}};
}

void expect_kind(const json& j, const std::string& kind) {
  const Int version = int_field(require(j, "schema"), "schema");
  if (version != kSchemaVersion) throw InputError("unsupported schema version " + std::to_string(version));
  const json& k = require(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw InputError("expected kind \"" + kind + "\", found " + k.dump());
}

TernaryForm form_field(const json& j, const fs::path& base) {
  if (j.is_string()) return load_form(base / j.get<std::string>());
  return form_from_json(j);
}

namespace {

std::vector<RationalIsometry> isometry_field(const json& j, const fs::path& base) {
  if (j.is_string()) return load_isometries(base / j.get<std::string>());
  return isometries_from_json(j);
}

RationalIsometry single_isometry_field(const json& j, const fs::path& base) {
  if (!j.is_string()) return isometry_from_json(j);
  const json file = read_json(base / j.get<std::string>());
  return isometry_from_json(file);
}

}  // namespace

DescentCertificate descent_from_json(const json& j, const fs::path& base) {
  expect_kind(j, "descent");
  DescentCertificate c;
  c.n = form_field(require(j, "n"), base);
  c.m = form_field(require(j, "m"), base);
  c.d = int_field(require(j, "d"), "d");
  c.a = int_field(require(j, "a"), "a");
  if (c.d < 1) throw InputError("modulus must be positive");
  const json& good = require(j, "good");
  const json& mode = require(good, "mode");
  if (!mode.is_string()) throw InputError("good.mode must be a string");
  const std::string m = mode.get<std::string>();
  if (m == "sigmas") {
    c.good_mode = DescentCertificate::GoodMode::Sigmas;
    c.sigmas = isometry_field(require(good, "sigmas"), base);
  } else if (m == "search") {
    c.good_mode = DescentCertificate::GoodMode::Search;
    if (good.contains("cap")) c.search_cap = static_cast<std::size_t>(int_field(good.at("cap"), "good.cap"));
  } else if (m == "classes") {
    c.good_mode = DescentCertificate::GoodMode::Classes;
    c.good_classes = residues_from_json(require(good, "classes"), c.d);
  } else {
    throw InputError("unknown good.mode \"" + m + "\"");
  }
  const json& parts = require(j, "partitions");
  if (!parts.is_array()) throw InputError("partitions must be an array");
  for (const auto& p : parts) {
    DescentPartition part;
    part.classes = residues_from_json(require(p, "classes"), c.d);
    part.tau = single_isometry_field(require(p, "tau"), base);
    const json& targets = require(p, "targets");
    if (!targets.is_array()) throw InputError("targets must be an array");
    for (const auto& t : targets) {
      const Int idx = int_field(t, "target index");
      if (idx < 0 || static_cast<std::size_t>(idx) >= parts.size())
        throw InputError("target index " + std::to_string(idx) + " out of range");
      part.allowed_targets.push_back(static_cast<std::size_t>(idx));
    }
    if (p.contains("eigenvector")) part.eigenvector = vector_from_json(p.at("eigenvector"));
    c.partitions.push_back(std::move(part));
  }
  return c;
}

DescentCertificate load_descent(const fs::path& path) {
  try {
    return descent_from_json(read_json(path), path.parent_path());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

std::string string_field(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw InputError(std::string(key) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

std::vector<PolyIdentity> identities_from_json(const json& j) {
  expect_kind(j, "identity");
  std::vector<PolyIdentity> out;
  for (const auto& e : require(j, "identities")) {
    PolyIdentity id;
    id.label = string_field(e, "label");
    id.group = e.value("group", std::string{});
    id.lhs = string_field(e, "lhs");
    id.rhs = string_field(e, "rhs");
    if (e.contains("definitions")) {
      for (const auto& [name, def] : e.at("definitions").items()) {
        FunctionDef f;
        for (const auto& p : require(def, "params")) f.params.push_back(p.get<std::string>());
        f.body = string_field(def, "body");
        id.definitions[name] = f;
      }
    }
    if (e.contains("substitutions")) {
      for (const auto& s : e.at("substitutions")) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string())
          throw InputError(id.label + ": substitution must be [variable, expression]");
        id.substitutions.emplace_back(s[0].get<std::string>(), s[1].get<std::string>());
      }
    }
    out.push_back(std::move(id));
  }
  return out;
}

std::vector<PolyIdentity> load_identities(const fs::path& path) {
  try {
    return identities_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json to_json(const GenusList& g) {
  json reps = json::array();
  for (const auto& f : g.representatives) reps.push_back(to_json(f));
  return json{{"seed", to_json(g.seed)},
              {"primes", g.primes_used},
              {"class_number", g.class_number()},
              {"representatives", reps}};
}

json to_json(const PrecReport& r) {
  return json{{"holds", r.holds},
              {"mode", r.mode == PrecReport::Mode::Search ? "search" : "supplied"},
              {"sigma_count", r.sigma_count},
              {"search_truncated", r.search_truncated},
              {"residues", to_json(r.residues)},
              {"good", to_json(r.good)},
              {"bad", to_json(r.bad)}};
}

json to_json(const DescentReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json lines = json::array();
  for (const auto& e : r.exceptional)
    lines.push_back({{"partition", e.partition},
                     {"z", to_json(e.z)},
                     {"norm", e.norm},
                     {"meets_progression", e.meets_progression},
                     {"meets_progression_in_m", e.meets_progression_in_m}});
  return json{{"valid", r.valid},      {"checks", checks},        {"residues", to_json(r.residues)},
              {"good", to_json(r.good)}, {"bad", to_json(r.bad)}, {"exceptional", lines}};
}

json to_json(const GapReport& r) {
  return json{{"ok", r.ok},
              {"bound", r.bound},
              {"violations", r.violations},
              {"excluded", r.excluded},
              {"exceptional_but_covered", r.exceptional_but_covered}};
}

json to_json(const ExclusionReport& r) {
  return json{{"bound", r.bound},
              {"class_number", r.class_number},
              {"computed", r.computed},
              {"expected", r.expected},
              {"matches", r.matches()}};
}

json to_json(const CoprimeSolution& s) {
  return json{{"n", s.n}, {"xyz", to_json(s.xyz)}, {"pent", to_json(s.pent)}};
}

json to_json(const QuadrupleReport& r) {
  const char* mode = r.mode == VerifyMode::Oracle ? "oracle" : r.mode == VerifyMode::Constructive ? "constructive" : "both";
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"n", f.n}, {"reason", f.reason}});
  json sols = json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s));
  return json{{"quadruple", {r.q.k, r.q.a, r.q.b, r.q.c}},
              {"bound", r.bound},
              {"mode", mode},
              {"success", r.success},
              {"gaps", r.gaps},
              {"failures", failures},
              {"solutions", sols}};
}

}  // namespace pentaform::io
