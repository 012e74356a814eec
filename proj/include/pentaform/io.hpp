#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentaform/descent.hpp"
#include "pentaform/genus.hpp"
#include "pentaform/poly.hpp"
#include "pentaform/transfer.hpp"
#include "pentaform/universality.hpp"

namespace pentaform::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parse errors of any kind surface as InputError.
json read_json(const std::filesystem::path& path);

Vector3 vector_from_json(const json& j);
Matrix3 matrix_from_json(const json& j);
json to_json(const Vector3& v);
json to_json(const Matrix3& m);

/// {"gram": [[...],[...],[...]]}
TernaryForm form_from_json(const json& j);
TernaryForm load_form(const std::filesystem::path& path);
json to_json(const TernaryForm& f);

/// {"den": d, "num": [[...],[...],[...]]}
RationalIsometry isometry_from_json(const json& j);
json to_json(const RationalIsometry& s);
/// A bare array of isometries, or an object with a "sigmas" array.
std::vector<RationalIsometry> isometries_from_json(const json& j);
std::vector<RationalIsometry> load_isometries(const std::filesystem::path& path);

ResidueVectorSet residues_from_json(const json& j, Int modulus);
json to_json(const ResidueVectorSet& s);

/// Checks "schema" and "kind"; throws InputError on mismatch.
void expect_kind(const json& j, const std::string& kind);

/// kind "descent". Form values may be inline objects or paths relative to
/// `base`.
DescentCertificate descent_from_json(const json& j, const std::filesystem::path& base = {});
DescentCertificate load_descent(const std::filesystem::path& path);

/// kind "identity": {"identities": [...]}.
std::vector<PolyIdentity> identities_from_json(const json& j);
std::vector<PolyIdentity> load_identities(const std::filesystem::path& path);

/// Form field that is either an inline {"gram": ...} or a relative path.
TernaryForm form_field(const json& j, const std::filesystem::path& base);

json to_json(const GenusList& g);
json to_json(const PrecReport& r);
json to_json(const DescentReport& r);
json to_json(const GapReport& r);
json to_json(const ExclusionReport& r);
json to_json(const QuadrupleReport& r);
json to_json(const CoprimeSolution& s);

}  // namespace pentaform::io
