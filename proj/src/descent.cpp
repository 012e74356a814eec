#include "pentaform/descent.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "pentaform/enumerate.hpp"

namespace pentaform {

namespace {

void require_automorphism(const RationalIsometry& tau, const TernaryForm& space) {
  if (tau.den <= 0) throw InputError("isometry denominator must be positive");
  if (!tau.is_isometry(space, space)) throw InputError(tau.to_string() + " is not an isometry of " + space.to_string());
}

Vector3 cross(const Vector3& a, const Vector3& b) {
  return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
          checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
          checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

Vector3 primitive(Vector3 v) {
  const Int g = gcd(gcd(v[0], v[1]), v[2]);
  if (g == 0) return v;
  for (Int& e : v) e /= g;
  const auto first = std::find_if(v.begin(), v.end(), [](Int e) { return e != 0; });
  if (*first < 0)
    for (Int& e : v) e = -e;
  return v;
}

bool some_multiple_hits(const TernaryForm& form, const Vector3& z, Int d, Int a) {
  for (Int t = 0; t < d; ++t)
    if (mod(checked_mul(form.eval(z), t * t), d) == a) return true;
  return false;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

}  // namespace

bool has_infinite_order(const RationalIsometry& tau, const TernaryForm& space) {
  require_automorphism(tau, space);
  RationalIsometry power = tau.normalized();
  for (int k = 1; k <= 6; ++k) {
    if ((k <= 4 || k == 6) && power.is_identity()) return false;
    power = power.compose(tau);
  }
  return true;
}

Vector3 fixed_eigenvector(const RationalIsometry& tau, const TernaryForm& space) {
  require_automorphism(tau, space);
  const Int sign = tau.determinant_sign();
  Matrix3 k = tau.num;
  for (int i = 0; i < 3; ++i) k[i][i] -= sign * tau.den;
  Vector3 z{};
  for (int i = 0; i < 3 && z == Vector3{0, 0, 0}; ++i)
    for (int j = i + 1; j < 3 && z == Vector3{0, 0, 0}; ++j) z = cross(k[i], k[j]);
  if (z == Vector3{0, 0, 0})
    throw CertificateError("eigenspace of " + tau.to_string() + " for det is not one-dimensional");
  z = primitive(z);
  if (pentaform::apply(k, z) != Vector3{0, 0, 0}) throw CertificateError(tau.to_string() + " has no rational eigenvector for det");
  return z;
}

bool DescentPartition::self_loop(std::size_t self) const {
  return std::find(allowed_targets.begin(), allowed_targets.end(), self) != allowed_targets.end();
}

std::vector<Int> DescentReport::exceptional_norms() const {
  std::vector<Int> out;
  for (const auto& e : exceptional) out.push_back(e.norm);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

ResidueVectorSet good_set_of(const DescentCertificate& cert) {
  switch (cert.good_mode) {
    case DescentCertificate::GoodMode::Sigmas:
      return good_vectors(cert.n, cert.m, cert.d, cert.a, cert.sigmas);
    case DescentCertificate::GoodMode::Search:
      return good_vectors(cert.n, cert.m, cert.d, cert.a, search_isometries(cert.m, cert.n, cert.d, cert.search_cap).found);
    case DescentCertificate::GoodMode::Classes:
      break;
  }
  return cert.good_classes;
}

}  // namespace

DescentReport verify_descent_certificate(const DescentCertificate& cert) {
  DescentReport report;
  const Int d = cert.d;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  report.residues = residue_rep_set(cert.n, d, cert.a);
  report.good = good_set_of(cert);
  if (cert.good_mode == DescentCertificate::GoodMode::Classes) {
    const auto stray = report.good.minus(report.residues);
    add("good classes lie in R(N,d,a)", stray.empty(), stray.empty() ? "" : "e.g. " + to_string(stray.vectors()[0]));
  }
  report.bad = report.residues.minus(report.good);

  // Partition of the bad set.
  ResidueVectorSet covered(d);
  std::vector<std::string> overlaps;
  for (std::size_t i = 0; i < cert.partitions.size(); ++i) {
    const auto& part = cert.partitions[i];
    if (part.classes.modulus() != d) throw InputError("partition " + std::to_string(i) + " has the wrong modulus");
    for (const auto& v : part.classes.vectors()) {
      if (covered.contains(v)) overlaps.push_back(to_string(v));
      covered.insert(v);
    }
    for (std::size_t t : part.allowed_targets)
      if (t >= cert.partitions.size()) throw InputError("partition " + std::to_string(i) + " targets a missing index");
  }
  add("partition classes are pairwise disjoint", overlaps.empty(), join(overlaps));
  const auto missing = report.bad.minus(covered);
  const auto extra = covered.minus(report.bad);
  std::ostringstream cov;
  if (!missing.empty()) cov << "uncovered bad class " << to_string(missing.vectors()[0]) << "; ";
  if (!extra.empty()) cov << "partition class not bad " << to_string(extra.vectors()[0]);
  add("partition union equals R(N,d,a) minus good", missing.empty() && extra.empty(), cov.str());

  // Target digraph: only self-loops may close a cycle.
  {
    const std::size_t k = cert.partitions.size();
    std::vector<int> state(k, 0);
    bool cyclic = false;
    std::function<void(std::size_t)> visit = [&](std::size_t u) {
      state[u] = 1;
      for (std::size_t v : cert.partitions[u].allowed_targets) {
        if (v == u) continue;
        if (state[v] == 1) cyclic = true;
        if (state[v] == 0) visit(v);
      }
      state[u] = 2;
    };
    for (std::size_t u = 0; u < k; ++u)
      if (state[u] == 0) visit(u);
    add("target graph has no cycle through distinct partitions", !cyclic);
  }

  for (std::size_t i = 0; i < cert.partitions.size(); ++i) {
    const auto& part = cert.partitions[i];
    const std::string tag = "P" + std::to_string(i + 1) + ": ";
    const RationalIsometry& tau = part.tau;

    bool iso = tau.den > 0 && tau.is_isometry(cert.n, cert.n);
    add(tag + "tau is an isometry of N", iso, iso ? "" : tau.to_string());
    if (!iso) continue;
    add(tag + "tau has infinite order", has_infinite_order(tau, cert.n));
    add(tag + "tau(dN) lies in N", tau.scales_into_lattice(d));

    // Images of every lift: tau x + (d tau) w for w in (Z/d)^3.
    Matrix3 lift{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) lift[r][c] = tau.scales_into_lattice(d) ? checked_mul(d, tau.num[r][c]) / tau.den : 0;
    ResidueVectorSet shifts(d);
    for (Int w0 = 0; w0 < d; ++w0)
      for (Int w1 = 0; w1 < d; ++w1)
        for (Int w2 = 0; w2 < d; ++w2) shifts.insert(pentaform::apply(lift, {w0, w1, w2}));
    ResidueVectorSet allowed = report.good;
    for (std::size_t t : part.allowed_targets) allowed = allowed.united(cert.partitions[t].classes);

    std::vector<std::string> bad_images;
    for (const auto& x : part.classes.vectors()) {
      const auto image = tau.apply_integral(x);
      if (!image) {
        bad_images.push_back("tau" + to_string(x) + " not integral");
        continue;
      }
      for (const auto& s : shifts.vectors()) {
        const Vector3 y{image->at(0) + s[0], image->at(1) + s[1], image->at(2) + s[2]};
        if (!allowed.contains(y)) {
          bad_images.push_back(to_string(x) + " -> " + to_string(allowed.reduce(y)));
          break;
        }
      }
    }
    add(tag + "tau maps every lift into allowed classes", bad_images.empty(), join(bad_images));

    if (part.eigenvector || part.self_loop(i)) {
      Vector3 z{};
      std::string detail;
      bool ok = true;
      try {
        z = fixed_eigenvector(tau, cert.n);
      } catch (const CertificateError& e) {
        ok = false;
        detail = e.what();
      }
      if (ok && part.eigenvector) {
        ok = primitive(*part.eigenvector) == z;
        if (!ok) detail = "stated " + to_string(*part.eigenvector) + ", computed " + to_string(z);
      }
      if (ok && !part.eigenvector) {
        ok = false;
        detail = "self-targeting partition needs its eigenvector, computed " + to_string(z);
      }
      add(tag + "eigenvector matches", ok, detail);
      if (ok && part.self_loop(i)) {
        ExceptionalLine line;
        line.partition = i;
        line.z = z;
        line.norm = cert.n.eval(z);
        line.meets_progression = some_multiple_hits(cert.n, z, d, cert.a);
        line.meets_progression_in_m = some_multiple_hits(cert.m, z, d, cert.a);
        report.exceptional.push_back(line);
      }
    }
  }

  report.valid = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed; });
  return report;
}

GapReport descent_gap_check(const DescentCertificate& cert, Int bound) {
  if (bound < 0) throw InputError("gap bound must be non-negative");
  const DescentReport verdict = verify_descent_certificate(cert);
  if (!verdict.valid) throw CertificateError("descent certificate does not verify; gap check refused");

  GapReport report;
  report.bound = bound;
  const auto from_n = represented_set(cert.n, bound);
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(bound) + 1, 0);
  if (cert.good_mode == DescentCertificate::GoodMode::Classes) {
    ShortVectorSearch(cert.n).upto(bound, INT64_MIN, INT64_MAX, [&](const Vector3& v, Int q) {
      if (verdict.good.contains(v)) covered[static_cast<std::size_t>(q)] = 1;
      return false;
    });
  } else {
    covered = represented_set(cert.m, bound).bits;
  }

  std::set<Int> special;
  for (Int norm : verdict.exceptional_norms())
    for (Int t = 0; checked_mul(norm, t * t) <= bound; ++t) special.insert(norm * t * t);

  for (Int v = cert.a; v <= bound; v += cert.d) {
    if (!from_n.contains(v)) continue;
    const bool is_special = special.count(v) != 0;
    if (covered[static_cast<std::size_t>(v)]) {
      if (is_special) report.exceptional_but_covered.push_back(v);
    } else if (is_special) {
      report.excluded.push_back(v);
    } else {
      report.violations.push_back(v);
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace pentaform
