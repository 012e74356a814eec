#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pentaform/arithmetic.hpp"
#include "pentaform/enumerate.hpp"
#include "pentaform/io.hpp"
#include "pentaform/kernels.hpp"

using namespace pentaform;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  json report;
  std::string text;
};

std::string join(const std::vector<Int>& v, std::size_t limit = 40) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? " " : "") << v[i];
  if (v.size() > limit) os << " ... (" << v.size() << " total)";
  return os.str();
}

std::string join(const ResidueVectorSet& s, std::size_t limit = 40) {
  std::ostringstream os;
  std::size_t i = 0;
  for (const auto& v : s.vectors()) {
    if (i == limit) {
      os << " ... (" << s.size() << " total)";
      break;
    }
    os << (i++ ? " " : "") << to_string(v);
  }
  return os.str();
}

std::vector<Int> parse_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not an integer list: " + text);
    }
  }
  return out;
}

VerifyMode parse_mode(const std::string& m) {
  if (m == "oracle") return VerifyMode::Oracle;
  if (m == "constructive") return VerifyMode::Constructive;
  if (m == "both") return VerifyMode::Both;
  throw InputError("mode must be oracle, constructive or both");
}

Outcome run_verify(const Quadruple& q, Int bound, VerifyMode mode) {
  const auto r = verify_quadruple(q, bound, mode);
  Outcome o;
  o.ok = r.success;
  o.report = io::to_json(r);
  o.report["claim"] = q.to_string() + " universal for n <= " + std::to_string(bound);
  std::ostringstream os;
  os << q.to_string() << " n <= " << bound << ": ";
  if (r.success) {
    os << "every n represented";
    if (mode != VerifyMode::Oracle) os << ", " << r.solutions.size() << " coprime solutions validated";
  } else {
    if (!r.gaps.empty()) os << "gaps: " << join(r.gaps);
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
      os << "\n  n=" << r.failures[i].n << ": " << r.failures[i].reason;
  }
  o.text = os.str();
  return o;
}

Outcome run_exclusions(Int bound) {
  const auto r = exact_q_exclusions(bound);
  Outcome o;
  o.ok = r.matches();
  o.report = io::to_json(r);
  o.report["claim"] = "Q(M) = Q(gen M) minus {2*4^m, 5*4^n} for M = <1> + [9,3;3,10]";
  o.text = "class number " + std::to_string(r.class_number) + "\neligible but not represented: " + join(r.computed) +
           "\nexpected: " + join(r.expected) + (o.ok ? "\nmatch" : "\nMISMATCH");
  return o;
}

Outcome run_prec(const TernaryForm& n, const TernaryForm& m, Int d, Int a, const std::vector<RationalIsometry>* sigmas,
                 std::size_t cap) {
  const PrecReport r = sigmas ? check_prec(n, m, d, a, *sigmas) : check_prec_search(n, m, d, a, cap);
  Outcome o;
  o.ok = r.holds;
  o.report = io::to_json(r);
  o.report["claim"] = "N prec_{" + std::to_string(d) + "," + std::to_string(a) + "} M";
  std::ostringstream os;
  os << "|R(N," << d << "," << a << ")| = " << r.residues.size() << ", " << r.sigma_count
     << (sigmas ? " supplied" : " searched") << " isometries" << (r.search_truncated ? " (truncated)" : "")
     << "\ngood " << r.good.size() << ", bad " << r.bad.size();
  if (!r.bad.empty()) os << ": " << join(r.bad);
  os << "\nrelation " << (r.holds ? "holds" : "fails");
  o.text = os.str();
  return o;
}

Outcome run_descent(const DescentCertificate& cert, Int gap_bound) {
  const auto r = verify_descent_certificate(cert);
  Outcome o;
  o.ok = r.valid;
  o.report = io::to_json(r);
  std::ostringstream os;
  os << "|R(N," << cert.d << "," << cert.a << ")| = " << r.residues.size() << ", good " << r.good.size() << ", bad "
     << r.bad.size();
  for (const auto& c : r.checks) os << "\n  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail);
  for (const auto& e : r.exceptional)
    os << "\n  exceptional line " << to_string(e.z) << ", Q = " << e.norm
       << (e.meets_progression ? "" : " (never meets the progression)");
  if (r.valid && gap_bound > 0) {
    const auto g = descent_gap_check(cert, gap_bound);
    o.ok = g.ok;
    o.report["gap_check"] = io::to_json(g);
    os << "\ngap check to " << gap_bound << ": " << (g.ok ? "ok" : "violations " + join(g.violations));
    if (!g.excluded.empty()) os << "\n  uncovered exceptional values: " << join(g.excluded);
  }
  os << "\ncertificate " << (o.ok ? "valid" : "INVALID");
  o.text = os.str();
  return o;
}

Outcome run_genus(const TernaryForm& f, const std::vector<Int>& primes, std::optional<std::size_t> expect) {
  const auto g = genus_classes(f, primes.empty() ? admissible_primes(f) : primes);
  Outcome o;
  o.ok = !expect || *expect == g.class_number();
  o.report = io::to_json(g);
  if (expect) o.report["expected_class_number"] = *expect;
  std::ostringstream os;
  os << "class number " << g.class_number() << " (primes " << join(g.primes_used) << ")";
  for (const auto& r : g.representatives) os << "\n  " << r.to_string();
  if (expect && !o.ok) os << "\nexpected " << *expect;
  o.text = os.str();
  return o;
}

Outcome run_identities(const fs::path& corpus, const std::string& label, bool mutations) {
  const auto ids = io::load_identities(corpus);
  Outcome o;
  o.report = json::array();
  std::ostringstream os;
  std::size_t checked = 0;
  for (const auto& id : ids) {
    if (!label.empty() && id.label != label && id.group != label) continue;
    ++checked;
    const bool holds = expand_identity(id);
    std::size_t survived = 0, total = 0;
    if (mutations) {
      for (const auto& mutant : coefficient_mutations(id)) {
        ++total;
        if (expand_identity(mutant)) ++survived;
      }
    }
    const bool ok = holds && survived == 0;
    o.ok = o.ok && ok;
    json entry = {{"label", id.label}, {"group", id.group}, {"holds", holds}};
    if (mutations) entry["mutants"] = {{"total", total}, {"survived", survived}};
    o.report.push_back(entry);
    os << (ok ? "ok   " : "FAIL ") << id.label;
    if (mutations) os << "  (" << total - survived << "/" << total << " mutants rejected)";
    os << '\n';
  }
  if (checked == 0) throw InputError("no identity matches \"" + label + "\"");
  os << checked << " identities checked";
  o.text = os.str();
  return o;
}

Outcome run_count(const TernaryForm& f, Int value) {
  Outcome o;
  const Int r = representation_count(f, value);
  o.report = {{"form", io::to_json(f)}, {"value", value}, {"count", r}};
  o.text = std::to_string(r);
  return o;
}

Outcome run_rset(const TernaryForm& f, Int d, Int a) {
  const auto r = residue_rep_set(f, d, a);
  Outcome o;
  o.report = io::to_json(r);
  o.text = "|R(N," + std::to_string(d) + "," + std::to_string(a) + ")| = " + std::to_string(r.size()) + "\n" + join(r, 1u << 20);
  return o;
}

Outcome run_certificate(const fs::path& path) {
  const json j = io::read_json(path);
  const fs::path base = path.parent_path();
  if (!j.contains("kind") || !j["kind"].is_string()) throw InputError(path.string() + ": missing kind");
  const std::string kind = j["kind"];
  io::expect_kind(j, kind);
  auto num = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw InputError(std::string("missing integer \"") + key + "\"");
    return j[key].get<Int>();
  };
  Outcome o;
  if (kind == "descent") {
    o = run_descent(io::load_descent(path), j.value("gap_bound", Int{0}));
  } else if (kind == "prec") {
    const auto n = io::form_field(j.at("n"), base), m = io::form_field(j.at("m"), base);
    const bool expect = j.value("expect", true);
    if (j.contains("sigmas")) {
      const auto sigmas = j["sigmas"].is_string() ? io::load_isometries(base / j["sigmas"].get<std::string>())
                                                  : io::isometries_from_json(j["sigmas"]);
      o = run_prec(n, m, num("d"), num("a"), &sigmas, 0);
    } else {
      o = run_prec(n, m, num("d"), num("a"), nullptr, j.value("cap", std::size_t{1000000}));
    }
    o.ok = o.ok == expect;
  } else if (kind == "genus") {
    std::vector<Int> primes;
    if (j.contains("primes")) primes = j["primes"].get<std::vector<Int>>();
    std::optional<std::size_t> expect;
    if (j.contains("class_number")) expect = j["class_number"].get<std::size_t>();
    o = run_genus(io::form_field(j.at("form"), base), primes, expect);
  } else if (kind == "theorem31") {
    o = run_exclusions(num("bound"));
  } else if (kind == "quadruple") {
    const auto q = j.at("quadruple").get<std::vector<Int>>();
    if (q.size() != 4) throw InputError("quadruple must be [k, a, b, c]");
    o = run_verify(Quadruple(q[0], q[1], q[2], q[3]), num("bound"), parse_mode(j.value("mode", std::string("both"))));
  } else if (kind == "identity") {
    o = run_identities(path, "", j.value("mutations", true));
  } else {
    throw InputError("unknown certificate kind \"" + kind + "\"");
  }
  if (j.contains("notes")) o.text = j["notes"].get<std::string>() + "\n" + o.text;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifies representation claims for ternary quadratic forms and pentagonal sums"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int threads = 0;
  app.add_flag("--json", as_json, "Emit the machine-readable report");
  app.add_option("--threads", threads, "Worker cap (falls back to PENTAFORM_THREADS)")->check(CLI::PositiveNumber);

  std::function<Outcome()> action;

  auto* verify = app.add_subcommand("verify", "Check a pentagonal sum for every n up to a bound");
  std::string quad, mode = "both";
  Int bound = 10000;
  verify->add_option("--quadruple", quad, "a,b,c or k,a,b,c")->required();
  verify->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
  verify->add_option("--mode", mode)->check(CLI::IsMember({"oracle", "constructive", "both"}));
  verify->callback([&] {
    action = [&] {
      auto v = parse_list(quad);
      if (v.size() == 3) v.insert(v.begin(), 5);
      if (v.size() != 4) throw InputError("--quadruple takes a,b,c or k,a,b,c");
      return run_verify(Quadruple(v[0], v[1], v[2], v[3]), bound, parse_mode(mode));
    };
  });

  auto* t31 = app.add_subcommand("theorem31", "Exact represented set of <1> + [9,3;3,10]");
  Int t31_bound = 100000;
  t31->add_option("--bound", t31_bound)->check(CLI::PositiveNumber);
  t31->callback([&] { action = [&] { return run_exclusions(t31_bound); }; });

  auto* rset = app.add_subcommand("rset", "Residue classes x mod d with Q(x) = a mod d");
  std::string form_file;
  Int d = 1, a = 0;
  rset->add_option("--form", form_file)->required();
  rset->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  rset->add_option("--a", a)->required();
  rset->callback([&] { action = [&] { return run_rset(io::load_form(form_file), d, a); }; });

  auto* prec = app.add_subcommand("prec", "Check N prec_{d,a} M");
  std::string n_file, m_file, sigma_file;
  bool search = false;
  std::size_t cap = 1000000;
  prec->add_option("--n", n_file)->required();
  prec->add_option("--m", m_file)->required();
  prec->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  prec->add_option("--a", a)->required();
  auto* sig_opt = prec->add_option("--sigmas", sigma_file, "Isometry list file");
  prec->add_flag("--search", search, "Enumerate R(M,N,d) instead")->excludes(sig_opt);
  prec->add_option("--cap", cap, "Search cap");
  prec->callback([&] {
    action = [&] {
      if (sigma_file.empty() && !search) throw InputError("prec needs --sigmas FILE or --search");
      const auto n = io::load_form(n_file), m = io::load_form(m_file);
      if (search) return run_prec(n, m, d, a, nullptr, cap);
      const auto sigmas = io::load_isometries(sigma_file);
      return run_prec(n, m, d, a, &sigmas, cap);
    };
  });

  auto* descent = app.add_subcommand("descent", "Verify a descent certificate");
  std::string cert_file;
  Int gap_bound = 0;
  descent->add_option("--cert", cert_file)->required();
  descent->add_option("--gap-bound", gap_bound, "Also check represented values up to this bound")
      ->check(CLI::NonNegativeNumber);
  descent->callback([&] { action = [&] { return run_descent(io::load_descent(cert_file), gap_bound); }; });

  auto* genus = app.add_subcommand("genus", "Genus classes by neighbor closure");
  std::string primes;
  genus->add_option("--form", form_file)->required();
  genus->add_option("--primes", primes, "p1,p2 (default: two smallest odd primes not dividing det)");
  genus->callback([&] {
    action = [&] { return run_genus(io::load_form(form_file), primes.empty() ? std::vector<Int>{} : parse_list(primes), {}); };
  });

  auto* ids = app.add_subcommand("identities", "Symbolic check of the substitution identities");
  std::string label, corpus = std::string(PENTAFORM_DATA_DIR) + "/identities.json";
  bool no_mutations = false;
  ids->add_option("--case", label, "Label or group to check");
  ids->add_option("--corpus", corpus);
  ids->add_flag("--no-mutations", no_mutations, "Skip the coefficient mutation check");
  ids->callback([&] { action = [&] { return run_identities(corpus, label, !no_mutations); }; });

  auto* count = app.add_subcommand("count", "Number of representations r(V, form)");
  Int value = 0;
  count->add_option("--form", form_file)->required();
  count->add_option("--value", value)->required()->check(CLI::NonNegativeNumber);
  count->callback([&] { action = [&] { return run_count(io::load_form(form_file), value); }; });

  auto* check = app.add_subcommand("check", "Run any certificate file");
  check->add_option("--cert", cert_file)->required();
  check->callback([&] { action = [&] { return run_certificate(cert_file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("PENTAFORM_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::logic_error&) {
        std::cerr << "PENTAFORM_THREADS must be a positive integer\n";
        return 2;
      }
      if (threads < 1) {
        std::cerr << "PENTAFORM_THREADS must be a positive integer\n";
        return 2;
      }
    }
  }
  if (threads > 0) kernels::set_threads(threads);

  try {
    const Outcome o = action();
    if (as_json) {
      json out = {{"schema", io::kSchemaVersion}, {"ok", o.ok}, {"report", o.report}};
      std::cout << out.dump(1) << '\n';
    } else {
      std::cout << o.text << '\n';
    }
    return o.ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CertificateError& e) {
    std::cerr << "claim failed: " << e.what() << '\n';
    return 1;
  } catch (const io::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  }
}
