#include "cli.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modsym/arith.hpp"
#include "modsym/catalog.hpp"
#include "modsym/drinfeld.hpp"
#include "modsym/errors.hpp"
#include "modsym/galois.hpp"
#include "modsym/moddata.hpp"
#include "modsym/numtheory.hpp"
#include "modsym/reps.hpp"
#include "modsym/sl2.hpp"

namespace modsym::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kDisplayNote = "numeric values are display only; all verdicts use exact arithmetic";

struct Outcome {
  Json doc;
  std::string text;
  bool ok = true;
};

ModularData load(const std::string& input) {
  for (const auto& name : builtin_names())
    if (name == input) return builtin(name);
  if (!std::filesystem::exists(input)) throw InvalidInput("'" + input + "' is neither a builtin nor a readable file");
  return read(input);
}

/// z written over the smallest cyclotomic field containing it.
CycloNum minimal_form(const CycloNum& z) {
  for (std::int64_t d : nt::divisors(z.order()))
    if (in_subfield(z, static_cast<int>(d))) return demote(z, static_cast<int>(d));
  return z;
}

std::string exact(const CycloNum& z) { return minimal_form(z).to_string(); }

std::string approx(const CycloNum& z) {
  const std::complex<double> v = numeric(z);
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  const double re = std::abs(v.real()) < 5e-7 ? 0.0 : v.real();
  const double im = std::abs(v.imag()) < 5e-7 ? 0.0 : v.imag();
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  }
  return os.str();
}

Json number_json(const CycloNum& z) { return Json{{"exact", exact(z)}, {"display", approx(z)}}; }

std::string root_string(const RootOfUnity& r) { return r.to_string(); }

std::string mark(bool ok) { return ok ? "ok" : "FAIL"; }

Json checks_json(const CheckList& checks) {
  Json out = Json::array();
  for (const auto& c : checks.items) {
    Json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(std::move(item));
  }
  return out;
}

std::string checks_text(const CheckList& checks, const std::string& indent = "  ") {
  std::ostringstream os;
  for (const auto& c : checks.items) {
    os << indent << std::left << std::setw(30) << c.name << mark(c.passed);
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const ModularData& data) {
  Outcome o;
  const CheckList checks = validate(data);
  o.ok = checks.ok();
  o.doc = Json{{"command", "validate"}, {"name", data.name()}, {"passed", o.ok}, {"checks", checks_json(checks)}};
  o.text = "validate " + data.name() + "\n" + checks_text(checks) + (o.ok ? "all axioms hold\n" : "failed: " + checks.failures() + "\n");
  return o;
}

Outcome cmd_info(const ModularData& data) {
  Outcome o;
  const DerivedInvariants& inv = data.derived();
  const Rational c = central_charge(data);
  Json dims = Json::array();
  for (const auto& d : inv.dims) dims.push_back(number_json(d));
  o.doc = Json{{"command", "info"},
               {"name", data.name()},
               {"rank", data.rank()},
               {"ambient", data.ambient()},
               {"dims", dims},
               {"dual", inv.dual},
               {"global_dim", number_json(inv.global_dim)},
               {"gauss_plus", number_json(inv.gauss_plus)},
               {"gauss_minus", number_json(inv.gauss_minus)},
               {"anomaly", {{"root", root_string(inv.anomaly)}, {"order", inv.anomaly.multiplicative_order()}}},
               {"fsexp", inv.fsexp},
               {"central_charge", c.get_str()},
               {"note", kDisplayNote}};
  std::ostringstream os;
  os << "name: " << data.name() << "\n";
  os << "rank: " << data.rank() << ", ambient field Q(zeta_" << data.ambient() << ")\n";
  for (std::size_t i = 0; i < inv.dims.size(); ++i)
    os << "d_" << i << " = " << exact(inv.dims[i]) << "   ~ " << approx(inv.dims[i]) << "\n";
  os << "dual: " << join(inv.dual) << "\n";
  os << "dim = " << exact(inv.global_dim) << "   ~ " << approx(inv.global_dim) << "\n";
  os << "p+ = " << exact(inv.gauss_plus) << "   ~ " << approx(inv.gauss_plus) << "\n";
  os << "p- = " << exact(inv.gauss_minus) << "   ~ " << approx(inv.gauss_minus) << "\n";
  os << "alpha = " << root_string(inv.anomaly) << ", ord(alpha) = " << inv.anomaly.multiplicative_order() << "\n";
  os << "N = " << inv.fsexp << "\n";
  os << "c = " << c.get_str() << " (mod 8)\n";
  os << "(" << kDisplayNote << ")\n";
  o.text = os.str();
  return o;
}

Outcome cmd_fusion(const ModularData& data) {
  Outcome o;
  const FusionTensor n = verlinde(data);
  const int r = data.rank();
  Json table = Json::array();
  std::ostringstream os;
  os << "fusion rules of " << data.name() << " (N_ij^k)\n";
  for (int i = 0; i < r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < r; ++j) {
      Json cell = Json::array();
      std::vector<std::string> terms;
      for (int k = 0; k < r; ++k) {
        cell.push_back(n(i, j, k));
        if (n(i, j, k) == 1) terms.push_back(std::to_string(k));
        else if (n(i, j, k) > 1) terms.push_back(std::to_string(n(i, j, k)) + "*" + std::to_string(k));
      }
      row.push_back(std::move(cell));
      os << "  " << i << " x " << j << " = " << (terms.empty() ? "(nothing)" : join(terms, " + ")) << "\n";
    }
    table.push_back(std::move(row));
  }
  o.doc = Json{{"command", "fusion"}, {"name", data.name()}, {"fusion", table}};
  o.text = os.str();
  return o;
}

struct LiftingRow {
  int index;
  std::int64_t x_exponent;
  int level;
  int sgn_s;
  bool rational;
  bool relations;
};

LiftingRow lifting_row(int index, const ModularRep& rep) {
  const Matrix s = rep.s_level;
  const Matrix t = rep.t_matrix();
  const Matrix s2 = s * s;
  const Matrix st = s * t;
  const Matrix c = rep.charge_conj();
  const bool relations = (s2 * s2).is_identity() && st * st * st == s2 &&
                         s2 == (rep.sgn_s > 0 ? c : c.scaled(CycloNum::integer(c.order(), -1)));
  return {index, rep.x.with_order(12).exponent(), rep.level, rep.sgn_s, rationality_check(rep), relations};
}

Outcome cmd_liftings(const ModularData& data) {
  Outcome o;
  const auto reps = all_liftings(data);
  Json rows = Json::array();
  std::ostringstream os;
  os << "liftings of " << data.name() << " (zeta0 = " << root_string(reps.front().zeta) << ")\n";
  os << "  index  x=zeta12^k  level  sgn_s  rational  relations\n";
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    const LiftingRow r = lifting_row(i, reps[i]);
    o.ok = o.ok && r.rational && r.relations;
    rows.push_back(Json{{"index", r.index},
                        {"x_exponent", r.x_exponent},
                        {"level", r.level},
                        {"sgn_s", r.sgn_s},
                        {"rational", r.rational},
                        {"relations", r.relations}});
    os << "  " << std::setw(5) << r.index << "  " << std::setw(10) << r.x_exponent << "  " << std::setw(5) << r.level
       << "  " << std::setw(5) << (r.sgn_s > 0 ? "+1" : "-1") << "  " << std::setw(8) << mark(r.rational) << "  "
       << mark(r.relations) << "\n";
  }
  o.doc = Json{{"command", "liftings"},
               {"name", data.name()},
               {"zeta0", root_string(reps.front().zeta)},
               {"liftings", rows}};
  o.text = os.str();
  return o;
}

Json certificate_json(const LevelCertificate& c) {
  return Json{{"n", c.n},
              {"group_order", c.group_order},
              {"visited", c.visited},
              {"collisions_checked", c.collisions_checked},
              {"mismatches", c.mismatches},
              {"t_order_is_n", c.t_order_is_n},
              {"mode", c.mode == CertifyMode::Full ? "full" : "fingerprint"},
              {"passed", c.passed},
              {"reasoning", c.reasoning}};
}

Outcome cmd_level(const ModularData& data, bool certify, bool fast) {
  Outcome o;
  const auto reps = all_liftings(data);
  Json rows = Json::array();
  std::ostringstream os;
  os << "levels of the liftings of " << data.name() << "\n";
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    Json row{{"index", i}, {"level", level(reps[i])}};
    os << "lifting " << i << ": level " << reps[i].level << "\n";
    if (certify) {
      const LevelCertificate c = certify_level(reps[i], fast ? CertifyMode::Fingerprint : CertifyMode::Full);
      o.ok = o.ok && c.passed;
      row["certificate"] = certificate_json(c);
      os << "  certificate: " << (c.passed ? "PASS" : "FAIL") << "\n";
      os << "    n = " << c.n << ", group order = " << c.group_order << ", visited = " << c.visited
         << ", collisions checked = " << c.collisions_checked << ", mismatches = " << c.mismatches
         << ", ord(t) = n: " << (c.t_order_is_n ? "yes" : "no")
         << ", mode = " << (c.mode == CertifyMode::Full ? "full" : "fingerprint") << "\n";
      for (const auto& line : c.reasoning) os << "    - " << line << "\n";
    }
    rows.push_back(std::move(row));
  }
  o.doc = Json{{"command", "level"}, {"name", data.name()}, {"certify", certify}, {"liftings", rows}};
  o.text = os.str();
  return o;
}

Outcome cmd_galois(const ModularData& data, std::optional<std::int64_t> residue, int lifting) {
  Outcome o;
  const auto reps = all_liftings(data);
  if (lifting < 0 || lifting >= static_cast<int>(reps.size())) throw InvalidInput("--lifting must be in 0..11");
  const ModularRep& rep = reps[lifting];
  const std::int64_t n = rep.level;
  std::vector<std::int64_t> residues;
  if (residue) {
    const std::int64_t a = nt::mod(*residue, n);
    if (std::gcd(a, n) != 1) throw InvalidInput("--a " + std::to_string(*residue) + " is not a unit mod " + std::to_string(n));
    residues.push_back(n == 1 ? 0 : a);
  } else {
    residues = nt::units(n);
  }
  Json rows = Json::array();
  std::ostringstream os;
  os << "Galois symmetry of lifting " << lifting << " of " << data.name() << " (level " << n << ", zeta = "
     << root_string(rep.zeta) << ")\n";
  os << "  checks: galois_t, galois_action, conjugation, t_permutation, word_formula, word_square\n";
  for (std::int64_t a : residues) {
    const GaloisReport r = verify_symmetry(rep, a);
    o.ok = o.ok && r.ok();
    Json marks = Json::object();
    std::string marks_text;
    for (const auto& c : r.checks.items) {
      marks[c.name] = c.passed;
      marks_text += (c.passed ? " ok" : " FAIL");
    }
    rows.push_back(Json{{"a", a}, {"b", r.b}, {"sigma_hat", r.g.cycles()}, {"signs", r.g.signs}, {"checks", marks}});
    std::vector<std::string> signs;
    for (int s : r.g.signs) signs.push_back(s > 0 ? "+" : "-");
    os << "  a = " << std::setw(4) << a << "  sigma_hat = " << std::setw(14) << std::left << r.g.cycles() << std::right
       << "  eps = (" << join(signs, ",") << ")" << marks_text << "\n";
  }
  o.doc = Json{{"command", "galois"}, {"name", data.name()}, {"lifting", lifting}, {"level", n},
               {"zeta", root_string(rep.zeta)}, {"residues", rows}};
  if (!residue) {
    const bool hom = homomorphism_check(rep);
    o.ok = o.ok && hom;
    o.doc["homomorphism"] = hom;
    os << "  homomorphism G_{aa'} = G_a G_a': " << mark(hom) << "\n";
    const TTildeReport tt = ttilde_symmetry(data);
    o.doc["ttilde"] = Json{{"zeta", root_string(tt.zeta)},
                           {"unit_twist_trivial", tt.unit_twist_trivial},
                           {"ttilde_symmetric", tt.ttilde_symmetric},
                           {"alpha_order_divides_4", tt.alpha_order_divides_4}};
    os << "  normalized twists: theta_p(0) = 1 for all a: " << (tt.unit_twist_trivial ? "yes" : "no")
       << "; symmetric: " << (tt.ttilde_symmetric ? "yes" : "no")
       << "; alpha^4 = 1: " << (tt.alpha_order_divides_4 ? "yes" : "no") << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_double(const ModularData& data, bool verify) {
  Outcome o;
  if (!verify) {
    const DoubledData dd = drinfeld_double(data);
    o.text = to_json(dd.data);
    o.doc = Json::parse(o.text);
    return o;
  }
  const DoubleSymmetryReport r = verify_double_symmetry(data);
  o.ok = r.ok();
  Json gs = Json::array();
  std::ostringstream os;
  os << "double of " << data.name() << " (N = " << r.n << ")\n" << checks_text(r.checks);
  for (const auto& [a, g] : r.g) {
    gs.push_back(Json{{"a", a}, {"sigma_hat", g.cycles()}, {"signs", g.signs}});
    os << "  a = " << std::setw(4) << a << "  sigma_hat = " << g.cycles() << "\n";
  }
  o.doc = Json{{"command", "double"}, {"name", data.name()}, {"n", r.n}, {"checks", checks_json(r.checks)}, {"g", gs}};
  o.text = os.str();
  return o;
}

Outcome cmd_anomaly(const ModularData& data) {
  Outcome o;
  const AnomalyReport r = anomaly_checks(data);
  const Rational c = central_charge(data);
  o.ok = r.ok();
  o.doc = Json{{"command", "anomaly"},
               {"name", data.name()},
               {"class", to_string(r.integrality.kind)},
               {"ord_alpha", r.ord_alpha},
               {"j", r.j},
               {"central_charge", c.get_str()},
               {"fsexp", r.fsexp},
               {"checks", checks_json(r.checks)},
               {"prime_support", r.prime_support}};
  std::ostringstream os;
  os << "anomaly of " << data.name() << "\n";
  os << "  class: " << to_string(r.integrality.kind) << "\n";
  os << "  ord(alpha) = " << r.ord_alpha << ", J = " << (r.j > 0 ? "+1" : "-1") << ", c = " << c.get_str()
     << " (mod 8), N = " << r.fsexp << "\n";
  if (r.fsexp % 4 != 0) {
    const CycloNum w = sqrt_witness(data);
    o.doc["sqrt_witness"] = number_json(w);
    os << "  witness w in Q(zeta_N) with w^2 = J dim: w = " << exact(w) << "   ~ " << approx(w) << "\n";
  }
  os << checks_text(r.checks);
  os << "  " << r.prime_support << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_report(const ModularData& data, bool fast) {
  Outcome o;
  const Outcome v = cmd_validate(data);
  o.doc = Json{{"command", "report"}, {"name", data.name()}, {"validate", v.doc}};
  std::ostringstream os;
  os << "report for " << data.name() << "\n";
  os << "  validate: " << mark(v.ok) << "\n";
  o.ok = v.ok;
  if (v.ok) {
    auto section = [&](const std::string& key, const Outcome& s) {
      o.doc[key] = s.doc;
      o.ok = o.ok && s.ok;
      os << "  " << key << ": " << mark(s.ok) << "\n";
    };
    section("info", cmd_info(data));
    section("fusion", cmd_fusion(data));
    section("liftings", cmd_liftings(data));
    section("level", cmd_level(data, true, fast));
    section("galois", cmd_galois(data, std::nullopt, 0));
    section("double", cmd_double(data, true));
    section("anomaly", cmd_anomaly(data));
    Json sub = Json::array();
    bool sub_ok = true;
    for (const auto& rep : all_liftings(data)) {
      const SubfieldReport s = subfield_report(rep);
      sub_ok = sub_ok && s.ok();
      sub.push_back(Json{{"level", s.n}, {"conductor", s.conductor}, {"checks", checks_json(s.checks)}});
    }
    o.doc["subfields"] = sub;
    o.ok = o.ok && sub_ok;
    os << "  subfields: " << mark(sub_ok) << "\n";
  }
  o.doc["passed"] = o.ok;
  os << (o.ok ? "all checks pass\n" : "some checks failed\n");
  o.text = os.str();
  return o;
}

Outcome cmd_catalog() {
  Outcome o;
  Json entries = Json::array();
  std::ostringstream os;
  os << "  name        rank  N    ord(alpha)  c\n";
  for (const auto& name : builtin_names()) {
    const CatalogEntry e = catalog_entry(name);
    entries.push_back(Json{{"name", name},
                           {"rank", e.data.rank()},
                           {"fsexp", e.expected.fsexp},
                           {"ord_alpha", e.expected.ord_alpha},
                           {"central_charge", e.expected.central_charge.get_str()}});
    os << "  " << std::left << std::setw(12) << name << std::right << std::setw(4) << e.data.rank() << "  "
       << std::setw(3) << e.expected.fsexp << "  " << std::setw(10) << e.expected.ord_alpha << "  "
       << e.expected.central_charge.get_str() << "\n";
  }
  o.doc = Json{{"command", "catalog"}, {"builtins", entries}};
  o.text = os.str();
  return o;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Outcome o;
    if (config.command == "catalog") {
      o = cmd_catalog();
    } else {
      const ModularData data = load(config.input);
      if (config.command == "validate") o = cmd_validate(data);
      else if (config.command == "info") o = cmd_info(data);
      else if (config.command == "fusion") o = cmd_fusion(data);
      else if (config.command == "liftings") o = cmd_liftings(data);
      else if (config.command == "level") o = cmd_level(data, config.certify, config.fast);
      else if (config.command == "galois") o = cmd_galois(data, config.residue, config.lifting);
      else if (config.command == "double") o = cmd_double(data, config.verify_symmetry);
      else if (config.command == "anomaly") o = cmd_anomaly(data);
      else if (config.command == "report") o = cmd_report(data, config.fast);
      else throw InvalidInput("unknown command '" + config.command + "'");
    }
    if (config.format == Format::Json && !(config.command == "double" && !config.verify_symmetry))
      out << o.doc.dump(2) << "\n";
    else
      out << o.text;
    if (!o.ok) {
      err << config.command << ": checks failed";
      if (o.doc.contains("checks") && o.doc["checks"].is_array()) {
        std::vector<std::string> failed;
        for (const auto& c : o.doc["checks"])
          if (!c["passed"].get<bool>()) failed.push_back(c["name"].get<std::string>());
        if (!failed.empty()) err << ": " << join(failed, ", ");
      }
      err << "\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotModular& e) {
    err << "not modular data: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const TheoremViolation& e) {
    err << "theorem violated: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular data, SL2(Z) representations and Galois symmetry"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto with_input = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", config.input, "Builtin name or path to a modular data file")->required();
    return sub;
  };
  with_input("validate", "Check the modular data axioms");
  with_input("info", "Derived invariants and central charge");
  with_input("fusion", "Fusion rules from the Verlinde formula");
  with_input("liftings", "The twelve modular representations");
  CLI::App* level_cmd = with_input("level", "Levels of the liftings");
  level_cmd->add_flag("--certify", config.certify, "Certify each level by exhaustive search over SL2(Z/n)");
  level_cmd->add_flag("--fast", config.fast, "Store SHA-256 fingerprints instead of matrices");
  CLI::App* galois_cmd = with_input("galois", "Galois symmetry checks");
  bool all = false;
  std::int64_t residue = 0;
  auto* all_opt = galois_cmd->add_flag("--all", all, "All residues (default)");
  galois_cmd->add_option("--a", residue, "A single residue")->excludes(all_opt);
  galois_cmd->add_option("--lifting", config.lifting, "Lifting index 0..11")->capture_default_str();
  CLI::App* double_cmd = with_input("double", "Emit the Drinfeld double");
  double_cmd->add_flag("--verify-symmetry", config.verify_symmetry, "Verify the Galois symmetry of the double");
  with_input("anomaly", "Anomaly arithmetic");
  CLI::App* report_cmd = with_input("report", "Everything");
  report_cmd->add_flag("--fast", config.fast, "Fingerprint mode for level certificates");
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Builtin catalog");
  std::string action;
  catalog_cmd->add_option("action", action, "list")->required()->check(CLI::IsMember({"list"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::Json : Format::Text;
  if (galois_cmd->parsed() && galois_cmd->count("--a") > 0) config.residue = residue;
  return run(config, out, err);
}

}  // namespace modsym::cli
