// sl2fd: command-line front end for the exact operator-algebra library.
//
// Exit codes: 0 result produced / all checks pass, 1 a mathematical check
// failed or the input is degenerate, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sl2fd/json_io.hpp"
#include "sl2fd/sl2fd.hpp"

namespace {

using sl2fd::Rational;
using sl2fd::io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Plain };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "plain") return Format::Plain;
  throw UsageError("unknown format '" + s + "' (expected json, csv or plain)");
}

Rational parse_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const sl2fd::ParseError&) {
    throw UsageError("--" + name + ": malformed rational '" + text + "' (expected p or p/q)");
  }
}

Rational nonzero_delta(const std::string& text) {
  Rational d = parse_flag("delta", text);
  if (d.is_zero()) throw UsageError("delta must be nonzero");
  return d;
}

sl2fd::HeisenbergRep parse_rep(const std::string& name, const Rational& delta) {
  if (name == "differential") return sl2fd::HeisenbergRep::differential();
  if (name == "difference") return sl2fd::HeisenbergRep::difference(delta);
  throw UsageError("unknown representation '" + name + "'");
}

struct Options {
  std::string format;
  std::string output;

  std::string rep = "difference";
  std::string delta = "1";
  int n = 0;
  int deg = 20;
  int kmax = 5;
  int k = 0;
  int dump_points = 0;
  bool umbral = false;

  std::map<std::string, std::string> coeff{{"A1", "0"}, {"A2", "0"}, {"A3", "0"},
                                           {"A4", "0"}, {"A5", "0"}, {"Aplus", "0"}};

  std::string family;
  std::map<std::string, std::optional<std::string>> family_flags{
      {"alpha", {}}, {"beta", {}}, {"N", {}}, {"mu", {}}, {"nu", {}}, {"gamma", {}}};
};

struct Output {
  std::string text;
  int code = kOk;
};

sl2fd::SolvableParams solvable_params(const Options& o) {
  return {parse_flag("A1", o.coeff.at("A1")), parse_flag("A2", o.coeff.at("A2")),
          parse_flag("A3", o.coeff.at("A3")), parse_flag("A4", o.coeff.at("A4")),
          parse_flag("A5", o.coeff.at("A5")), nonzero_delta(o.delta)};
}

sl2fd::QesParams qes_params(const Options& o) {
  sl2fd::SolvableParams p = solvable_params(o);
  if (o.n < 0) throw UsageError("--n must be non-negative");
  return {parse_flag("Aplus", o.coeff.at("Aplus")), p.a1, p.a2, p.a3, p.a4, p.a5, p.delta, o.n};
}

Rational family_flag(const Options& o, const std::string& name) {
  const auto& v = o.family_flags.at(name);
  if (!v) throw UsageError("family '" + o.family + "' requires --" + name);
  return parse_flag(name, *v);
}

sl2fd::FamilyPreset family_preset(const Options& o) {
  if (o.family == "hahn")
    return sl2fd::Hahn{family_flag(o, "alpha"), family_flag(o, "beta"), family_flag(o, "N")};
  if (o.family == "hahn-tilde")
    return sl2fd::HahnTilde{family_flag(o, "mu"), family_flag(o, "nu"), family_flag(o, "N")};
  if (o.family == "meixner")
    return sl2fd::Meixner{family_flag(o, "gamma"), family_flag(o, "mu")};
  if (o.family == "charlier") return sl2fd::Charlier{family_flag(o, "mu")};
  throw UsageError("unknown family '" + o.family +
                   "' (expected hahn, hahn-tilde, meixner or charlier)");
}

void require_json(Format f, const char* what) {
  if (f != Format::Json && f != Format::Plain)
    throw UsageError(std::string(what) + " output is available as json or plain only");
}

Json points(const sl2fd::Poly& p, int count) {
  Json out = Json::array();
  for (int x = 0; x < count; ++x) {
    Json pt;
    pt["x"] = std::to_string(x);
    pt["y"] = p(Rational(x)).str();
    out.push_back(pt);
  }
  return out;
}

std::string plain_checks(const sl2fd::CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------- subcommands

Output cmd_verify(const Options& o, Format f) {
  require_json(f, "verify");
  Rational delta = nonzero_delta(o.delta);
  auto rep = parse_rep(o.rep, delta);
  if (o.n < 0) throw UsageError("--n must be non-negative");
  if (o.deg < o.n + 3) throw UsageError("--deg must be at least n + 3");
  sl2fd::RelationReport rr = sl2fd::verify_relations(o.n, rep, o.deg);
  if (rep.is_difference()) {
    rr.report.add("explicit_generators", sl2fd::explicit_generators_match(delta));
    rr.report.add("delta_reflection", sl2fd::delta_reflection_holds(delta));
  }
  Output out;
  out.code = rr.report.passed() ? kOk : kCheckFailed;
  if (f == Format::Plain) {
    out.text = "rep " + rep.str() + ", n = " + std::to_string(o.n) + ", degree <= " +
               std::to_string(o.deg) + "\n" + plain_checks(rr.report);
  } else {
    out.text = sl2fd::io::to_json(rr).dump() + "\n";
  }
  return out;
}

Output cmd_spectrum(const Options& o, Format f) {
  if (o.kmax < 0) throw UsageError("--kmax must be non-negative");
  sl2fd::SolvableParams p = solvable_params(o);
  auto lambdas = sl2fd::spectrum(p, o.kmax);
  bool verified = true;
  for (const auto& rep : {sl2fd::HeisenbergRep::differential(),
                          sl2fd::HeisenbergRep::difference(p.delta)}) {
    auto m = sl2fd::matrix_in_basis(sl2fd::build_operator(p, rep), rep.natural_basis(), o.kmax);
    verified = verified && m.diagonal() == lambdas;
  }
  Output out;
  out.code = verified ? kOk : kCheckFailed;
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "k,lambda\n";
    for (std::size_t k = 0; k < lambdas.size(); ++k) os << k << "," << lambdas[k] << "\n";
  } else if (f == Format::Plain) {
    for (std::size_t k = 0; k < lambdas.size(); ++k)
      os << "lambda_" << k << " = " << lambdas[k] << "\n";
  } else {
    Json j;
    j["params"] = sl2fd::io::to_json(p);
    j["kmax"] = o.kmax;
    Json l = Json::array();
    for (const auto& v : lambdas) l.push_back(v.str());
    j["lambda"] = l;
    j["verified"] = verified;
    os << j.dump() << "\n";
  }
  out.text = os.str();
  return out;
}

Output cmd_eigenpoly(const Options& o, Format f) {
  require_json(f, "eigenpoly");
  if (o.kmax < 0) throw UsageError("--kmax must be non-negative");
  sl2fd::SolvableParams p = solvable_params(o);
  auto rep = parse_rep(o.rep, p.delta);
  sl2fd::SpectralResult r = sl2fd::eigenpolys(p, rep, o.kmax);
  Output out;
  if (f == Format::Plain) {
    std::ostringstream os;
    for (const auto& e : r.entries)
      os << "k=" << e.k << "  lambda=" << e.lambda << "  " << e.eigenpoly.str() << "\n";
    out.text = os.str();
    return out;
  }
  Json j = sl2fd::io::to_json(r, p);
  if (o.dump_points > 0)
    for (std::size_t i = 0; i < r.entries.size(); ++i)
      j["entries"][i]["points"] = points(r.entries[i].eigenpoly, o.dump_points);
  out.text = j.dump() + "\n";
  return out;
}

Output cmd_family(const Options& o, Format f) {
  require_json(f, "family");
  if (o.k < 0) throw UsageError("--k must be non-negative");
  auto preset = family_preset(o);
  auto [poly, lambda] = sl2fd::family_polynomial(preset, o.k);
  Output out;
  if (f == Format::Plain) {
    out.text = sl2fd::family_name(preset) + " k=" + std::to_string(o.k) +
               "  lambda=" + lambda.str() + "  " + poly.str() + "\n";
    return out;
  }
  Json j;
  j["k"] = o.k;
  j["lambda"] = lambda.str();
  j["poly"] = sl2fd::io::coeff_array(poly);
  if (o.dump_points > 0) j["points"] = points(poly, o.dump_points);
  out.text = j.dump() + "\n";
  return out;
}

Output cmd_factor(const Options& o, Format f) {
  require_json(f, "factor");
  auto preset = family_preset(o);
  if (!std::holds_alternative<sl2fd::Hahn>(preset) &&
      !std::holds_alternative<sl2fd::HahnTilde>(preset))
    throw UsageError("factor applies to hahn and hahn-tilde only");
  Rational n = family_flag(o, "N");
  if (!n.is_integer() || n < Rational(1)) throw UsageError("--N must be a positive integer");
  if (Rational(o.k) < n) throw UsageError("--k must be at least N");
  Output out;
  sl2fd::Factorization fac;
  try {
    fac = sl2fd::hahn_factorization_full(preset, o.k);
  } catch (const sl2fd::NonzeroRemainder& e) {
    Json j;
    j["error"] = "NonzeroRemainder";
    j["message"] = e.what();
    return {j.dump() + "\n", kCheckFailed};
  }
  if (f == Format::Plain) {
    out.text = fac.polynomial.str() + " = x^(" + n.str() + ") * (" + fac.quotient.str() + ")\n";
    return out;
  }
  Json j;
  j["k"] = o.k;
  j["N"] = n.str();
  j["poly"] = sl2fd::io::coeff_array(fac.polynomial);
  j["quotient"] = sl2fd::io::coeff_array(fac.quotient);
  j["remainder"] = sl2fd::io::coeff_array(fac.remainder);
  out.text = j.dump() + "\n";
  return out;
}

Output cmd_isospectral(const Options& o, Format f) {
  require_json(f, "isospectral");
  if (o.kmax < 0) throw UsageError("--kmax must be non-negative");
  sl2fd::SolvableParams p = solvable_params(o);
  sl2fd::CheckReport r = sl2fd::isospectral_check(p, o.kmax);
  if (o.umbral) {
    sl2fd::CheckReport u = sl2fd::umbral_transfer_check(p, o.kmax);
    r.checks.insert(r.checks.end(), u.checks.begin(), u.checks.end());
  }
  Output out;
  out.code = r.passed() ? kOk : kCheckFailed;
  if (f == Format::Plain) {
    out.text = plain_checks(r);
    return out;
  }
  Json j;
  j["params"] = sl2fd::io::to_json(p);
  j["kmax"] = o.kmax;
  Json diag = Json::array();
  for (const auto& v : sl2fd::spectrum(p, o.kmax)) diag.push_back(v.str());
  j["diagonal"] = diag;
  j["checks"] = sl2fd::io::to_json(r);
  j["pass"] = r.passed();
  out.text = j.dump() + "\n";
  return out;
}

Output cmd_qes(const Options& o, Format f) {
  sl2fd::QesParams qp = qes_params(o);
  Output out;
  if (f == Format::Csv) {
    sl2fd::MatrixQ m = sl2fd::invariant_block(qp, sl2fd::HeisenbergRep::difference(qp.delta));
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
      os << "\n";
    }
    out.text = os.str();
    return out;
  }
  sl2fd::QesSpectrum s = sl2fd::qes_spectrum(qp);
  bool iso = sl2fd::qes_isospectral_check(qp);
  bool three_point = sl2fd::three_point_check(qp);
  out.code = iso && three_point ? kOk : kCheckFailed;
  if (f == Format::Plain) {
    std::ostringstream os;
    os << "char poly: " << s.charpoly.str("t") << "\n";
    for (const auto& z : s.roots) os << "root " << z.real() << " " << z.imag() << "i\n";
    os << "isospectral: " << (iso ? "yes" : "no") << "\n";
    os << "three-point: " << (three_point ? "yes" : "no") << "\n";
    out.text = os.str();
    return out;
  }
  out.text = sl2fd::io::to_json(s, iso).dump() + "\n";
  return out;
}

void add_solvable_flags(CLI::App* sub, Options& o) {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5"})
    sub->add_option(std::string("--") + name, o.coeff[name], std::string("coefficient ") + name);
  sub->add_option("--delta", o.delta, "lattice step (rational, nonzero)");
}

void add_family_flags(CLI::App* sub, Options& o) {
  sub->add_option("--name", o.family, "hahn | hahn-tilde | meixner | charlier")->required();
  for (auto& [name, value] : o.family_flags) {
    auto* opt = sub->add_option_function<std::string>(
        "--" + name, [&value = value](const std::string& v) { value = v; },
        "family parameter (rational)");
    (void)opt;
  }
  sub->add_option("--k", o.k, "degree");
}

int emit(const Output& out, const Options& o) {
  if (o.output.empty() || o.output == "-") {
    std::cout << out.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << o.output << " for writing\n";
      return kUsage;
    }
    file << out.text;
  }
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-difference and differential sl2 operator toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  const char* env_format = std::getenv("SL2FD_FORMAT");
  o.format = env_format && *env_format ? env_format : "json";
  app.add_option("--format", o.format, "json | csv | plain (default: $SL2FD_FORMAT or json)");
  app.add_option("--output,-o", o.output, "write result to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check Heisenberg and sl2 relations");
  verify->add_option("--rep", o.rep, "differential | difference");
  verify->add_option("--delta", o.delta, "lattice step (rational, nonzero)");
  verify->add_option("--n", o.n, "representation label");
  verify->add_option("--deg", o.deg, "highest monomial degree checked");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the exactly-solvable operator");
  add_solvable_flags(spectrum, o);
  spectrum->add_option("--kmax", o.kmax, "highest degree");

  auto* eigenpoly = app.add_subcommand("eigenpoly", "monic eigenpolynomials");
  add_solvable_flags(eigenpoly, o);
  eigenpoly->add_option("--rep", o.rep, "differential | difference");
  eigenpoly->add_option("--kmax", o.kmax, "highest degree");
  eigenpoly->add_option("--dump-points", o.dump_points, "emit x,f(x) for x = 0..count-1");

  auto* family = app.add_subcommand("family", "eigenpolynomial of a named family");
  add_family_flags(family, o);
  family->add_option("--dump-points", o.dump_points, "emit x,f(x) for x = 0..count-1");

  auto* factor = app.add_subcommand("factor", "divide a higher Hahn polynomial by x^(N)");
  add_family_flags(factor, o);

  auto* iso = app.add_subcommand("isospectral", "compare difference and differential spectra");
  add_solvable_flags(iso, o);
  iso->add_option("--kmax", o.kmax, "highest degree");
  iso->add_flag("--umbral", o.umbral, "also check the umbral transfer of eigenpolynomials");

  auto* qes = app.add_subcommand("qes", "quasi-exactly-solvable invariant block");
  add_solvable_flags(qes, o);
  qes->add_option("--Aplus", o.coeff["Aplus"], "coefficient of the raising part");
  qes->add_option("--n", o.n, "representation label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Format f = parse_format(o.format);
    Output out;
    if (verify->parsed()) out = cmd_verify(o, f);
    if (spectrum->parsed()) out = cmd_spectrum(o, f);
    if (eigenpoly->parsed()) out = cmd_eigenpoly(o, f);
    if (family->parsed()) out = cmd_family(o, f);
    if (factor->parsed()) out = cmd_factor(o, f);
    if (iso->parsed()) out = cmd_isospectral(o, f);
    if (qes->parsed()) out = cmd_qes(o, f);
    return emit(out, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sl2fd::DegenerateSpectrum& e) {
    Json j;
    j["error"] = "DegenerateSpectrum";
    j["low"] = e.low;
    j["high"] = e.high;
    j["message"] = e.what();
    return emit({j.dump() + "\n", kCheckFailed}, o);
  } catch (const sl2fd::Error& e) {
    Json j;
    j["error"] = "CheckFailed";
    j["message"] = e.what();
    return emit({j.dump() + "\n", kCheckFailed}, o);
  }
}
