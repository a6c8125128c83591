#include "sl2fd/json_io.hpp"

#include "sl2fd/errors.hpp"

namespace sl2fd::io {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json coeff_array(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

namespace {

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Poly monomial_from(const Json& j) {
  if (j.is_object()) return change_basis(poly_from_json(j), Basis::monomial());
  return Poly(rationals_from(j));
}

}  // namespace

Json to_json(const Poly& p) {
  Json j;
  if (p.basis().is_monomial()) {
    j["basis"] = "monomial";
  } else {
    j["basis"] = "falling";
    j["delta"] = p.basis().delta().str();
  }
  j["coeffs"] = coeff_array(p);
  return j;
}

Poly poly_from_json(const Json& j) {
  try {
    std::string basis = j.at("basis").get<std::string>();
    std::vector<Rational> coeffs = rationals_from(j.at("coeffs"));
    if (basis == "monomial") return Poly(std::move(coeffs));
    if (basis == "falling")
      return Poly(std::move(coeffs), Basis::falling(rational_from_json(j.at("delta"))));
    throw ParseError("unknown basis '" + basis + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

Json to_json(const ShiftOp& op) {
  Json j;
  j["delta"] = op.delta().str();
  Json terms = Json::array();
  for (const auto& [s, p] : op.terms()) {
    Json t;
    t["shift"] = s;
    t["coeff"] = coeff_array(p);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

ShiftOp shift_op_from_json(const Json& j) {
  try {
    ShiftOp::Terms terms;
    for (const auto& t : j.at("terms")) terms[t.at("shift").get<int>()] += monomial_from(t.at("coeff"));
    return ShiftOp(rational_from_json(j.at("delta")), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad shift operator JSON: ") + e.what());
  }
}

Json to_json(const DiffOp& op) {
  Json coeffs = Json::array();
  for (const auto& p : op.coeffs()) coeffs.push_back(coeff_array(p));
  Json j;
  j["coeffs"] = coeffs;
  return j;
}

DiffOp diff_op_from_json(const Json& j) {
  try {
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(monomial_from(c));
    return DiffOp(std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad differential operator JSON: ") + e.what());
  }
}

Json to_json(const Operator& op) {
  return op.is_shift() ? to_json(op.as_shift()) : to_json(op.as_diff());
}

Json to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

MatrixQ matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(rationals_from(r));
  try {
    return MatrixQ::from_rows(rows);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json o;
    o["name"] = c.name;
    o["pass"] = c.pass;
    if (!c.pass && !c.detail.empty()) o["detail"] = c.detail;
    checks.push_back(o);
  }
  return checks;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["checks"] = to_json(r.report);
  j["n"] = r.n;
  j["rep"] = r.rep.name();
  j["delta"] = r.rep.is_difference() ? Json(r.rep.delta().str()) : Json(nullptr);
  return j;
}

Json to_json(const SolvableParams& p) {
  Json j;
  j["A1"] = p.a1.str();
  j["A2"] = p.a2.str();
  j["A3"] = p.a3.str();
  j["A4"] = p.a4.str();
  j["A5"] = p.a5.str();
  j["delta"] = p.delta.str();
  return j;
}

Json to_json(const SpectralResult& r, const SolvableParams& p) {
  Json j;
  j["params"] = to_json(p);
  j["rep"] = r.rep.name();
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json o;
    o["k"] = e.k;
    o["lambda"] = e.lambda.str();
    o["poly"] = coeff_array(e.eigenpoly);
    entries.push_back(o);
  }
  j["entries"] = entries;
  return j;
}

Json to_json(const FamilyPreset& f) {
  Json j;
  j["name"] = family_name(f);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Hahn>) {
          j["alpha"] = v.alpha.str();
          j["beta"] = v.beta.str();
          j["N"] = v.N.str();
        } else if constexpr (std::is_same_v<T, HahnTilde>) {
          j["mu"] = v.mu.str();
          j["nu"] = v.nu.str();
          j["N"] = v.N.str();
        } else if constexpr (std::is_same_v<T, Meixner>) {
          j["gamma"] = v.gamma.str();
          j["mu"] = v.mu.str();
        } else {
          j["mu"] = v.mu.str();
        }
      },
      f);
  return j;
}

Json to_json(const QesSpectrum& s, bool isospectral) {
  Json j;
  j["n"] = s.n;
  j["charpoly"] = coeff_array(s.charpoly);
  Json roots = Json::array();
  for (const auto& z : s.roots) {
    Json r;
    r["re"] = z.real();
    r["im"] = z.imag();
    roots.push_back(r);
  }
  j["roots"] = roots;
  j["isospectral"] = isospectral;
  return j;
}

}  // namespace sl2fd::io
