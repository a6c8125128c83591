#pragma once

#include <nlohmann/json.hpp>

#include "sl2fd/families.hpp"
#include "sl2fd/qes.hpp"
#include "sl2fd/sl2.hpp"
#include "sl2fd/solvable.hpp"

namespace sl2fd::io {

/// Key order is insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Plain coefficient array, lowest degree first.
Json coeff_array(const Poly& p);
/// {"basis":"monomial","coeffs":[...]} or {"basis":"falling","delta":"1/2","coeffs":[...]}.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"delta":"1","terms":[{"shift":-1,"coeff":[...]}, ...]}, shifts ascending.
Json to_json(const ShiftOp& op);
ShiftOp shift_op_from_json(const Json& j);
/// {"coeffs":[[...],[...]]}.
Json to_json(const DiffOp& op);
DiffOp diff_op_from_json(const Json& j);
Json to_json(const Operator& op);

/// Row-major nested array of rational strings.
Json to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const Json& j);

Json to_json(const CheckReport& r);
/// {"checks":[...],"n":...,"rep":"...","delta":"..."|null}.
Json to_json(const RelationReport& r);

Json to_json(const SolvableParams& p);
/// {"params":{...},"rep":"difference","entries":[{"k":1,"lambda":"-2","poly":["-1","1"]}]}.
Json to_json(const SpectralResult& r, const SolvableParams& p);

Json to_json(const FamilyPreset& f);

/// {"n":1,"charpoly":[...],"roots":[{"re":..,"im":..}],"isospectral":true}.
Json to_json(const QesSpectrum& s, bool isospectral);

}  // namespace sl2fd::io
