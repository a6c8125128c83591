#pragma once

#include "sl2fd/errors.hpp"
#include "sl2fd/expr.hpp"
#include "sl2fd/families.hpp"
#include "sl2fd/matrix.hpp"
#include "sl2fd/operators.hpp"
#include "sl2fd/poly.hpp"
#include "sl2fd/qes.hpp"
#include "sl2fd/rational.hpp"
#include "sl2fd/report.hpp"
#include "sl2fd/sl2.hpp"
#include "sl2fd/solvable.hpp"
