#pragma once

// JSON forms shared by the CLI and any downstream consumer.
//
// Polynomial:
//   {"universe": {"n_x": 2, "n_y": 3},
//    "terms": [{"coeff": "-3", "exps": {"b": 1, "x1": 2, "y3": 1}}, ...]}
//   Terms in canonical (descending graded-lex) order; coefficients are
//   decimal strings; zero exponents are omitted.
// Tableau:
//   {"shape": [2, 1], "fill": [[1, 1, [1]], [1, 2, [1, 2]], [2, 1, [2]]]}
//   Cells in row-major order as [row, col, entries].
// RationalPoint:
//   {"b": "1/2", "x": ["3", "-1/4"], "y": ["2"]}

#include "json.hpp"

#include "groth/poly.hpp"
#include "groth/tableaux.hpp"

namespace groth {

using json = nlohmann::ordered_json;

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const SetValuedTableau& t);
SetValuedTableau tableau_from_json(const json& j);

json to_json(const RationalPoint& pt);
RationalPoint point_from_json(const json& j);

}  // namespace groth
