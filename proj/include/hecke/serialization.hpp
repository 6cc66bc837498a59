#pragma once

#include <json.hpp>

#include "hecke/tensor_operator.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

/// Two exponent-ascending arrays of (exponent, numerator, denominator)
/// triples; the integer parts travel as decimal strings so arbitrary
/// precision round-trips bit-exactly.
Json scalar_to_json(const RationalScalar& s);
RationalScalar scalar_from_json(const Json& j);

/// Header (d, row_pow, col_pow) plus (row, col, scalar) triples in
/// lexicographic order.
Json operator_to_json(const TensorOperator& op);
TensorOperator operator_from_json(const Json& j);

/// Header (d, n) plus (multi-index, scalar) pairs, index-ascending.
Json vector_to_json(const TensorVector& v);
TensorVector vector_from_json(const Json& j);

} // namespace hecke
