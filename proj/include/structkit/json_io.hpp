#pragma once

#include <json.hpp>

#include "structkit/blockdecomp.hpp"
#include "structkit/canon.hpp"
#include "structkit/linsys.hpp"
#include "structkit/structured.hpp"
#include "structkit/sysgraph.hpp"

namespace structkit {

using Json = nlohmann::json;

// Rationals are strings "num/den" (den omitted when 1); integer literals
// are accepted on input. All readers throw ParseError or ShapeError.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RatMatrix& m);
// `cols` is used when the document has no rows to infer it from.
RatMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);

Json to_json(const Poly& p);  // coefficient array, lowest degree first
Poly poly_from_json(const Json& j);

Json to_json(const LinearSystem& s);
LinearSystem system_from_json(const Json& j);

// Matrices of "0" (fixed zero) and "*" (free).
Json to_json(const StructuredSystem& ss);
StructuredSystem pattern_from_json(const Json& j);

// Either a bare array or {"p": [...]}.
ParamVector params_from_json(const Json& j);
Json params_to_json(const ParamVector& p);

Json to_json(const SysGraph& g);
Json to_json(const CondensedGraph& g);
Json to_json(const VertexMapping& m);
Json to_json(const GenericityCertificate& c);
Json to_json(const MinimalityCertificate& c);
Json to_json(const ElementaryDivisor& d);
Json canon_report(const RatMatrix& a);
Json to_json(const BlockRealization& r);

}  // namespace structkit
