#pragma once

#include <optional>

#include "json.hpp"

#include "balcx/balance_solver.hpp"
#include "balcx/complex.hpp"
#include "balcx/cox_poly.hpp"
#include "balcx/graph_catalog.hpp"
#include "balcx/hypertree.hpp"
#include "balcx/picard.hpp"

namespace balcx {

using Json = nlohmann::ordered_json;

// Every *_from_json throws DomainError on a missing key, a wrong type, or a
// value that fails the type's own validation. Scalars travel as strings.

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, FieldSpec field);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, FieldSpec field);

/// {"n": 9, "simplices": [[1,2],...]}
Json to_json(const Complex& c);
/// Reads "n" and "simplices"; any weights present are ignored.
Complex complex_from_json(const Json& j);

/// Complex JSON plus "char" and "weights" (parallel to "simplices").
Json to_json(const WeightedComplex& wc);
/// "char" defaults to `fallback` when absent.
WeightedComplex weighted_complex_from_json(const Json& j, FieldSpec fallback = FieldSpec{});

/// {"n": 9, "H": 2, "E": {"1,3,5,7": -1, ...}}
Json to_json(const DivisorClass& d);
DivisorClass divisor_class_from_json(const Json& j);

/// {"n": 9, "dotH": 3, "dotE": {...}}
Json to_json(const CurveClass& c);
CurveClass curve_class_from_json(const Json& j);

/// {"n": 6, "parts": [[1,2,3],...]}
Json to_json(const Hypertree& h);
Hypertree hypertree_from_json(const Json& j);

/// {"n", "char", "invariant", "class", "terms": [{"coeff", "y", "x"}]}
Json to_json(const CoxElement& g);
CoxElement cox_element_from_json(const Json& j);

/// {"char", "balanceable", "witness", "dim", "basis"}
Json to_json(const BalanceVerdict& v);
BalanceVerdict verdict_from_json(const Json& j);

/// {"tag", "m"} or {"tag", "m1", "m2"[, "L"]}
Json to_json(const GraphShape& s);
GraphShape graph_shape_from_json(const Json& j);

/// Pretty form "u1u2 - u2u3 + ..." alongside the s-expansion as strings.
Json invariance_report(const LaurentElement& f);

}  // namespace balcx
