#pragma once
// JSON serialization for the domain objects, and the little argument
// grammar the command line uses to name them: catalog entries with
// arguments ("quotient_poly(x^2+1)"), inline JSON ("{...}"), or a file
// reference ("@objects/thing.json").  Scalars travel as strings so every
// value round-trips exactly; bare JSON integers are accepted on input.

#include <json.hpp>

#include <string>
#include <vector>

#include "sweedler/algebra.hpp"
#include "sweedler/coalgebra.hpp"
#include "sweedler/graded_comodule.hpp"
#include "sweedler/modules.hpp"

namespace sweedler {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const FieldPtr& f, const Json& j);
Json vec_json(const Vec& v);
Vec vec_from_json(const FieldPtr& f, const Json& j);
Json mat_json(const Mat& m);
Mat mat_from_json(const FieldPtr& f, const Json& j);

Json algebra_json(const FinAlgebra& a);
FinAlgebra algebra_from_json(const FieldPtr& f, const Json& j);
Json coalgebra_json(const FinCoalgebra& h);
FinCoalgebra coalgebra_from_json(const FieldPtr& f, const Json& j);
Json module_json(const FinModule& m);
FinModule module_from_json(const FinAlgebra& over, const Json& j);

ExtensionMap extension_from_json(const FieldPtr& f, const FinAlgebra& a,
                                 const FinAlgebra& b, const Json& j);
MeasuringData measuring_from_json(const FieldPtr& f, const Json& j);
ChainComplex complex_from_json(const FieldPtr& f, const Json& j);

// '@path' loads the file, anything else parses as inline JSON text.
Json load_json_argument(const std::string& spec);

FinAlgebra parse_algebra_spec(const FieldPtr& f, const std::string& spec);
FinCoalgebra parse_coalgebra_spec(const FieldPtr& f, const std::string& spec);
// "regular", "free(n)" (direct sum of n regular summands), "zero", or JSON.
FinModule parse_module_spec(const FinAlgebra& over, const std::string& spec);

}  // namespace sweedler
