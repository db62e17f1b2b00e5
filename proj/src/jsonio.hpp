#ifndef ADEND_JSONIO_HPP
#define ADEND_JSONIO_HPP

#include "bimodule.hpp"
#include "catalog.hpp"
#include "forms.hpp"
#include "solver.hpp"

#include <json.hpp>

#include <string>

namespace adend {

using Json = nlohmann::json;

// Algebra files: {"dim": n, "basis": [...], "ops": {op: {"ei,ej": {"ek": "p/q"}}},
// "forms": {name: {"ei,ej": "p/q"}}}; omitted entries are zero.
AlgebraSpace algebra_from_json(const Json& j);
Json algebra_to_json(const AlgebraSpace& alg);

// {"base": {...}, "op": "mul", "space_dim": m, "l": {"ei": [[..]]}, "r": {...}}
Bimodule bimodule_from_json(const Json& j);
Json bimodule_to_json(const Bimodule& m);

// Row-major rational matrix [[...], ...].
Mat matrix_from_json(const Json& j);
Json matrix_to_json(const Mat& m);

// {name, slots, identities: [DSL], derived: {op: "x,y: expr"}}
StructureDef bundle_from_json(const Json& j);

Json poly_to_json(const MultiPoly& p); // {"monomial": "coefficient"}
MultiPoly poly_from_json(const Json& j, const VarTablePtr& vars);

Json verdict_to_json(const Verdict& v, const AlgebraSpace& alg,
                     const std::vector<std::string>& vars);
Json structure_verdict_to_json(const StructureVerdict& v, const AlgebraSpace& alg);
Json operator_report_to_json(const OperatorCheckReport& r);
Json form_report_to_json(const FormReport& r);
Json invariance_to_json(const InvarianceVerdict& v, const AlgebraSpace& alg);
Json solution_to_json(const SolutionIdeal& s, bool with_samples = true);
Json invariants_to_json(const InvariantVector& v);
Json self_test_to_json(const SelfTestReport& r);

Rational rational_from_json(const Json& j);

} // namespace adend

#endif
