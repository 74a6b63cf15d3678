#pragma once

#include <json.hpp>

#include "c14/closure.hpp"
#include "c14/galilean.hpp"
#include "c14/recurrence.hpp"
#include "c14/solutions.hpp"
#include "c14/symtensor.hpp"

namespace c14 {

using json = nlohmann::ordered_json;

// Rationals travel as decimal strings, either "a/b" or a {"num","den"} pair.
json rational_json(const Rational& x);
Rational rational_from_json(const json& j);

json symtensor_to_json(const SymTensor& t);
SymTensor symtensor_from_json(const json& j);

json scalar_to_json(const LambdaScalar& s);
LambdaScalar scalar_from_json(const json& j);

// Monomial form: one entry per deviation monomial with its exponent vector.
json series_to_json(const Series& s);
Series series_from_json(const json& j);

json theta_table_to_json(const ThetaTable& t);
ThetaTable theta_table_from_json(const json& j);
json table_report_to_json(const TableReport& r);

json polyf_to_json(const PolyF& f);
PolyF polyf_from_json(const json& j);

// Parameter file:
//   {"beta": {"1": "1"}, "psi_const": {"0": "2"}, "F": "G1" | [{"G0":a,"G1":b,"G2":c,"coeff":"k"}],
//    "ttH0": <series>, "theta": <table>, "beta0_injection": "1"}
// Every key is optional. `has_theta` reports whether a table was supplied.
SolutionParams params_from_json(const json& j, bool* has_theta = nullptr);
json params_to_json(const SolutionParams& p);

json multipliers_to_json(const Multipliers& m);
Multipliers multipliers_from_json(const json& j);

json verify_report_to_json(const VerifyReport& r);
json xmatrix_to_json(const XMatrix& x);

json dense_to_json(const DenseTensor& t);
json dense_to_json(const DenseTensorQ& t);

json beta0_report_to_json(const Beta0Report& r);
json integration_report_to_json(const IntegrationConstantReport& r);

json read_json_file(const std::string& path);

}  // namespace c14
