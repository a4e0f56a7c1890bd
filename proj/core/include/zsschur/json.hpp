#pragma once

#include <nlohmann/json.hpp>

#include "zsschur/certificates.hpp"
#include "zsschur/coloring.hpp"
#include "zsschur/equation.hpp"
#include "zsschur/formulas.hpp"
#include "zsschur/oracle.hpp"
#include "zsschur/params.hpp"

namespace zsschur {

// Wire formats (stable keys):
//   SchurParams  {"k","r","m","ell","eps","v"}
//   Coloring     {"t","m","colors":[...]}, colors[i-1] == chi(i)
//   Witness      {"entries":[...]}
//   SearchResult {"params","value","certificate","t_max","elapsed_ms","method"}
//   FormulaValue {"params","kind","value","source","aux"}
//   Certificate  {"params","coloring","claim","source"}
//   ProofTuple   {"params","witness","zero_sum_claimed","source"}
// Absent optionals serialize as null. from_json validates invariants and
// throws InvalidParams on violations.

void to_json(nlohmann::json& j, const SchurParams& p);
void from_json(const nlohmann::json& j, SchurParams& p);

void to_json(nlohmann::json& j, const Coloring& c);
void from_json(const nlohmann::json& j, Coloring& c);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const SearchResult& r);

void to_json(nlohmann::json& j, const FormulaValue& f);

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

void to_json(nlohmann::json& j, const ProofTuple& t);
void from_json(const nlohmann::json& j, ProofTuple& t);

}  // namespace zsschur
