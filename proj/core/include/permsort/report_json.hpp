#pragma once

#include <nlohmann/json.hpp>

#include "permsort/analysis.hpp"
#include "permsort/operators.hpp"
#include "permsort/permutation.hpp"
#include "permsort/wilf.hpp"

// JSON forms of the public value types. Permutations are arrays of
// integers; operators are their compact word ("id" for the identity).

namespace permsort {

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

void to_json(nlohmann::json& j, const OperatorExpr& op);
void from_json(const nlohmann::json& j, OperatorExpr& op);

void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

void to_json(nlohmann::json& j, const ClassBijection& r);
void to_json(nlohmann::json& j, const ClassGfReport& r);
void to_json(nlohmann::json& j, const WilfPairReport& r);

}  // namespace permsort
