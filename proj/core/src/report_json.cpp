#include "permsort/report_json.hpp"

namespace permsort {

void to_json(nlohmann::json& j, const Permutation& p) {
  j = std::vector<int>(p.begin(), p.end());
}

void from_json(const nlohmann::json& j, Permutation& p) { p = Permutation(j.get<std::vector<int>>()); }

void to_json(nlohmann::json& j, const OperatorExpr& op) { j = op.to_string(); }

void from_json(const nlohmann::json& j, OperatorExpr& op) {
  op = OperatorExpr::parse(j.get<std::string>());
}

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = {{"name", c.name}, {"passed", c.passed}};
}

void from_json(const nlohmann::json& j, CheckResult& c) {
  j.at("name").get_to(c.name);
  j.at("passed").get_to(c.passed);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"kind", r.kind},
       {"operator", r.op},
       {"size", r.size},
       {"status", to_string(r.status)},
       {"count_SA", r.count_SA},
       {"count_SRA", r.count_SRA},
       {"equidistributed_stats", r.equidistributed_stats},
       {"phi_bijective", r.phi_bijective},
       {"phi_pointwise_preserved", r.phi_pointwise_preserved},
       {"counterexamples", r.counterexamples},
       {"message", r.message}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("kind").get_to(r.kind);
  j.at("operator").get_to(r.op);
  j.at("size").get_to(r.size);
  r.status = status_from_string(j.at("status").get<std::string>());
  j.at("count_SA").get_to(r.count_SA);
  j.at("count_SRA").get_to(r.count_SRA);
  j.at("equidistributed_stats").get_to(r.equidistributed_stats);
  j.at("phi_bijective").get_to(r.phi_bijective);
  j.at("phi_pointwise_preserved").get_to(r.phi_pointwise_preserved);
  j.at("counterexamples").get_to(r.counterexamples);
  r.message = j.value("message", "");
}

void to_json(nlohmann::json& j, const ClassBijection& r) {
  j = {{"holds", r.holds}, {"verified_up_to", r.size_bound}};
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const ClassGfReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"pattern", row.pattern},
                    {"counts", row.counts},
                    {"matches", row.matches}});
  }
  j = {{"n", r.n},
       {"order", r.order},
       {"series", coefficient_strings(r.series)},
       {"classes", rows},
       {"mismatches", r.mismatches},
       {"status", r.passed() ? "pass" : "fail"}};
}

void to_json(nlohmann::json& j, const WilfPairReport& r) {
  j = {{"n", r.n},
       {"k", r.k},
       {"partner_k", r.partner_k},
       {"pattern", r.pattern},
       {"partner_pattern", r.partner_pattern},
       {"partner_formula_holds", r.partner_formula_holds},
       {"self_paired", r.self_paired},
       {"source_counts", r.source_counts},
       {"target_counts", r.target_counts},
       {"bijective", r.bijective},
       {"failures", r.failures},
       {"status", r.passed() ? "pass" : "fail"}};
}

}  // namespace permsort
