#include "records.hpp"

namespace soe::cli {

SolutionRecord make_record(const solver::EinsteinSolution& s, bool normalize) {
  SolutionRecord r;
  r.k = s.k;
  r.l = s.l;
  const auto m = normalize ? solver::normalize_to_unit_lambda(s) : s.metric;
  r.x1 = m.x1;
  r.x2 = m.x2;
  r.x3 = m.x3;
  r.x12 = m.x12;
  r.x13 = m.x13;
  r.x23 = m.x23;
  r.lambda = normalize ? 1.0 : s.lambda;
  r.residual = s.residual;
  r.branch = std::string(solver::to_string(s.branch));
  r.naturally_reductive = s.reductivity.naturally_reductive();
  r.x12_lo = s.x12_root.certified_lo.str();
  r.x12_hi = s.x12_root.certified_hi.str();
  r.x3_lo = s.x3_root.certified_lo.str();
  r.x3_hi = s.x3_root.certified_hi.str();
  r.x2_lo = s.x2_root.certified_lo.str();
  r.x2_hi = s.x2_root.certified_hi.str();
  return r;
}

void to_json(nlohmann::json& j, const SolutionRecord& r) {
  j = nlohmann::json{{"k", r.k},
                     {"l", r.l},
                     {"x1", r.x1},
                     {"x2", r.x2},
                     {"x3", r.x3},
                     {"x12", r.x12},
                     {"x13", r.x13},
                     {"x23", r.x23},
                     {"lambda", r.lambda},
                     {"residual", r.residual},
                     {"branch", r.branch},
                     {"naturally_reductive", r.naturally_reductive},
                     {"x12_interval", {r.x12_lo, r.x12_hi}},
                     {"x3_interval", {r.x3_lo, r.x3_hi}},
                     {"x2_interval", {r.x2_lo, r.x2_hi}}};
}

void from_json(const nlohmann::json& j, SolutionRecord& r) {
  j.at("k").get_to(r.k);
  j.at("l").get_to(r.l);
  j.at("x1").get_to(r.x1);
  j.at("x2").get_to(r.x2);
  j.at("x3").get_to(r.x3);
  j.at("x12").get_to(r.x12);
  j.at("x13").get_to(r.x13);
  j.at("x23").get_to(r.x23);
  j.at("lambda").get_to(r.lambda);
  j.at("residual").get_to(r.residual);
  j.at("branch").get_to(r.branch);
  j.at("naturally_reductive").get_to(r.naturally_reductive);
  j.at("x12_interval").at(0).get_to(r.x12_lo);
  j.at("x12_interval").at(1).get_to(r.x12_hi);
  j.at("x3_interval").at(0).get_to(r.x3_lo);
  j.at("x3_interval").at(1).get_to(r.x3_hi);
  j.at("x2_interval").at(0).get_to(r.x2_lo);
  j.at("x2_interval").at(1).get_to(r.x2_hi);
}

}  // namespace soe::cli
