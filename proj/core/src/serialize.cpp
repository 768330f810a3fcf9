#include "symcurv/serialize.hpp"

namespace symcurv {

using nlohmann::json;

json to_json(const SpaceSpec& spec) {
  json params = json::object();
  if (spec.params.size() == 1) params["n"] = spec.params[0];
  if (spec.params.size() == 2) {
    params["p"] = spec.params[0];
    params["q"] = spec.params[1];
  }
  std::vector<int> perm;
  for (int k : spec.datum.theta0.perm()) perm.push_back(k + 1);
  return json{
      {"label", spec.type_label()},
      {"params", params},
      {"lie_type", spec.lie_type.name()},
      {"case_tag", case_tag_name(spec.datum.tag)},
      {"theta0_perm", perm},
      {"index_i", spec.datum.index_i ? json(*spec.datum.index_i) : json(nullptr)},
      {"rank", spec.meta_rank},
      {"dim", spec.meta_dim},
  };
}

json roots_to_json(std::span<const Root> roots) {
  json out = json::array();
  for (const Root& r : roots) out.push_back(r.coeffs);
  return out;
}

json to_json(const RestrictedRootResult& res) {
  json basis = json::array();
  for (const auto& v : res.vector_basis) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.str());
    basis.push_back(row);
  }
  return json{
      {"gammas", roots_to_json(res.gammas)},
      {"vector_basis", basis},
      {"bound", res.max_sq_length.str()},
      {"argmax", res.argmax_root.coeffs},
      {"rank", res.computed_rank ? json(*res.computed_rank) : json(nullptr)},
  };
}

json to_json(const SampsonVerdict& v) {
  return json{{"criterion", criterion_name(v.criterion)},
              {"a_sq", v.a_sq.str()},
              {"b_sq", v.b_sq.str()},
              {"passes", v.passes},
              {"margin", v.margin.str()}};
}

json to_json(const CurvatureReport& report) {
  auto cons = sampson_check(report, Criterion::Conservative);
  auto rel = sampson_check(report, Criterion::Relaxed);
  return json{
      {"space", to_json(report.space)},
      {"name", report.space.name()},
      {"bound", report.upper_bound.str()},
      {"lower_bound", report.lower_bound ? json(report.lower_bound->str()) : json("NOT_COMPUTED")},
      {"dual_range", json::array({report.dual_lower_bound().str(), "0"})},
      {"ricci", report.ricci.str()},
      {"rank", report.rank},
      {"dim", report.dim},
      {"restricted", to_json(report.restricted)},
      {"sampson",
       {{"conservative", cons.passes},
        {"relaxed", rel.passes},
        {"margins", {{"conservative", cons.margin.str()}, {"relaxed", rel.margin.str()}}}}},
      {"notes", report.notes},
  };
}

}  // namespace symcurv
