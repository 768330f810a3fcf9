#include "symcurv/curvature_report.hpp"

#include "symcurv/errors.hpp"

#include <algorithm>
#include <map>

namespace symcurv {

namespace {

std::string mismatch(const SpaceSpec& spec, const std::string& what, const std::string& got,
                     const std::string& want) {
  return spec.name() + ": computed " + what + " " + got + " differs from closed form " + want;
}

}  // namespace

CurvatureReport curvature_report(const SpaceSpec& spec) { return curvature_report(spec, RootSystem(spec.lie_type)); }

CurvatureReport curvature_report(const SpaceSpec& spec, const RootSystem& rs) {
  CurvatureReport rep{spec, {}, std::nullopt, {}, spec.meta_rank, spec.meta_dim,
                      max_restricted_sq_length(spec, rs), {}};
  const auto& res = rep.restricted;
  rep.upper_bound = res.max_sq_length;
  rep.ricci = spec.datum.tag == CaseTag::GroupManifold ? Rational(1, 4) : Rational(1, 2);
  if (rep.rank > 1) rep.lower_bound = Rational(0);

  if (res.computed_rank && *res.computed_rank != spec.meta_rank) {
    throw ConsistencyError(mismatch(spec, "rank", std::to_string(*res.computed_rank),
                                    std::to_string(spec.meta_rank)));
  }
  if (res.computed_dim && *res.computed_dim != spec.meta_dim) {
    throw ConsistencyError(mismatch(spec, "dimension", std::to_string(*res.computed_dim),
                                    std::to_string(spec.meta_dim)));
  }
  if (rep.upper_bound != spec.meta_bound) {
    throw ConsistencyError(mismatch(spec, "bound", rep.upper_bound.str(), spec.meta_bound.str()));
  }

  rep.notes = res.notes;
  if (res.rule == CaseTag::Mixed || res.rule == CaseTag::EqualLengthRule) {
    rep.notes.push_back("bound taken from the case-analysis conclusion; no independent oracle");
  }
  if (!res.computed_rank) rep.notes.push_back("rank and dimension from closed-form metadata");
  if (rep.rank == 1) rep.notes.push_back("rank one: lower curvature bound not computed");
  if (spec.label == Label::CII) {
    rep.notes.push_back("highest noncompact root follows m_i parity (e1+e_{i+1}), not e_i+e_{i+1}; "
                        "both are short so the bound agrees");
  }
  if (spec.label == Label::G) {
    rep.notes.push_back("fails b >= 2a, passes b >= sqrt(2) a with margin 0");
  }
  return rep;
}

std::string criterion_name(Criterion c) { return c == Criterion::Conservative ? "conservative" : "relaxed"; }

Rational criterion_factor_sq(Criterion c) { return c == Criterion::Conservative ? Rational(4) : Rational(2); }

SampsonVerdict sampson_check(const CurvatureReport& report, Criterion criterion) {
  SampsonVerdict v{criterion, report.upper_bound, report.ricci, false, {}};
  v.margin = v.b_sq - criterion_factor_sq(criterion) * v.a_sq;
  v.passes = v.margin.sign() >= 0;
  return v;
}

std::string rank_class_name(RankClass r) {
  switch (r) {
    case RankClass::Any: return "any";
    case RankClass::RankOne: return "rank=1";
    case RankClass::HigherRank: return "rank>1";
  }
  return "?";
}

std::vector<Threshold> sampson_thresholds(Label family, Criterion criterion, CatalogLimits limits) {
  if (!is_parametric(family)) throw InvalidParams(label_name(family) + " has no parameters");

  std::vector<RankClass> classes{RankClass::Any};
  if (family == Label::BDI) classes = {RankClass::RankOne, RankClass::HigherRank};

  std::vector<CurvatureReport> reports;
  for (const SpaceSpec& spec : catalog(limits)) {
    if (spec.label == family) reports.push_back(curvature_report(spec));
  }

  std::vector<Threshold> out;
  for (RankClass rc : classes) {
    // parameter value -> every entry with that value passes
    std::map<int, bool> passes;
    for (const auto& rep : reports) {
      if (rc == RankClass::RankOne && rep.rank != 1) continue;
      if (rc == RankClass::HigherRank && rep.rank == 1) continue;
      const auto& p = rep.space.params;
      int key = p.size() == 2 ? p[0] + p[1] : p[0];
      bool ok = sampson_check(rep, criterion).passes;
      auto [it, inserted] = passes.emplace(key, ok);
      if (!inserted) it->second = it->second && ok;
    }
    Threshold t{family, rc, criterion, is_pq_family(family) ? "p+q" : "n", std::nullopt, 0, 0};
    if (!passes.empty()) {
      t.first_value = passes.begin()->first;
      t.last_value = passes.rbegin()->first;
      for (auto it = passes.rbegin(); it != passes.rend() && it->second; ++it) t.minimal = it->first;
    }
    out.push_back(std::move(t));
  }
  return out;
}

TableRow table_row(const CurvatureReport& report) {
  const auto& s = report.space;
  return TableRow{s, s.type_label(), s.space_name(), report.rank, report.dim,
                  report.upper_bound, s.bound_formula, s.meta_bound};
}

std::vector<TableRow> curvature_table(CatalogLimits limits) {
  std::vector<TableRow> rows;
  for (const SpaceSpec& spec : catalog(limits)) rows.push_back(table_row(curvature_report(spec)));
  return rows;
}

}  // namespace symcurv
