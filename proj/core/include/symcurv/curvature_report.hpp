#pragma once

#include "symcurv/catalog.hpp"
#include "symcurv/restricted_roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symcurv {

/// Sectional and Ricci curvature data of one compact space, metric -B.
/// The noncompact dual has K in [-upper_bound, 0] and Ricci -ricci.
struct CurvatureReport {
  SpaceSpec space;
  Rational upper_bound;
  /// 0 for rank > 1; nullopt (not computed) for rank one.
  std::optional<Rational> lower_bound;
  Rational ricci;  // 1/2 for type I, 1/4 for group manifolds
  int rank = 0;
  int dim = 0;
  RestrictedRootResult restricted;
  std::vector<std::string> notes;

  Rational dual_lower_bound() const { return -upper_bound; }
  Rational dual_ricci() const { return -ricci; }
};

/// Throws ConsistencyError when a computed rank, dimension or bound
/// disagrees with the closed-form metadata.
CurvatureReport curvature_report(const SpaceSpec& spec);
CurvatureReport curvature_report(const SpaceSpec& spec, const RootSystem& rs);

enum class Criterion {
  Conservative,  // b >= 2a
  Relaxed,       // b >= sqrt(2) a
};

std::string criterion_name(Criterion c);
Rational criterion_factor_sq(Criterion c);  // 4 or 2

/// Vanishing criterion for harmonic maps from the noncompact dual, where
/// -a^2 <= K <= 0 and Ric <= -b^2. Compared in squares, so exact.
struct SampsonVerdict {
  Criterion criterion;
  Rational a_sq;    // = upper_bound
  Rational b_sq;    // = ricci
  bool passes = false;
  Rational margin;  // b^2 - c^2 a^2; passes iff margin >= 0
};

SampsonVerdict sampson_check(const CurvatureReport& report, Criterion criterion);

enum class RankClass { Any, RankOne, HigherRank };

std::string rank_class_name(RankClass r);

/// Smallest family parameter (n, or p+q) from which every entry of the
/// family within the sweep passes the criterion.
struct Threshold {
  Label family;
  RankClass rank_class = RankClass::Any;
  Criterion criterion;
  std::string parameter;      // "n" or "p+q"
  std::optional<int> minimal;  // nullopt when the largest entries still fail
  int first_value = 0;         // smallest parameter present in the sweep
  int last_value = 0;          // largest parameter present in the sweep
};

/// BDI yields two thresholds (rank one, rank > 1); other families one.
/// Throws InvalidParams for non-parametric labels.
std::vector<Threshold> sampson_thresholds(Label family, Criterion criterion, CatalogLimits limits = {});

struct TableRow {
  SpaceSpec space;
  std::string type;
  std::string space_name;
  int rank = 0;
  int dim = 0;
  Rational bound;
  std::string bound_formula;
  Rational closed_form;
};

/// One row per catalog entry. Throws ConsistencyError if a computed bound
/// differs from its closed form.
std::vector<TableRow> curvature_table(CatalogLimits limits = {});
TableRow table_row(const CurvatureReport& report);

}  // namespace symcurv
