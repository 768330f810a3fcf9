#pragma once

#include "symcurv/catalog.hpp"
#include "symcurv/curvature_report.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcurv::cli {

/// Closed forms of one family, as expressions in its parameters.
struct ClosedForms {
  std::vector<std::string> params;
  std::string rank;
  std::string dimension;
  std::string bound;
  std::optional<std::string> bound_rank1;  // BDI with min(p, q) = 1
};

struct Erratum {
  std::vector<int> listed;
  std::vector<int> corrected;
  std::string reason;
};

struct ExpectedThreshold {
  Label family;
  RankClass rank_class = RankClass::Any;
  std::string parameter;
  int minimal = 0;
};

/// The reference data the verify command checks against.
struct Expectations {
  int version = 0;
  CatalogLimits sweep;
  std::map<Label, ClosedForms> closed_forms;
  std::map<std::string, std::vector<std::vector<int>>> root_lists;  // keyed by Lie type name
  std::map<std::string, std::vector<Erratum>> errata;
  std::vector<ExpectedThreshold> conservative;
  std::vector<Label> always_pass;
  std::vector<Label> relaxed_only;

  /// Closed forms evaluated for one entry, picking the rank-one bound where
  /// it applies. Throws std::out_of_range for a family without forms.
  Rational expected_bound(const SpaceSpec& s) const;
  int expected_rank(const SpaceSpec& s) const;
  int expected_dim(const SpaceSpec& s) const;
};

/// The copy of data/expectations.json compiled into the binary.
std::string_view embedded_expectations_text();

/// Throws std::invalid_argument on malformed data.
Expectations parse_expectations(std::string_view json_text);
const Expectations& embedded_expectations();

}  // namespace symcurv::cli
