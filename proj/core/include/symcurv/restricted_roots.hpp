#pragma once

#include "symcurv/catalog.hpp"
#include "symcurv/linalg.hpp"
#include "symcurv/root_system.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symcurv {

struct RestrictedRootResult {
  CaseTag rule;
  std::vector<Root> gammas;            // strongly orthogonal sequence
  std::vector<RatVector> vector_basis;  // a_j - theta0 a_j, one per 2-cycle
  Rational max_sq_length;              // the curvature bound d
  Root argmax_root;
  /// s + dim span(vector_basis); nullopt where the partition is unavailable.
  std::optional<int> computed_rank;
  /// Real dimension of p from root counts; nullopt where unavailable.
  std::optional<int> computed_dim;
  std::vector<std::string> notes;
};

/// Greedy strongly orthogonal sequence: take the highest remaining root of
/// `candidates`, keep only roots a with a -/+ gamma not roots, repeat.
std::vector<Root> strongly_orthogonal_sequence(const RootSystem& rs, std::span<const Root> candidates);

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b);

/// Basis of the theta0 = -1 part of the Cartan subalgebra. Throws WrongCase
/// unless the datum is PureOuter.
std::vector<RatVector> vector_part_basis(const RootSystem& rs, const GantmacherDatum& d);

/// Squared Killing length of the projection of `a` onto
/// span(gammas) + span(vector_basis). The gammas must be mutually orthogonal
/// (checked); throws DependentInput for a dependent combined basis.
Rational restricted_sq_length(const RootSystem& rs, const Root& a, std::span<const Root> gammas,
                              std::span<const RatVector> vector_basis);

/// Maximum squared length of the restricted roots, dispatched on the case tag.
RestrictedRootResult max_restricted_sq_length(const SpaceSpec& spec);
RestrictedRootResult max_restricted_sq_length(const SpaceSpec& spec, const RootSystem& rs);

/// Exhaustive maximum over the relevant roots of the projected squared
/// length, without any highest-root shortcut. Throws Unsupported for Mixed
/// and EqualLengthRule.
Rational brute_force_bound(const SpaceSpec& spec);
Rational brute_force_bound(const SpaceSpec& spec, const RootSystem& rs);

}  // namespace symcurv
