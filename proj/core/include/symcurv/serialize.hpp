#pragma once

#include "symcurv/catalog.hpp"
#include "symcurv/curvature_report.hpp"
#include "symcurv/restricted_roots.hpp"
#include "symcurv/root_system.hpp"

#include <nlohmann/json.hpp>

#include <span>

namespace symcurv {

// Rationals are serialized as "num/den" strings ("p" for integers).

/// {label, params, lie_type, case_tag, theta0_perm, index_i, rank, dim}
nlohmann::json to_json(const SpaceSpec& spec);

/// {gammas, vector_basis, bound, argmax, rank}
nlohmann::json to_json(const RestrictedRootResult& res);

/// {space, bound, ricci, rank, dim, sampson: {conservative, relaxed, margins}, notes}
nlohmann::json to_json(const CurvatureReport& report);

nlohmann::json to_json(const SampsonVerdict& verdict);

/// Array of integer coefficient vectors.
nlohmann::json roots_to_json(std::span<const Root> roots);

}  // namespace symcurv
