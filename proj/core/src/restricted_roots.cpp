#include "symcurv/restricted_roots.hpp"

#include "symcurv/errors.hpp"

#include <algorithm>

namespace symcurv {

namespace {

std::vector<RatVector> as_vectors(std::span<const Root> roots) {
  std::vector<RatVector> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(to_rational(r.coeffs));
  return out;
}

void check_pairwise_orthogonal(const RootSystem& rs, std::span<const Root> gammas) {
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t j = i + 1; j < gammas.size(); ++j) {
      if (!rs.inner(gammas[i], gammas[j]).is_zero()) {
        throw ConsistencyError("gammas " + to_string(gammas[i]) + " and " + to_string(gammas[j]) +
                               " are not orthogonal");
      }
    }
  }
}

// Projection onto span(gammas) + span(vector_basis), set up once per basis.
// The gamma terms use their mutual orthogonality directly; the vector part
// is orthogonalized against them.
class RestrictedProjection {
 public:
  RestrictedProjection(const RootSystem& rs, std::span<const Root> gammas,
                       std::span<const RatVector> vector_basis)
      : rs_(rs), gammas_(gammas.begin(), gammas.end()) {
    check_pairwise_orthogonal(rs, gammas);
    for (const Root& g : gammas_) gamma_norms_.push_back(rs.sq_length(g));
    if (vector_basis.empty()) return;
    std::vector<RatVector> combined = as_vectors(gammas);
    combined.insert(combined.end(), vector_basis.begin(), vector_basis.end());
    auto ortho = gram_schmidt(combined, rs.gram());
    tail_.emplace(std::span<const RatVector>(ortho).subspan(gammas.size()), rs.gram());
  }

  Rational operator()(const Root& a) const {
    Rational total;
    for (std::size_t k = 0; k < gammas_.size(); ++k) {
      Rational c = rs_.inner(a, gammas_[k]);
      if (!c.is_zero()) total += c * c / gamma_norms_[k];
    }
    if (tail_) total += tail_->sq_length(a.coeffs);
    return total;
  }

 private:
  const RootSystem& rs_;
  std::vector<Root> gammas_;
  std::vector<Rational> gamma_norms_;
  std::optional<Projector> tail_;
};

const Root& highest_of(std::span<const Root> roots) {
  return *std::min_element(roots.begin(), roots.end(), higher);
}

RestrictedRootResult inner_case(const SpaceSpec& spec, const RootSystem& rs) {
  RootPartition part = partition_roots(rs, spec.datum);
  const auto& noncompact = part.noncompact;
  if (noncompact.empty()) throw ConsistencyError(spec.name() + ": no noncompact roots");

  const Root& top = highest_of(noncompact);
  auto ties = std::count_if(noncompact.begin(), noncompact.end(),
                            [&](const Root& r) { return r.height() == top.height(); });
  if (ties != 1) throw ConsistencyError(spec.name() + ": highest noncompact root is not unique");

  RestrictedRootResult res{CaseTag::Inner, strongly_orthogonal_sequence(rs, noncompact), {}, {}, {},
                           std::nullopt, std::nullopt, {}};
  RestrictedProjection project(rs, res.gammas, {});
  for (const Root& a : noncompact) {
    Rational v = project(a);
    if (v > res.max_sq_length) res.max_sq_length = v;
  }
  const Root& gamma1 = res.gammas.front();
  if (res.max_sq_length != rs.sq_length(gamma1)) {
    throw ConsistencyError(spec.name() + ": maximum is not attained at the highest noncompact root");
  }
  res.argmax_root = gamma1;
  res.computed_rank = static_cast<int>(res.gammas.size());
  res.computed_dim = static_cast<int>(2 * noncompact.size());
  res.notes.push_back("inner involution h_" + std::to_string(*spec.datum.index_i) +
                      ": bound is |gamma_1|^2 for the highest noncompact root gamma_1 = " +
                      to_string(gamma1));
  return res;
}

RestrictedRootResult split_case(const SpaceSpec& spec, const RootSystem& rs) {
  RestrictedRootResult res{spec.datum.tag, {}, {}, rs.sq_length(rs.highest()), rs.highest(),
                           static_cast<int>(rs.rank()), std::nullopt, {}};
  const int positive = static_cast<int>(rs.positive_roots().size());
  if (spec.datum.tag == CaseTag::SplitAI) {
    // p = h + one dimension per positive root
    res.computed_dim = static_cast<int>(rs.rank()) + positive;
    res.notes.push_back("split form: restricted roots are the roots; bound is |delta|^2");
  } else {
    res.computed_dim = static_cast<int>(rs.rank()) + 2 * positive;
    res.notes.push_back("compact group: bound is the squared length of the highest root");
  }
  return res;
}

RestrictedRootResult outer_case(const SpaceSpec& spec, const RootSystem& rs) {
  RootPartition part = partition_roots(rs, spec.datum);
  if (part.moved.empty()) throw ConsistencyError(spec.name() + ": theta0 moves no roots");
  RestrictedRootResult res{CaseTag::PureOuter, {}, vector_part_basis(rs, spec.datum), {}, {},
                           std::nullopt, std::nullopt, {}};
  RestrictedProjection project(rs, {}, res.vector_basis);
  for (const Root& a : part.moved) {
    Root ta = spec.datum.theta0.apply(a);
    Rational v = project(a);
    Rational half_formula = (rs.sq_length(a) - rs.inner(a, ta)) / Rational(2);
    if (v != half_formula) {
      throw ConsistencyError(spec.name() + ": projection of " + to_string(a) +
                             " differs from |(a - theta0 a)/2|^2");
    }
    if (v > res.max_sq_length) res.max_sq_length = v;
  }
  const Root& top = highest_of(part.moved);
  if (project(top) != res.max_sq_length) {
    throw ConsistencyError(spec.name() + ": maximum is not attained at the highest moved root");
  }
  res.argmax_root = top;
  res.computed_rank = static_cast<int>(res.vector_basis.size());
  // theta0 e_a = e_{theta0 a}: each moved pair gives one p-direction per sign.
  res.computed_dim = static_cast<int>(res.vector_basis.size() + part.moved.size());
  res.notes.push_back("diagram involution: bound is |(a0 - theta0 a0)/2|^2 for the highest moved root a0 = " +
                      to_string(top));
  return res;
}

RestrictedRootResult mixed_case(const RootSystem& rs) {
  RestrictedRootResult res{CaseTag::Mixed, {}, {}, rs.max_root_sq_length(), rs.highest(),
                           std::nullopt, std::nullopt, {}};
  res.notes.push_back("mixed involution: gamma_1 is taken of maximal root length; the noncompact "
                      "roots are not derived");
  return res;
}

RestrictedRootResult equal_length_case(const SpaceSpec& spec, const RootSystem& rs) {
  auto lengths = rs.root_lengths();
  if (lengths.size() != 1) throw ConsistencyError(spec.name() + ": roots have several lengths");
  RestrictedRootResult res{CaseTag::EqualLengthRule, {}, {}, lengths.front(), rs.highest(),
                           std::nullopt, std::nullopt, {}};
  res.notes.push_back("all roots have one length, so |gamma_1|^2 is that length; h_i not derived");
  return res;
}

}  // namespace

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  return !rs.is_root(a + b) && !rs.is_root(a - b);
}

std::vector<Root> strongly_orthogonal_sequence(const RootSystem& rs, std::span<const Root> candidates) {
  std::vector<Root> remaining(candidates.begin(), candidates.end());
  std::vector<Root> out;
  while (!remaining.empty()) {
    Root gamma = highest_of(remaining);
    std::erase_if(remaining, [&](const Root& a) { return a == gamma || !strongly_orthogonal(rs, a, gamma); });
    out.push_back(std::move(gamma));
  }
  return out;
}

std::vector<RatVector> vector_part_basis(const RootSystem& rs, const GantmacherDatum& d) {
  if (d.tag != CaseTag::PureOuter) {
    throw WrongCase("vector part basis needs a PURE_OUTER datum, got " + case_tag_name(d.tag));
  }
  std::vector<RatVector> out;
  const auto& perm = d.theta0.perm();
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (static_cast<std::size_t>(perm[j]) <= j) continue;
    RatVector v(rs.rank());
    v[j] = 1;
    v[perm[j]] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

Rational restricted_sq_length(const RootSystem& rs, const Root& a, std::span<const Root> gammas,
                              std::span<const RatVector> vector_basis) {
  return RestrictedProjection(rs, gammas, vector_basis)(a);
}

RestrictedRootResult max_restricted_sq_length(const SpaceSpec& spec) {
  return max_restricted_sq_length(spec, RootSystem(spec.lie_type));
}

RestrictedRootResult max_restricted_sq_length(const SpaceSpec& spec, const RootSystem& rs) {
  switch (spec.datum.tag) {
    case CaseTag::Inner: return inner_case(spec, rs);
    case CaseTag::SplitAI:
    case CaseTag::GroupManifold: return split_case(spec, rs);
    case CaseTag::PureOuter: return outer_case(spec, rs);
    case CaseTag::Mixed: return mixed_case(rs);
    case CaseTag::EqualLengthRule: return equal_length_case(spec, rs);
  }
  throw WrongCase("unknown case tag");
}

Rational brute_force_bound(const SpaceSpec& spec) { return brute_force_bound(spec, RootSystem(spec.lie_type)); }

Rational brute_force_bound(const SpaceSpec& spec, const RootSystem& rs) {
  const auto& form = rs.gram();
  Rational best;
  switch (spec.datum.tag) {
    case CaseTag::Inner: {
      const std::size_t i = static_cast<std::size_t>(*spec.datum.index_i - 1);
      std::vector<Root> noncompact;
      for (const Root& r : rs.positive_roots()) {
        if (r.coeffs[i] % 2 != 0) noncompact.push_back(r);
      }
      auto gammas = strongly_orthogonal_sequence(rs, noncompact);
      Projector proj(as_vectors(gammas), form);
      for (const Root& r : noncompact) best = std::max(best, proj.sq_length(r.coeffs));
      return best;
    }
    case CaseTag::PureOuter:
      for (const Root& r : rs.positive_roots()) {
        Root t = spec.datum.theta0.apply(r);
        if (t == r) continue;
        RatVector half = Rational(1, 2) * (to_rational(r.coeffs) - to_rational(t.coeffs));
        best = std::max(best, form.norm_sq(half));
      }
      return best;
    case CaseTag::SplitAI:
    case CaseTag::GroupManifold:
      for (const Root& r : rs.positive_roots()) best = std::max(best, form.apply(r.coeffs, r.coeffs));
      return best;
    case CaseTag::Mixed:
    case CaseTag::EqualLengthRule:
      break;
  }
  throw Unsupported("no brute-force oracle for " + case_tag_name(spec.datum.tag));
}

}  // namespace symcurv
