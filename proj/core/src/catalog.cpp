#include "symcurv/catalog.hpp"

#include "symcurv/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace symcurv {

namespace {

constexpr std::array<std::pair<Label, std::string_view>, 20> kLabelNames{{
    {Label::AI, "AI"},     {Label::AII, "AII"},     {Label::AIII, "AIII"}, {Label::BDI, "BDI"},
    {Label::DIII, "DIII"}, {Label::CI, "CI"},       {Label::CII, "CII"},   {Label::EI, "EI"},
    {Label::EII, "EII"},   {Label::EIII, "EIII"},   {Label::EIV, "EIV"},   {Label::EV, "EV"},
    {Label::EVI, "EVI"},   {Label::EVII, "EVII"},   {Label::EVIII, "EVIII"}, {Label::EIX, "EIX"},
    {Label::FI, "FI"},     {Label::FII, "FII"},     {Label::G, "G"},       {Label::Group, "GROUP"},
}};

// Rank, dimension and bound of the exceptional rows of the curvature table.
struct ExceptionalRow {
  Label label;
  Family family;
  int lie_rank;
  int rank;
  int dim;
  int bound_den;
};

constexpr std::array<ExceptionalRow, 12> kExceptional{{
    {Label::EI, Family::E6, 6, 6, 42, 12},    {Label::EII, Family::E6, 6, 4, 40, 12},
    {Label::EIII, Family::E6, 6, 2, 32, 12},  {Label::EIV, Family::E6, 6, 2, 26, 24},
    {Label::EV, Family::E7, 7, 7, 70, 18},    {Label::EVI, Family::E7, 7, 4, 64, 18},
    {Label::EVII, Family::E7, 7, 3, 54, 18},  {Label::EVIII, Family::E8, 8, 8, 128, 30},
    {Label::EIX, Family::E8, 8, 4, 112, 30},  {Label::FI, Family::F4, 4, 4, 28, 9},
    {Label::FII, Family::F4, 4, 1, 16, 18},   {Label::G, Family::G2, 2, 2, 8, 4},
}};

std::string s(int v) { return std::to_string(v); }

Rational inv(int den) { return Rational(1) / Rational(den); }

// Builds the datum for a request phrased in the (possibly aliased) numbering
// of `requested`; `perm` is 0-based and `index` 1-based in that numbering.
GantmacherDatum make_datum(const AliasedType& requested, std::optional<std::vector<int>> perm,
                           std::optional<int> index, CaseTag tag) {
  const auto& map = requested.node_map;
  const std::size_t l = map.size();
  IntMatrix cartan = cartan_matrix(requested.type);
  DiagramAutomorphism theta0 = DiagramAutomorphism::identity(l);
  if (perm) {
    std::vector<int> canon(l);
    for (std::size_t k = 0; k < l; ++k) canon[map[k]] = map[(*perm)[k]];
    theta0 = DiagramAutomorphism(std::move(canon), cartan);
  }
  std::optional<int> canon_index;
  if (index) canon_index = map.at(*index - 1) + 1;
  return GantmacherDatum{std::move(theta0), canon_index, tag};
}

std::vector<int> reversal(int l) {
  std::vector<int> p(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) p[k] = l - 1 - k;
  return p;
}

std::vector<int> swap_last_two(int l) {
  std::vector<int> p(static_cast<std::size_t>(l));
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[l - 2], p[l - 1]);
  return p;
}

void check_inner_index(const SpaceSpec& spec) {
  if (spec.datum.tag != CaseTag::Inner) return;
  Root delta = enumerate_positive_roots(spec.lie_type).back();
  int m = delta.coeffs.at(*spec.datum.index_i - 1);
  if (m != 1 && m != 2) {
    throw ConsistencyError(spec.name() + ": h_i index has m_i(delta) = " + s(m));
  }
}

int require_n(Label label, const std::vector<int>& params, int min_n) {
  if (params.size() != 1) throw InvalidParams(label_name(label) + " takes one parameter n");
  if (params[0] < min_n) {
    throw InvalidParams(label_name(label) + " requires n >= " + s(min_n) + ", got " + s(params[0]));
  }
  return params[0];
}

std::pair<int, int> require_pq(Label label, const std::vector<int>& params, int min_sum) {
  if (params.size() != 2) throw InvalidParams(label_name(label) + " takes parameters p, q");
  int p = std::min(params[0], params[1]);
  int q = std::max(params[0], params[1]);
  if (p < 1) throw InvalidParams(label_name(label) + " requires p, q >= 1");
  if (p + q < min_sum) {
    throw InvalidParams(label_name(label) + " requires p + q >= " + s(min_sum) + ", got " + s(p + q));
  }
  return {p, q};
}

int dual_coxeter(LieType t) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return l + 1;
    case Family::B: return 2 * l - 1;
    case Family::C: return l + 1;
    case Family::D: return 2 * l - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
    case Family::F4: return 9;
    case Family::G2: return 4;
  }
  return 0;
}

std::string dual_coxeter_formula(Family f) {
  switch (f) {
    case Family::A: return "1/(l+1)";
    case Family::B: return "1/(2l-1)";
    case Family::C: return "1/(l+1)";
    case Family::D: return "1/(2l-2)";
    default: return {};
  }
}

}  // namespace

std::string label_name(Label l) {
  for (const auto& [lab, name] : kLabelNames) {
    if (lab == l) return std::string(name);
  }
  return "?";
}

Label parse_label(std::string_view text) {
  for (const auto& [lab, name] : kLabelNames) {
    if (text == name) return lab;
  }
  throw UnknownLabel("unknown symmetric space label '" + std::string(text) + "'");
}

bool is_parametric(Label l) {
  switch (l) {
    case Label::AI: case Label::AII: case Label::AIII: case Label::BDI:
    case Label::DIII: case Label::CI: case Label::CII:
      return true;
    default:
      return false;
  }
}

bool is_pq_family(Label l) { return l == Label::AIII || l == Label::BDI || l == Label::CII; }

std::string case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Inner: return "INNER";
    case CaseTag::SplitAI: return "SPLIT_AI";
    case CaseTag::PureOuter: return "PURE_OUTER";
    case CaseTag::Mixed: return "MIXED";
    case CaseTag::EqualLengthRule: return "EQUAL_LENGTH_RULE";
    case CaseTag::GroupManifold: return "GROUP_MANIFOLD";
  }
  return "?";
}

DiagramAutomorphism DiagramAutomorphism::identity(std::size_t rank) {
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 0);
  return DiagramAutomorphism(std::move(p));
}

DiagramAutomorphism::DiagramAutomorphism(std::vector<int> perm, const IntMatrix& cartan)
    : perm_(std::move(perm)) {
  const std::size_t n = perm_.size();
  if (cartan.size() != n) throw std::invalid_argument("automorphism size differs from rank");
  for (std::size_t i = 0; i < n; ++i) {
    int j = perm_[i];
    if (j < 0 || static_cast<std::size_t>(j) >= n || perm_[j] != static_cast<int>(i)) {
      throw std::invalid_argument("diagram automorphism must be an involutive permutation");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cartan[perm_[i]][perm_[j]] != cartan[i][j]) {
        throw std::invalid_argument("permutation does not preserve the Cartan matrix");
      }
    }
  }
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Root DiagramAutomorphism::apply(const Root& a) const {
  Root out{std::vector<int>(a.coeffs.size(), 0)};
  // alpha_k goes to alpha_{perm[k]}, so coefficient k lands in slot perm[k].
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[perm_[k]] = a.coeffs[k];
  return out;
}

std::string SpaceSpec::name() const {
  if (label == Label::Group) return "GROUP(" + lie_type.name() + ")";
  if (params.size() == 1) return label_name(label) + "(n=" + s(params[0]) + ")";
  if (params.size() == 2) return label_name(label) + "(p=" + s(params[0]) + ",q=" + s(params[1]) + ")";
  return label_name(label);
}

std::string SpaceSpec::type_label() const {
  if (label == Label::Group) return "GROUP(" + lie_type.name() + ")";
  return label_name(label);
}

std::string SpaceSpec::space_name() const {
  auto n = [&] { return params.at(0); };
  auto p = [&] { return params.at(0); };
  auto q = [&] { return params.at(1); };
  switch (label) {
    case Label::AI: return "SU(" + s(n()) + ")/SO(" + s(n()) + ")";
    case Label::AII: return "SU(" + s(2 * n()) + ")/Sp(" + s(n()) + ")";
    case Label::AIII: return "SU(" + s(p() + q()) + ")/S(U(" + s(p()) + ")xU(" + s(q()) + "))";
    case Label::BDI: return "SO(" + s(p() + q()) + ")/SO(" + s(p()) + ")xSO(" + s(q()) + ")";
    case Label::DIII: return "SO(" + s(2 * n()) + ")/U(" + s(n()) + ")";
    case Label::CI: return "Sp(" + s(n()) + ")/U(" + s(n()) + ")";
    case Label::CII: return "Sp(" + s(p() + q()) + ")/Sp(" + s(p()) + ")xSp(" + s(q()) + ")";
    case Label::Group:
      switch (lie_type.family) {
        case Family::A: return "SU(" + s(lie_type.rank + 1) + ")";
        case Family::B: return "SO(" + s(2 * lie_type.rank + 1) + ")";
        case Family::C: return "Sp(" + s(lie_type.rank) + ")";
        case Family::D: return "SO(" + s(2 * lie_type.rank) + ")";
        default: return lie_type.name();
      }
    default: return {};
  }
}

SpaceSpec resolve(Label label, std::vector<int> params) {
  SpaceSpec spec{label, {}, {}, {DiagramAutomorphism::identity(1), std::nullopt, CaseTag::Inner},
                 0, 0, {}, {}};
  auto no_params = [&] {
    if (!params.empty()) throw InvalidParams(label_name(label) + " takes no parameters");
  };

  switch (label) {
    case Label::AI: {
      int n = require_n(label, params, 2);
      auto at = alias(Family::A, n - 1);
      spec.params = {n};
      spec.lie_type = at.type;
      spec.datum = make_datum(at, std::nullopt, std::nullopt, CaseTag::SplitAI);
      spec.meta_rank = n - 1;
      spec.meta_dim = (n - 1) * (n + 2) / 2;
      spec.meta_bound = inv(n);
      spec.bound_formula = "1/n";
      break;
    }
    case Label::AII: {
      int n = require_n(label, params, 2);
      auto at = alias(Family::A, 2 * n - 1);
      spec.params = {n};
      spec.lie_type = at.type;
      spec.datum = make_datum(at, reversal(2 * n - 1), std::nullopt, CaseTag::PureOuter);
      spec.meta_rank = n - 1;
      spec.meta_dim = (n - 1) * (2 * n + 1);
      spec.meta_bound = inv(4 * n);
      spec.bound_formula = "1/(4n)";
      break;
    }
    case Label::AIII: {
      auto [p, q] = require_pq(label, params, 2);
      auto at = alias(Family::A, p + q - 1);
      spec.params = {p, q};
      spec.lie_type = at.type;
      spec.datum = make_datum(at, std::nullopt, p, CaseTag::Inner);
      spec.meta_rank = p;
      spec.meta_dim = 2 * p * q;
      spec.meta_bound = inv(p + q);
      spec.bound_formula = "1/(p+q)";
      break;
    }
    case Label::BDI: {
      auto [p, q] = require_pq(label, params, 5);
      spec.params = {p, q};
      spec.meta_rank = p;
      spec.meta_dim = p * q;
      if (p == 1) {
        spec.meta_bound = inv(2 * (p + q - 2));
        spec.bound_formula = "1/(2(p+q-2))";
      } else {
        spec.meta_bound = inv(p + q - 2);
        spec.bound_formula = "1/(p+q-2)";
      }
      if ((p + q) % 2 == 1) {
        auto at = alias(Family::B, (p + q - 1) / 2);
        int even = (p % 2 == 0) ? p : q;
        spec.lie_type = at.type;
        spec.datum = make_datum(at, std::nullopt, even / 2, CaseTag::Inner);
      } else {
        const int l = (p + q) / 2;
        auto at = alias(Family::D, l);
        spec.lie_type = at.type;
        if (p % 2 == 0) {
          spec.datum = make_datum(at, std::nullopt, p / 2, CaseTag::Inner);
        } else if (p == 1) {
          spec.datum = make_datum(at, swap_last_two(l), std::nullopt, CaseTag::PureOuter);
        } else {
          // h_i here indexes the simple roots of the theta0-fixed subalgebra
          // B_{l-1}, not those of D_l, so it is not relabeled through the alias.
          spec.datum = make_datum(at, swap_last_two(l), std::nullopt, CaseTag::Mixed);
          spec.datum.index_i = (p - 1) / 2;
        }
      }
      break;
    }
    case Label::DIII: {
      int n = require_n(label, params, 4);
      auto at = alias(Family::D, n);
      spec.params = {n};
      spec.lie_type = at.type;
      spec.datum = make_datum(at, std::nullopt, n, CaseTag::Inner);
      spec.meta_rank = n / 2;
      spec.meta_dim = n * (n - 1);
      spec.meta_bound = inv(2 * n - 2);
      spec.bound_formula = "1/(2n-2)";
      break;
    }
    case Label::CI: {
      int n = require_n(label, params, 2);
      auto at = alias(Family::C, n);
      spec.params = {n};
      spec.lie_type = at.type;
      spec.datum = make_datum(at, std::nullopt, n, CaseTag::Inner);
      spec.meta_rank = n;
      spec.meta_dim = n * (n + 1);
      spec.meta_bound = inv(n + 1);
      spec.bound_formula = "1/(n+1)";
      break;
    }
    case Label::CII: {
      auto [p, q] = require_pq(label, params, 2);
      auto at = alias(Family::C, p + q);
      spec.params = {p, q};
      spec.lie_type = at.type;
      spec.datum = make_datum(at, std::nullopt, p, CaseTag::Inner);
      spec.meta_rank = p;
      spec.meta_dim = 4 * p * q;
      spec.meta_bound = inv(2 * (p + q + 1));
      spec.bound_formula = "1/(2(p+q+1))";
      break;
    }
    case Label::Group:
      throw UnknownLabel("GROUP entries are resolved from a Lie type");
    default: {
      no_params();
      auto row = std::find_if(kExceptional.begin(), kExceptional.end(),
                              [&](const ExceptionalRow& r) { return r.label == label; });
      auto at = alias(row->family, row->lie_rank);
      spec.lie_type = at.type;
      spec.meta_rank = row->rank;
      spec.meta_dim = row->dim;
      spec.meta_bound = inv(row->bound_den);
      spec.bound_formula = "1/" + s(row->bound_den);
      switch (label) {
        case Label::EIV:
          spec.datum = make_datum(at, std::vector<int>{5, 1, 4, 3, 2, 0}, std::nullopt,
                                  CaseTag::PureOuter);
          break;
        case Label::FI: spec.datum = make_datum(at, std::nullopt, 1, CaseTag::Inner); break;
        case Label::FII: spec.datum = make_datum(at, std::nullopt, 4, CaseTag::Inner); break;
        case Label::G: spec.datum = make_datum(at, std::nullopt, 2, CaseTag::Inner); break;
        default:
          spec.datum = make_datum(at, std::nullopt, std::nullopt, CaseTag::EqualLengthRule);
          break;
      }
      break;
    }
  }
  check_inner_index(spec);
  return spec;
}

SpaceSpec resolve_group(LieType t) {
  t = LieType::of(t.family, t.rank);
  const int positive = static_cast<int>(enumerate_positive_roots(t).size());
  SpaceSpec spec{Label::Group, {}, t,
                 {DiagramAutomorphism::identity(static_cast<std::size_t>(t.rank)), std::nullopt,
                  CaseTag::GroupManifold},
                 t.rank, t.rank + 2 * positive, inv(dual_coxeter(t)), {}};
  spec.bound_formula = dual_coxeter_formula(t.family);
  if (spec.bound_formula.empty()) spec.bound_formula = spec.meta_bound.str();
  return spec;
}

std::vector<SpaceSpec> catalog(CatalogLimits limits) {
  if (limits.max_n < 1 || limits.max_pq < 1) throw InvalidParams("catalog limits must be positive");
  std::vector<SpaceSpec> out;
  for (int n = 2; n <= limits.max_n; ++n) out.push_back(resolve(Label::AI, {n}));
  for (int n = 2; n <= limits.max_n; ++n) out.push_back(resolve(Label::AII, {n}));
  for (int sum = 2; sum <= limits.max_pq; ++sum) {
    for (int p = 1; 2 * p <= sum; ++p) out.push_back(resolve(Label::AIII, {p, sum - p}));
  }
  for (int sum = 5; sum <= limits.max_pq; ++sum) {
    for (int p = 1; 2 * p <= sum; ++p) out.push_back(resolve(Label::BDI, {p, sum - p}));
  }
  for (int n = 4; n <= limits.max_n; ++n) out.push_back(resolve(Label::DIII, {n}));
  for (int n = 2; n <= limits.max_n; ++n) out.push_back(resolve(Label::CI, {n}));
  for (int sum = 2; sum <= limits.max_pq; ++sum) {
    for (int p = 1; 2 * p <= sum; ++p) out.push_back(resolve(Label::CII, {p, sum - p}));
  }
  for (const auto& row : kExceptional) out.push_back(resolve(row.label));
  for (LieType t : all_types_up_to(limits.max_n)) out.push_back(resolve_group(t));
  return out;
}

Root theta0_on_root(const GantmacherDatum& d, const Root& a) { return d.theta0.apply(a); }

RootPartition partition_roots(const RootSystem& rs, const GantmacherDatum& d) {
  RootPartition part;
  switch (d.tag) {
    case CaseTag::Inner: {
      const std::size_t i = static_cast<std::size_t>(*d.index_i - 1);
      for (const Root& r : rs.positive_roots()) {
        (r.coeffs[i] % 2 != 0 ? part.noncompact : part.compact).push_back(r);
      }
      break;
    }
    case CaseTag::PureOuter:
      for (const Root& r : rs.positive_roots()) {
        (d.theta0.apply(r) != r ? part.moved : part.compact).push_back(r);
      }
      break;
    case CaseTag::SplitAI:
    case CaseTag::GroupManifold:
      part.noncompact = rs.positive_roots();
      break;
    case CaseTag::Mixed:
    case CaseTag::EqualLengthRule:
      throw Unsupported("root partition is not derivable for " + case_tag_name(d.tag) + " data");
  }
  return part;
}

}  // namespace symcurv
