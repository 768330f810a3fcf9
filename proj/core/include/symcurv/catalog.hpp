#pragma once

#include "symcurv/rational.hpp"
#include "symcurv/root_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcurv {

/// Symmetric-space families (Helgason's labels) plus compact group manifolds.
enum class Label {
  AI, AII, AIII, BDI, DIII, CI, CII,
  EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX,
  FI, FII, G,
  Group,
};

std::string label_name(Label l);
/// Accepts "AI" ... "G" and "GROUP". Throws UnknownLabel.
Label parse_label(std::string_view text);
bool is_parametric(Label l);
/// Families parametrized by (p, q) rather than n.
bool is_pq_family(Label l);

/// How the curvature bound of a space is obtained.
enum class CaseTag {
  Inner,            // theta = exp(2 pi i ad h_i): parity of m_i decides noncompactness
  SplitAI,          // the maximal torus already lies in p; restricted roots are roots
  PureOuter,        // theta = theta0, a diagram involution
  Mixed,            // theta0 * exp(2 pi i ad h_i) with theta0 != 1
  EqualLengthRule,  // single root length; bound is that length
  GroupManifold,    // compact simple group with bi-invariant metric
};

std::string case_tag_name(CaseTag t);

/// An involutive permutation of the Dynkin nodes preserving the Cartan matrix.
class DiagramAutomorphism {
 public:
  static DiagramAutomorphism identity(std::size_t rank);
  /// `perm` is 0-based. Throws std::invalid_argument unless it is an
  /// involution preserving `cartan`.
  DiagramAutomorphism(std::vector<int> perm, const IntMatrix& cartan);

  const std::vector<int>& perm() const { return perm_; }
  bool is_identity() const;
  std::size_t rank() const { return perm_.size(); }

  /// m_j(theta0 a) = m_{pi^{-1}(j)}(a).
  Root apply(const Root& a) const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

 private:
  explicit DiagramAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

/// theta = theta0 * exp(2 pi i ad h_i), with (h_i, a_j) = delta_ij / 2.
struct GantmacherDatum {
  DiagramAutomorphism theta0;
  std::optional<int> index_i;  // 1-based node of h_i
  CaseTag tag;
};

/// One irreducible compact symmetric space (or compact simple group).
struct SpaceSpec {
  Label label;
  std::vector<int> params;  // {n} or {p, q} with p <= q; empty otherwise
  LieType lie_type;
  GantmacherDatum datum;
  int meta_rank = 0;
  int meta_dim = 0;
  Rational meta_bound;        // closed-form curvature upper bound
  std::string bound_formula;  // symbolic form of meta_bound

  /// "AIII(p=2,q=3)", "GROUP(G2)", "FI".
  std::string name() const;
  /// "SU(5)/S(U(2)xU(3))"; empty for exceptional type I entries.
  std::string space_name() const;
  /// Table heading for the family: "AI", "BDI", "GROUP(G2)".
  std::string type_label() const;
};

struct CatalogLimits {
  int max_n = 12;
  int max_pq = 12;
};

/// Every valid entry within the limits, all families plus one group manifold
/// per canonical Lie type of rank <= max_n, in a fixed order.
std::vector<SpaceSpec> catalog(CatalogLimits limits = {});

/// Validates, canonicalizes (p <= q) and assigns the dispatch rule.
/// Throws InvalidParams, or UnknownLabel for Label::Group (use resolve_group).
SpaceSpec resolve(Label label, std::vector<int> params = {});
SpaceSpec resolve_group(LieType t);

Root theta0_on_root(const GantmacherDatum& d, const Root& a);

/// Positive halves of the three classes; the full classes are these and
/// their negatives.
struct RootPartition {
  std::vector<Root> moved;       // theta0 a != a
  std::vector<Root> noncompact;  // fixed, root vector in p
  std::vector<Root> compact;     // fixed, root vector in k
};

/// Throws Unsupported for Mixed and EqualLengthRule data.
RootPartition partition_roots(const RootSystem& rs, const GantmacherDatum& d);

}  // namespace symcurv
