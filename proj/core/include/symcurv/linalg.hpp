#pragma once

#include "symcurv/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace symcurv {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

RatVector to_rational(std::span<const int> v);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

/// Symmetric matrix of rationals, read as the bilinear form (x, y) = x^T M y.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws std::invalid_argument unless `matrix` is square and symmetric.
  explicit BilinearForm(RatMatrix matrix);

  std::size_t dim() const { return matrix_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  const RatMatrix& matrix() const { return matrix_; }

  Rational apply(const RatVector& x, const RatVector& y) const;
  Rational apply(std::span<const int> x, std::span<const int> y) const;
  Rational norm_sq(const RatVector& x) const { return apply(x, x); }

  /// Sylvester's criterion over all leading principal minors.
  bool is_positive_definite() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  RatMatrix matrix_;
};

/// Exact determinant by fraction-valued elimination.
Rational determinant(RatMatrix m);

RatVector multiply(const RatMatrix& m, const RatVector& x);

/// Returns the unique x with m x = b. Throws SingularMatrix otherwise.
RatVector solve_linear(const RatMatrix& m, const RatVector& b);

/// Orthogonalizes `vs` under `form` without normalizing.
///
/// out[k] is vs[k] minus its projection onto out[0..k), then rescaled by a
/// positive rational so that its entries are coprime integers. Throws
/// DependentInput when a prefix of `vs` is linearly dependent.
std::vector<RatVector> gram_schmidt(std::span<const RatVector> vs, const BilinearForm& form);

/// Squared length of the orthogonal projection of v onto span(basis).
/// An empty basis gives 0. Throws DependentInput for a dependent basis.
Rational proj_sq_length(const RatVector& v, std::span<const RatVector> basis,
                        const BilinearForm& form);

/// Precomputed orthogonal projection onto a fixed span, for evaluating many
/// vectors against the same subspace.
class Projector {
 public:
  Projector(std::span<const RatVector> basis, const BilinearForm& form);

  Rational sq_length(const RatVector& v) const;
  Rational sq_length(std::span<const int> v) const;

  const std::vector<RatVector>& orthogonal_basis() const { return ortho_; }
  std::size_t rank() const { return ortho_.size(); }

 private:
  std::vector<RatVector> ortho_;
  std::vector<RatVector> form_times_ortho_;  // form * ortho_[k]
  std::vector<Rational> norms_;              // (ortho_[k], ortho_[k])
};

}  // namespace symcurv
