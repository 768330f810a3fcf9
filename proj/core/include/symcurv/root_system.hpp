#pragma once

#include "symcurv/lie_type.hpp"
#include "symcurv/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace symcurv {

using IntMatrix = std::vector<std::vector<int>>;

/// A root written in simple-root coordinates: sum_k coeffs[k] * alpha_{k+1}.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend auto operator<=>(const Root&, const Root&) = default;

  static Root simple(std::size_t rank, std::size_t index);  // 0-based index
};

/// "a1+2a2+a3" style text.
std::string to_string(const Root& r);

/// Deterministic root order: ascending height, then coefficient vectors in
/// descending lexicographic order.
bool root_order(const Root& a, const Root& b);

/// "Higher" for greedy selection: larger height, then lexicographically larger.
bool higher(const Root& a, const Root& b);

enum class Sign { Negative = -1, Positive = 1 };

/// Cartan matrix with A[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
///
/// Node numbering: B_l has a_l short, C_l has a_l long, D_l branches at
/// a_{l-2} into a_{l-1}, a_l, E_n has a_2 on the branch attached to a_4,
/// F4 has a_3, a_4 short and G2 has a_1 short.
IntMatrix cartan_matrix(LieType t);

/// Positive roots by height induction with the root-string rule: b + a_i is a
/// root iff p - A(b, a_i) > 0, where p is the largest k with b - k a_i a root.
std::vector<Root> enumerate_positive_roots(LieType t);

/// The immutable root data of one simple type.
class RootSystem {
 public:
  explicit RootSystem(LieType t);

  LieType type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const IntMatrix& cartan() const { return cartan_; }
  /// Gram matrix of the simple roots under the Killing form.
  const BilinearForm& gram() const { return gram_; }
  /// Sorted by root_order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest() const { return positive_.back(); }

  Rational inner(const Root& a, const Root& b) const;
  Rational sq_length(const Root& a) const { return inner(a, a); }
  /// 2(b, a)/(a, a). Throws NotInteger if that is not an integer.
  int cartan_integer(const Root& b, const Root& a) const;

  /// Sign of the root v when v or -v is a root, otherwise nullopt.
  std::optional<Sign> is_root(std::span<const int> v) const;
  bool is_root(const Root& r) const { return is_root(r.coeffs).has_value(); }

  /// Distinct squared root lengths, ascending.
  std::vector<Rational> root_lengths() const;
  Rational max_root_sq_length() const { return root_lengths().back(); }

 private:
  LieType type_;
  IntMatrix cartan_;
  BilinearForm gram_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
  // gram_ = scaled_gram_ / gram_den_, for integer-only inner products
  std::vector<std::vector<std::int64_t>> scaled_gram_;
  std::int64_t gram_den_ = 1;
};

/// Gram matrix of the simple roots normalized so that, for every root a,
/// (a, a) * sum_{b in positive roots} A(b, a)^2 = 2.
BilinearForm killing_gram(LieType t);

Root highest_root(const RootSystem& rs);

}  // namespace symcurv
