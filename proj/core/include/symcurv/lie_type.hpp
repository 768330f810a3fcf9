#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace symcurv {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

/// A complex simple Lie algebra type, always in canonical form.
///
/// The aliases C2 and D3 are folded into B2 and A3; B1, C1, D1 and D2 are
/// rejected. Use `alias()` when the caller needs the node relabeling.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Validates and canonicalizes. Throws InvalidRank.
  static LieType of(Family family, int rank);

  /// Parses "A5", "B3", "E6", "G2" etc. Throws InvalidRank or UnknownLabel.
  static LieType parse(std::string_view text);

  /// "A5", "E6", ...
  std::string name() const;

  bool simply_laced() const;

  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// A possibly non-canonical type request resolved to its canonical type.
/// node_map[k] is the 0-based canonical node carrying requested node k.
struct AliasedType {
  LieType type;
  std::vector<int> node_map;
};

/// As LieType::of, but keeps the node relabeling (identity unless aliased).
AliasedType alias(Family family, int rank);

std::string family_name(Family f);

/// All canonical types with rank <= max_rank, in (family, rank) order,
/// without duplicates.
std::vector<LieType> all_types_up_to(int max_rank);

}  // namespace symcurv
