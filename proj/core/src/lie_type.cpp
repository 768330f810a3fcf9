#include "symcurv/lie_type.hpp"

#include "symcurv/errors.hpp"

#include <charconv>
#include <numeric>

namespace symcurv {

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return m;
}

int fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

AliasedType alias(Family family, int rank) {
  const std::string what = family_name(family) + " with rank " + std::to_string(rank);
  if (int fixed = fixed_rank(family); fixed != 0) {
    if (rank != fixed) throw InvalidRank("invalid rank for " + what);
    return {LieType{family, rank}, identity_map(rank)};
  }
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidRank("invalid type " + what);
      break;
    case Family::B:
      if (rank < 2) throw InvalidRank("invalid type " + what);
      break;
    case Family::C:
      if (rank < 2) throw InvalidRank("invalid type " + what);
      // C2 short a1, long a2  ->  B2 long a1, short a2.
      if (rank == 2) return {LieType{Family::B, 2}, {1, 0}};
      break;
    case Family::D:
      if (rank < 3) throw InvalidRank("invalid type " + what);
      // D3 chain a2 - a1 - a3  ->  A3 chain a1 - a2 - a3.
      if (rank == 3) return {LieType{Family::A, 3}, {1, 0, 2}};
      break;
    default:
      break;
  }
  return {LieType{family, rank}, identity_map(rank)};
}

LieType LieType::of(Family family, int rank) { return alias(family, rank).type; }

LieType LieType::parse(std::string_view text) {
  static constexpr std::pair<std::string_view, Family> kExceptional[] = {
      {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8},
      {"F4", Family::F4}, {"G2", Family::G2}};
  for (const auto& [name, fam] : kExceptional) {
    if (text == name) return of(fam, fixed_rank(fam));
  }
  if (text.size() < 2) throw UnknownLabel("unknown Lie type '" + std::string(text) + "'");
  Family fam;
  switch (text[0]) {
    case 'A': fam = Family::A; break;
    case 'B': fam = Family::B; break;
    case 'C': fam = Family::C; break;
    case 'D': fam = Family::D; break;
    case 'E':
    case 'F':
    case 'G':
      throw InvalidRank("invalid rank for exceptional type '" + std::string(text) + "'");
    default: throw UnknownLabel("unknown Lie type '" + std::string(text) + "'");
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw UnknownLabel("unknown Lie type '" + std::string(text) + "'");
  }
  return of(fam, rank);
}

std::string LieType::name() const {
  if (fixed_rank(family) != 0) return family_name(family);
  return family_name(family) + std::to_string(rank);
}

bool LieType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E6 ||
         family == Family::E7 || family == Family::E8;
}

std::vector<LieType> all_types_up_to(int max_rank) {
  std::vector<LieType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Family::B, l});
  for (int l = 3; l <= max_rank; ++l) out.push_back({Family::C, l});
  for (int l = 4; l <= max_rank; ++l) out.push_back({Family::D, l});
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2}) {
    if (fixed_rank(f) <= max_rank) out.push_back({f, fixed_rank(f)});
  }
  return out;
}

}  // namespace symcurv
