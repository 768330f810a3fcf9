#include "symcurv/root_system.hpp"

#include "symcurv/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace symcurv {

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Root operator-(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

Root Root::simple(std::size_t rank, std::size_t index) {
  Root r{std::vector<int>(rank, 0)};
  r.coeffs.at(index) = 1;
  return r;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    int c = r.coeffs[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << 'a' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

bool root_order(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

bool higher(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha > hb;
  return a.coeffs > b.coeffs;
}

IntMatrix cartan_matrix(LieType t) {
  t = LieType::of(t.family, t.rank);
  const int l = t.rank;
  IntMatrix a(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
  auto link = [&](int i, int j) {  // 1-based, simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  for (int i = 0; i < l; ++i) a[i][i] = 2;

  switch (t.family) {
    case Family::A:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      a[l - 2][l - 1] = -2;  // a_l short
      break;
    case Family::C:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      a[l - 1][l - 2] = -2;  // a_l long
      break;
    case Family::D:
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 2, l);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < l; ++i) link(i, i + 1);
      break;
    case Family::F4:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[1][2] = -2;  // a_2 long, a_3 short
      break;
    case Family::G2:
      a[0][1] = -1;
      a[1][0] = -3;  // a_1 short
      break;
  }
  return a;
}

namespace {

int cartan_pairing(const IntMatrix& cartan, const std::vector<int>& beta, std::size_t i) {
  int s = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) s += beta[k] * cartan[k][i];
  return s;
}

// Relative squared lengths of the simple roots, up to one global scale.
std::vector<Rational> relative_lengths(const IntMatrix& cartan) {
  const std::size_t l = cartan.size();
  std::vector<std::optional<Rational>> len(l);
  len[0] = Rational(1);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j || cartan[i][j] == 0 || len[j]) continue;
      // A[i][j] / A[j][i] = (a_i, a_i) / (a_j, a_j)
      len[j] = *len[i] * Rational(cartan[j][i]) / Rational(cartan[i][j]);
      queue.push_back(j);
    }
  }
  std::vector<Rational> out;
  for (auto& x : len) {
    if (!x) throw InvalidRank("Dynkin diagram is not connected");
    out.push_back(*x);
  }
  return out;
}

BilinearForm gram_from_lengths(const IntMatrix& cartan, const std::vector<Rational>& lengths) {
  const std::size_t l = cartan.size();
  RatMatrix g(l, RatVector(l));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      g[i][j] = Rational(cartan[i][j]) * lengths[j] / Rational(2);
    }
  }
  return BilinearForm(std::move(g));
}

std::vector<Root> enumerate_from_cartan(const IntMatrix& cartan) {
  const std::size_t l = cartan.size();
  std::set<std::vector<int>> known;
  std::vector<Root> all;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < l; ++i) {
    layer.push_back(Root::simple(l, i));
    known.insert(layer.back().coeffs);
  }
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Root> next;
    for (const Root& beta : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        int p = 0;
        std::vector<int> down = beta.coeffs;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        int q = p - cartan_pairing(cartan, beta.coeffs, i);
        if (q <= 0) continue;
        Root up = beta;
        up.coeffs[i] += 1;
        if (known.insert(up.coeffs).second) next.push_back(std::move(up));
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), root_order);
  return all;
}

}  // namespace

std::vector<Root> enumerate_positive_roots(LieType t) { return enumerate_from_cartan(cartan_matrix(t)); }

BilinearForm killing_gram(LieType t) {
  IntMatrix cartan = cartan_matrix(t);
  std::vector<Root> roots = enumerate_from_cartan(cartan);
  std::vector<Rational> lengths = relative_lengths(cartan);
  // With (a_1, a_1) = lengths[0], (a_1, a_1) must equal 2 / sum_b A(b, a_1)^2.
  Rational s;
  for (const Root& b : roots) {
    int c = cartan_pairing(cartan, b.coeffs, 0);
    s += Rational(c * c);
  }
  Rational scale = Rational(2) / s / lengths[0];
  for (auto& x : lengths) x *= scale;
  return gram_from_lengths(cartan, lengths);
}

RootSystem::RootSystem(LieType t)
    : type_(LieType::of(t.family, t.rank)),
      cartan_(cartan_matrix(type_)),
      gram_(killing_gram(type_)),
      positive_(enumerate_from_cartan(cartan_)) {
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k].coeffs, k);

  Rational::Integer den = 1;
  for (const auto& row : gram_.matrix()) {
    for (const Rational& x : row) den = boost::multiprecision::lcm(den, x.denominator());
  }
  gram_den_ = den.convert_to<std::int64_t>();
  for (const auto& row : gram_.matrix()) {
    auto& out = scaled_gram_.emplace_back();
    for (const Rational& x : row) out.push_back((x.numerator() * (den / x.denominator())).convert_to<std::int64_t>());
  }
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  std::size_t l = rank();
  if (a.coeffs.size() != l || b.coeffs.size() != l) return gram_.apply(a.coeffs, b.coeffs);  // throws
  std::int64_t s = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (a.coeffs[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < l; ++j) row += scaled_gram_[i][j] * b.coeffs[j];
    s += a.coeffs[i] * row;
  }
  return Rational(s, gram_den_);
}

int RootSystem::cartan_integer(const Root& b, const Root& a) const {
  Rational v = Rational(2) * inner(b, a) / sq_length(a);
  if (!v.is_integer()) throw NotInteger("Cartan number is not integral: " + v.str());
  return v.numerator().convert_to<int>();
}

std::optional<Sign> RootSystem::is_root(std::span<const int> v) const {
  if (v.size() != rank()) return std::nullopt;
  std::vector<int> key(v.begin(), v.end());
  if (index_.contains(key)) return Sign::Positive;
  for (int& c : key) c = -c;
  if (index_.contains(key)) return Sign::Negative;
  return std::nullopt;
}

std::vector<Rational> RootSystem::root_lengths() const {
  std::vector<Rational> out;
  for (const Root& r : positive_) {
    Rational len = sq_length(r);
    if (std::find(out.begin(), out.end(), len) == out.end()) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Root highest_root(const RootSystem& rs) { return rs.highest(); }

}  // namespace symcurv
