#include "symcurv/linalg.hpp"

#include "symcurv/errors.hpp"

#include <stdexcept>
#include <utility>

namespace symcurv {

namespace {

using Integer = Rational::Integer;

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

// Scales v by a positive rational so its entries become coprime integers.
RatVector make_primitive(const RatVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, x.denominator());
  Integer gcd_num = 0;
  for (const auto& x : v) {
    Integer n = (x * Rational(lcm_den, 1)).numerator();
    gcd_num = boost::multiprecision::gcd(gcd_num, n);
  }
  if (gcd_num.is_zero()) return v;
  if (gcd_num < 0) gcd_num = -gcd_num;
  Rational scale(lcm_den, gcd_num);
  return scale * v;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

RatVector to_rational(std::span<const int> v) {
  RatVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size(), "vector addition");
  RatVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size(), "vector subtraction");
  RatVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

BilinearForm::BilinearForm(RatMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  for (const auto& row : matrix_) require_same_size(row.size(), n, "bilinear form");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix_[i][j] != matrix_[j][i]) throw std::invalid_argument("bilinear form is not symmetric");
    }
  }
}

Rational BilinearForm::apply(const RatVector& x, const RatVector& y) const {
  require_same_size(x.size(), dim(), "bilinear form");
  require_same_size(y.size(), dim(), "bilinear form");
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!y[j].is_zero()) row += matrix_[i][j] * y[j];
    }
    s += x[i] * row;
  }
  return s;
}

Rational BilinearForm::apply(std::span<const int> x, std::span<const int> y) const {
  require_same_size(x.size(), dim(), "bilinear form");
  require_same_size(y.size(), dim(), "bilinear form");
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Rational row;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] != 0) row += matrix_[i][j] * Rational(y[j]);
    }
    s += Rational(x[i]) * row;
  }
  return s;
}

bool BilinearForm::is_positive_definite() const {
  for (std::size_t k = 1; k <= dim(); ++k) {
    RatMatrix minor(k, RatVector(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = matrix_[i][j];
    }
    if (determinant(std::move(minor)).sign() <= 0) return false;
  }
  return true;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) require_same_size(row.size(), n, "determinant");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

RatVector multiply(const RatMatrix& m, const RatVector& x) {
  RatVector out;
  out.reserve(m.size());
  for (const auto& row : m) {
    require_same_size(row.size(), x.size(), "matrix-vector product");
    out.push_back(dot(row, x));
  }
  return out;
}

RatVector solve_linear(const RatMatrix& m, const RatVector& b) {
  const std::size_t n = m.size();
  require_same_size(b.size(), n, "solve_linear");
  RatMatrix a(m);
  for (auto& row : a) require_same_size(row.size(), n, "solve_linear");
  RatVector rhs(b);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix has no unique solution");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

std::vector<RatVector> gram_schmidt(std::span<const RatVector> vs, const BilinearForm& form) {
  std::vector<RatVector> out;
  std::vector<Rational> norms;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    RatVector w = v;
    for (std::size_t k = 0; k < out.size(); ++k) {
      Rational c = form.apply(v, out[k]) / norms[k];
      if (!c.is_zero()) w = w - c * out[k];
    }
    w = make_primitive(w);
    Rational n = form.norm_sq(w);
    if (n.is_zero()) throw DependentInput("Gram-Schmidt input is linearly dependent");
    out.push_back(std::move(w));
    norms.push_back(std::move(n));
  }
  return out;
}

Rational proj_sq_length(const RatVector& v, std::span<const RatVector> basis,
                        const BilinearForm& form) {
  Rational total;
  for (const auto& sigma : gram_schmidt(basis, form)) {
    Rational c = form.apply(v, sigma);
    total += c * c / form.norm_sq(sigma);
  }
  return total;
}

Projector::Projector(std::span<const RatVector> basis, const BilinearForm& form)
    : ortho_(gram_schmidt(basis, form)) {
  for (const auto& sigma : ortho_) {
    form_times_ortho_.push_back(multiply(form.matrix(), sigma));
    norms_.push_back(form.norm_sq(sigma));
  }
}

Rational Projector::sq_length(const RatVector& v) const {
  Rational total;
  for (std::size_t k = 0; k < ortho_.size(); ++k) {
    Rational c = dot(v, form_times_ortho_[k]);
    if (!c.is_zero()) total += c * c / norms_[k];
  }
  return total;
}

Rational Projector::sq_length(std::span<const int> v) const { return sq_length(to_rational(v)); }

}  // namespace symcurv
