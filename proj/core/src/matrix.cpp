#include "bspec/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bspec {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square())
    throw std::invalid_argument(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
}

void require_same_field(Field a, Field b) {
  if (!(a == b)) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::span<const Fq> entries)
    : field_(f), rows_(rows), cols_(cols), e_(entries.begin(), entries.end()) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries.size()));
  for (Fq x : e_)
    if (!f.contains_code(x.code()))
      throw std::invalid_argument("entry code " + std::to_string(x.code()) + " outside " + f.name());
}

Matrix Matrix::from_codes(Field f, std::size_t rows, std::size_t cols,
                          std::initializer_list<std::uint32_t> codes) {
  return from_codes(f, rows, cols, std::span<const std::uint32_t>(codes.begin(), codes.size()));
}

Matrix Matrix::from_codes(Field f, std::size_t rows, std::size_t cols, std::span<const std::uint32_t> codes) {
  if (codes.size() != rows * cols)
    throw std::invalid_argument("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(codes.size()));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < codes.size(); ++i) m.e_[i] = f.element(codes[i]);
  return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::unit(Field f, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Matrix m(f, rows, cols);
  m(i, j) = f.one();
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Fq x) { return x.is_zero(); });
}

Vec Matrix::row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Fq Matrix::trace() const {
  require_square(*this, "trace");
  Fq s;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Matrix Matrix::scaled(Fq s) const {
  Matrix r(*this);
  for (Fq& x : r.e_) x = field_.mul(x, s);
  return r;
}

Vec Matrix::apply(std::span<const Fq> x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += field_.mul((*this)(i, j), x[j]);
  return y;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::invalid_argument("block out of range");
  Matrix b(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::invalid_argument("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ",[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ",";
      out += std::to_string((*this)(i, j).code());
    }
    out += "]";
  }
  return out + "]";
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  const Field f = a.field_;
  Matrix r(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fq x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += f.mul(x, b(k, j));
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RowEchelon rref(const Matrix& m) {
  const Field f = m.field();
  Matrix a(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Fq s = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Fq x = a(i, c);
      if (x.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) += f.mul(x, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Fq det(const Matrix& m) {
  require_square(m, "det");
  const Field f = m.field();
  Matrix a(m);
  const std::size_t n = a.rows();
  Fq d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Fq();
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
    d = f.mul(d, a(c, c));
    const Fq s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Fq x = f.mul(a(i, c), s);
      if (x.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) += f.mul(x, a(c, j));
    }
  }
  return d;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  RowEchelon e = rref(aug);
  if (n == 0) return m;
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.form.block(0, n, n, n);
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw DomainError("matrix is singular");
  return *inv;
}

Matrix nullspace(const Matrix& m) {
  const Field f = m.field();
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  // Basis vector for free column j: x_j = 1, x_{pivot_i} = -form(i, j).
  // Ordering free columns from last to first puts the result in RREF.
  Matrix ns(f, free.size(), n);
  for (std::size_t b = 0; b < free.size(); ++b) {
    const std::size_t j = free[free.size() - 1 - b];
    ns(b, j) = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) ns(b, e.pivots[i]) = e.form(i, j);
  }
  return rref(ns).form;
}

Poly char_poly(const Matrix& m) { return char_poly_hessenberg(m); }

Poly char_poly_hessenberg(const Matrix& m) {
  require_square(m, "char_poly");
  return char_poly_of(m.field(), m.rows(), m.entries());
}

Poly char_poly_of(Field f, std::size_t n, std::span<const Fq> entries) {
  if (entries.size() != n * n) throw std::invalid_argument("char_poly: entry count mismatch");
  boost::container::small_vector<Fq, 36> a(entries.begin(), entries.end());
  auto at = [&](std::size_t i, std::size_t j) -> Fq& { return a[i * n + j]; };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && at(p, j).is_zero()) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, p), at(r, j + 1));
    }
    const Fq inv = f.inv(at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const Fq u = f.mul(at(i, j), inv);
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) at(i, c) += f.mul(u, at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) += f.mul(u, at(r, i));
    }
  }

  // p_m = (t + h_{m,m}) p_{m-1} + sum_{i<m} h_{i,m} (h_{i+1,i} ... h_{m,m-1}) p_{i-1}, 1-based.
  boost::container::small_vector<Poly::Coeffs, 9> p(n + 1);
  p[0].assign(1, f.one());
  for (std::size_t mm = 1; mm <= n; ++mm) {
    Poly::Coeffs& cur = p[mm];
    cur.assign(mm + 1, Fq());
    const Poly::Coeffs& prev = p[mm - 1];
    const Fq h = at(mm - 1, mm - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] += prev[d];
      cur[d] += f.mul(h, prev[d]);
    }
    Fq prod = f.one();
    for (std::size_t i = mm - 1; i >= 1; --i) {
      prod = f.mul(prod, at(i, i - 1));
      if (prod.is_zero()) break;
      const Fq coef = f.mul(at(i - 1, mm - 1), prod);
      if (coef.is_zero()) continue;
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) cur[d] += f.mul(coef, p[i - 1][d]);
    }
  }
  return Poly(f, std::move(p[n]));
}

Poly char_poly_berkowitz(const Matrix& m) {
  require_square(m, "char_poly");
  const Field f = m.field();
  const std::size_t n = m.rows();
  // Coefficients stored highest degree first while iterating.
  std::vector<Fq> p{f.one()};
  for (std::size_t r = 1; r <= n; ++r) {
    // Leading principal r x r block: [[A, C], [R, a]] with A of size r-1.
    const std::size_t s = r - 1;
    std::vector<Fq> toeplitz(r + 1);
    toeplitz[0] = f.one();
    toeplitz[1] = m(s, s);
    Vec v(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = m(i, s);
    for (std::size_t k = 2; k <= r; ++k) {
      Fq acc;
      for (std::size_t i = 0; i < s; ++i) acc += f.mul(m(s, i), v[i]);
      toeplitz[k] = acc;
      Vec w(s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) w[i] += f.mul(m(i, j), v[j]);
      v = std::move(w);
    }
    std::vector<Fq> next(r + 1);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j) next[i] += f.mul(toeplitz[i - j], p[j]);
    p = std::move(next);
  }
  std::reverse(p.begin(), p.end());
  return Poly(f, p);
}

Poly min_poly(const Matrix& m) {
  require_square(m, "min_poly");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Poly result = Poly::constant(f, f.one());
  for (std::size_t e = 0; e < n; ++e) {
    // Echelon rows of Krylov vectors, each paired with its coefficient
    // vector expressing it as a combination of the raw powers M^i e.
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
    std::vector<Vec> combos;
    Vec v(n);
    v[e] = f.one();
    for (std::size_t d = 0; d <= n; ++d) {
      Vec red = v;
      Vec combo(n + 1);
      combo[d] = f.one();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Fq x = red[pivots[r]];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) red[j] += f.mul(x, rows[r][j]);
        for (std::size_t j = 0; j <= n; ++j) combo[j] += f.mul(x, combos[r][j]);
      }
      auto piv = std::find_if(red.begin(), red.end(), [](Fq x) { return !x.is_zero(); });
      if (piv == red.end()) {
        result = poly_lcm(result, Poly(f, combo));
        break;
      }
      const std::size_t pc = static_cast<std::size_t>(piv - red.begin());
      const Fq s = f.inv(red[pc]);
      for (auto& x : red) x = f.mul(x, s);
      for (auto& x : combo) x = f.mul(x, s);
      rows.push_back(std::move(red));
      combos.push_back(std::move(combo));
      pivots.push_back(pc);
      v = m.apply(v);
    }
  }
  return result;
}

Matrix eval_at(const Poly& p, const Matrix& m) {
  require_square(m, "eval_at");
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + id.scaled(p.coeffs()[i]);
  return acc;
}

Matrix companion(const Poly& r) {
  if (!r.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
  if (r.degree() < 1) throw std::invalid_argument("companion: degree must be at least 1");
  const std::size_t n = static_cast<std::size_t>(r.degree());
  Matrix c(r.field(), n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = r.field().one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = r.coeff(i);
  return c;
}

Matrix tensor(Field f, std::span<const Fq> phi, std::span<const Fq> y) {
  Matrix t(f, y.size(), phi.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j) t(i, j) = f.mul(y[i], phi[j]);
  return t;
}

Matrix conjugate(const Matrix& m, const Matrix& p) {
  require_square(m, "conjugate");
  if (p.rows() != m.rows() || !p.is_square()) throw std::invalid_argument("conjugate: shape mismatch");
  return p * m * inverse(p);
}

bool is_regular_hessenberg(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (!m(i, j).is_zero()) return false;
  for (std::size_t j = 0; j + 1 < m.rows(); ++j)
    if (m(j + 1, j).is_zero()) return false;
  return true;
}

Fq dot(Field f, std::span<const Fq> a, std::span<const Fq> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Fq s;
  for (std::size_t i = 0; i < a.size(); ++i) s += f.mul(a[i], b[i]);
  return s;
}

}  // namespace bspec
