#include "bspec/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace bspec {

namespace {

void require_ambient(const VecSubspace& a, const VecSubspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("subspaces live in different ambient spaces");
}

void require_shape(const MatSubspace& a, const MatSubspace& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix subspaces have different shapes");
}

Matrix stack(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix m(f, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("vector has wrong dimension");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  return m;
}

}  // namespace

VecSubspace::VecSubspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

VecSubspace VecSubspace::full(Field f, std::size_t ambient) {
  return row_space(Matrix::identity(f, ambient));
}

VecSubspace VecSubspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(stack(f, ambient, vectors));
}

VecSubspace VecSubspace::row_space(const Matrix& m) {
  RowEchelon e = rref(m);
  const std::size_t r = e.pivots.size();
  return VecSubspace(e.form.block(0, 0, r, m.cols()), std::move(e.pivots));
}

std::vector<Vec> VecSubspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec VecSubspace::reduce(std::span<const Fq> v) const {
  if (v.size() != ambient()) throw std::invalid_argument("vector has wrong dimension");
  const Field f = field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Fq x = r[pivots_[i]];
    if (x.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient(); ++j) r[j] += f.mul(x, basis_(i, j));
  }
  return r;
}

bool VecSubspace::contains(std::span<const Fq> v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Fq x) { return x.is_zero(); });
}

bool VecSubspace::contains(const VecSubspace& other) const {
  require_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> VecSubspace::coordinates(std::span<const Fq> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec VecSubspace::combine(std::span<const Fq> coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("wrong number of coordinates");
  const Field f = field();
  Vec v(ambient());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient(); ++j) v[j] += f.mul(coords[i], basis_(i, j));
  }
  return v;
}

VecSubspace sum(const VecSubspace& a, const VecSubspace& b) {
  require_ambient(a, b);
  Matrix m(a.field(), a.dim() + b.dim(), a.ambient());
  m.set_block(0, 0, a.basis());
  m.set_block(a.dim(), 0, b.basis());
  return VecSubspace::row_space(m);
}

VecSubspace intersect(const VecSubspace& a, const VecSubspace& b) {
  require_ambient(a, b);
  const std::size_t m = a.ambient();
  // Rows [a | a] and [b | 0]; after reduction, rows with vanishing left half
  // carry a basis of the intersection in their right half.
  Matrix z(a.field(), a.dim() + b.dim(), 2 * m);
  z.set_block(0, 0, a.basis());
  z.set_block(0, m, a.basis());
  z.set_block(a.dim(), 0, b.basis());
  const RowEchelon e = rref(z);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] < m) continue;
    Vec v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = e.form(i, m + j);
    out.push_back(std::move(v));
  }
  return VecSubspace::span(a.field(), m, out);
}

VecSubspace annihilator(const VecSubspace& s) {
  if (s.dim() == 0) return VecSubspace::full(s.field(), s.ambient());
  return VecSubspace::row_space(nullspace(s.basis()));
}

QuotientChart::QuotientChart(VecSubspace w) : w_(std::move(w)) {
  std::vector<bool> pivot(w_.ambient(), false);
  for (auto p : w_.pivots()) pivot[p] = true;
  for (std::size_t j = 0; j < w_.ambient(); ++j)
    if (!pivot[j]) kept_.push_back(j);
}

Vec QuotientChart::project(std::span<const Fq> v) const {
  const Vec r = w_.reduce(v);
  Vec q(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) q[i] = r[kept_[i]];
  return q;
}

Vec QuotientChart::lift(std::span<const Fq> q) const {
  if (q.size() != kept_.size()) throw std::invalid_argument("quotient vector has wrong dimension");
  Vec v(w_.ambient());
  for (std::size_t i = 0; i < kept_.size(); ++i) v[kept_[i]] = q[i];
  return v;
}

MatSubspace::MatSubspace(std::size_t rows, std::size_t cols, VecSubspace flat)
    : rows_(rows), cols_(cols), flat_(std::move(flat)) {
  if (flat_.ambient() != rows * cols) throw std::invalid_argument("flat subspace does not match shape");
}

MatSubspace MatSubspace::span(Field f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& mats) {
  std::vector<Vec> flat;
  for (const auto& m : mats) {
    if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument("matrix has wrong shape");
    flat.emplace_back(m.entries().begin(), m.entries().end());
  }
  return MatSubspace(rows, cols, VecSubspace::span(f, rows * cols, flat));
}

MatSubspace MatSubspace::full(Field f, std::size_t rows, std::size_t cols) {
  return MatSubspace(rows, cols, VecSubspace::full(f, rows * cols));
}

std::vector<Matrix> MatSubspace::basis() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_matrix(i));
  return out;
}

Matrix MatSubspace::basis_matrix(std::size_t i) const {
  const auto row = flat_.basis().entries().subspan(i * rows_ * cols_, rows_ * cols_);
  return Matrix(field(), rows_, cols_, row);
}

bool MatSubspace::contains(const Matrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("matrix has wrong shape");
  return flat_.contains(m.entries());
}

Matrix MatSubspace::element(std::span<const Fq> coords) const { return reshape(flat_.combine(coords)); }

Matrix MatSubspace::reshape(std::span<const Fq> flat) const { return Matrix(field(), rows_, cols_, flat); }

MatSubspace sum(const MatSubspace& a, const MatSubspace& b) {
  require_shape(a, b);
  return MatSubspace(a.rows(), a.cols(), sum(a.flat(), b.flat()));
}

MatSubspace intersect(const MatSubspace& a, const MatSubspace& b) {
  require_shape(a, b);
  return MatSubspace(a.rows(), a.cols(), intersect(a.flat(), b.flat()));
}

MatSubspace trace_orthogonal(const MatSubspace& s) {
  // tr(v u) = sum_{i,j} v_{ji} u_{ij}, so v^T ranges over the annihilator of s.
  const MatSubspace ann(s.rows(), s.cols(), annihilator(s.flat()));
  return transpose_space(ann);
}

MatSubspace transpose_space(const MatSubspace& s) {
  std::vector<Matrix> mats;
  for (const auto& b : s.basis()) mats.push_back(b.transpose());
  return MatSubspace::span(s.field(), s.cols(), s.rows(), mats);
}

MatSubspace conjugate_space(const MatSubspace& s, const Matrix& p) {
  const Matrix pinv = inverse(p);
  std::vector<Matrix> mats;
  for (const auto& b : s.basis()) mats.push_back(p * b * pinv);
  return MatSubspace::span(s.field(), s.rows(), s.cols(), mats);
}

MatSubspace left_multiply(const Matrix& a, const MatSubspace& s) {
  std::vector<Matrix> mats;
  for (const auto& b : s.basis()) mats.push_back(a * b);
  return MatSubspace::span(s.field(), a.rows(), s.cols(), mats);
}

MatSubspace right_multiply(const MatSubspace& s, const Matrix& a) {
  std::vector<Matrix> mats;
  for (const auto& b : s.basis()) mats.push_back(b * a);
  return MatSubspace::span(s.field(), s.rows(), a.cols(), mats);
}

MatSubspace tensors_with_form(Field f, std::span<const Fq> phi) {
  const std::size_t n = phi.size();
  std::vector<Matrix> mats;
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(y.begin(), y.end(), Fq());
    y[i] = f.one();
    mats.push_back(tensor(f, phi, y));
  }
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace tensors_with_vector(Field f, std::span<const Fq> y) {
  const std::size_t n = y.size();
  std::vector<Matrix> mats;
  Vec phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(phi.begin(), phi.end(), Fq());
    phi[i] = f.one();
    mats.push_back(tensor(f, phi, y));
  }
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace trace_zero_tensors_into(Field f, std::span<const Fq> x) {
  const std::size_t n = x.size();
  const VecSubspace line = VecSubspace::span(f, n, {Vec(x.begin(), x.end())});
  std::vector<Matrix> mats;
  for (const auto& phi : annihilator(line).basis_vectors()) mats.push_back(tensor(f, phi, x));
  return MatSubspace::span(f, n, n, mats);
}

}  // namespace bspec
