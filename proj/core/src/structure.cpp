#include "bspec/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "bspec/enumerate.hpp"
#include "bspec/parallel.hpp"

namespace bspec {

namespace {

constexpr std::uint64_t kPointChunk = 64;

// One solution of A x = b, or nullopt.
std::optional<Vec> solve_linear(const Matrix& a, std::span<const Fq> b) {
  const Field f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const RowEchelon e = rref(aug);
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.form(r, a.cols());
  }
  return x;
}

}  // namespace

std::string to_string(Adaptedness a) {
  switch (a) {
    case Adaptedness::adapted: return "adapted";
    case Adaptedness::weakly_adapted: return "weakly_adapted";
    case Adaptedness::neither: return "neither";
  }
  return "neither";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget: return "budget";
  }
  return "none";
}

std::vector<Vec> AdaptedScanReport::non_adapted() const {
  std::vector<Vec> out;
  for (const auto& p : points)
    if (p.kind != Adaptedness::adapted) out.push_back(p.point);
  return out;
}

std::size_t adapted_intersection_dim(const MatSubspace& s, std::span<const Fq> x) {
  const MatSubspace w = trace_zero_tensors_into(s.field(), x);
  return s.dim() + w.dim() - sum(s, w).dim();
}

AdaptedScanReport adapted_scan(const MatSubspace& s, unsigned workers) {
  if (!s.is_square()) throw std::invalid_argument("adapted_scan: square matrices required");
  const Field f = s.field();
  const std::size_t n = s.rows();
  AdaptedScanReport rep;
  rep.n = n;
  const auto count = projective_count(f.order(), n);
  if (!count) throw std::invalid_argument("adapted_scan: too many projective points");
  rep.points.resize(*count);
  const VecSubspace full = VecSubspace::full(f, n);
  Executor(workers).for_chunks(*count, kPointChunk, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      AdaptedPoint& p = rep.points[i];
      p.index = i;
      p.point = projective_point_at(full, i);
      p.intersection_dim = adapted_intersection_dim(s, p.point);
      p.kind = p.intersection_dim == 0   ? Adaptedness::adapted
               : p.intersection_dim == 1 ? Adaptedness::weakly_adapted
                                         : Adaptedness::neither;
    }
  });
  for (const auto& p : rep.points) {
    if (p.kind == Adaptedness::adapted) ++rep.adapted;
    // Adapted vectors are weakly adapted too.
    if (p.intersection_dim <= 1) ++rep.weakly_adapted;
    if (p.kind == Adaptedness::neither) ++rep.neither;
  }
  return rep;
}

MatSubspace hurdle_tensors(const VecSubspace& p) {
  if (p.dim() != 2) throw std::invalid_argument("hurdle_tensors: P must be 2-dimensional");
  const Field f = p.field();
  const std::size_t n = p.ambient();
  const Vec phi1 = p.basis_vector(0);
  const Vec phi2 = p.basis_vector(1);
  Matrix row(f, 1, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    row(0, j) = phi1[j];
    row(0, n + j) = phi2[j];
  }
  const Matrix ker = nullspace(row);
  std::vector<Matrix> mats;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    const Vec k = ker.row(r);
    const std::span<const Fq> y1(k.data(), n);
    const std::span<const Fq> y2(k.data() + n, n);
    mats.push_back(tensor(f, phi1, y1) + tensor(f, phi2, y2));
  }
  return MatSubspace::span(f, n, n, mats);
}

bool is_hurdle_certificate(const MatSubspace& s, const VecSubspace& p) {
  if (!s.is_square() || p.dim() != 2 || p.ambient() != s.rows()) return false;
  return s.contains(hurdle_tensors(p));
}

HurdleSearch detect_hurdle(const MatSubspace& s, std::uint64_t budget, unsigned workers) {
  if (!s.is_square()) throw std::invalid_argument("detect_hurdle: square matrices required");
  const Field f = s.field();
  const std::size_t n = s.rows();
  HurdleSearch out;
  if (n < 2) return out;
  const auto count = gaussian_binomial(f.order(), n, 2);
  if (!count || *count > budget) {
    out.status = SearchStatus::budget;
    out.candidates = count.value_or(0);
    return out;
  }
  out.candidates = *count;
  const auto hit = Executor(workers).find_first(*count, kPointChunk, [&](std::uint64_t begin, std::uint64_t end)
                                                                          -> std::optional<std::uint64_t> {
    for (std::uint64_t i = begin; i < end; ++i)
      if (is_hurdle_certificate(s, grassmannian_at(f, n, 2, i))) return i;
    return std::nullopt;
  });
  if (hit) {
    VecSubspace p = grassmannian_at(f, n, 2, *hit);
    VecSubspace g = annihilator(p);
    out.status = SearchStatus::found;
    out.index = *hit;
    out.certificate = HurdleCertificate{std::move(p), std::move(g)};
  }
  return out;
}

std::size_t image_dim(const MatSubspace& t, std::span<const Fq> x) {
  std::vector<Vec> images;
  for (const auto& u : t.basis()) images.push_back(u.apply(x));
  return VecSubspace::span(t.field(), t.rows(), images).dim();
}

std::size_t transitive_rank(const MatSubspace& t) {
  std::size_t best = 0;
  if (t.cols() == 0 || t.dim() == 0) return 0;
  for_each_projective(VecSubspace::full(t.field(), t.cols()), kDefaultBudget, [&](std::span<const Fq> x) {
    best = std::max(best, image_dim(t, x));
    return best < t.rows();
  });
  return best;
}

bool is_intransitive(const MatSubspace& t) { return transitive_rank(t) < t.rows(); }

MatSubspace project_space(const MatSubspace& t, const QuotientChart& chart) {
  const Field f = t.field();
  std::vector<Matrix> mats;
  for (const auto& u : t.basis()) {
    Matrix m(f, chart.dim(), t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const Vec c = chart.project(u.col(j));
      for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    mats.push_back(std::move(m));
  }
  return MatSubspace::span(f, chart.dim(), t.cols(), mats);
}

std::optional<VecSubspace> find_intransitivity_veil(const MatSubspace& t) {
  const Field f = t.field();
  const std::size_t m = t.rows();
  for (std::size_t d = m; d-- > 1;) {
    std::optional<VecSubspace> found;
    for_each_grassmannian(f, m, d, kDefaultBudget, [&](const VecSubspace& w) {
      if (is_intransitive(project_space(t, QuotientChart(w)))) {
        found = w;
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool is_primitively_intransitive(const MatSubspace& t) {
  return is_intransitive(t) && !find_intransitivity_veil(t);
}

MatSubspace alternator_solutions(const MatSubspace& t) {
  const Field f = t.field();
  const std::size_t du = t.cols();
  const std::size_t dv = t.rows();
  // Unknown G(i, k) sits at index i * dv + k.
  std::vector<Vec> rows;
  for (const auto& u : t.basis()) {
    for (std::size_t i = 0; i < du; ++i)
      for (std::size_t j = i; j < du; ++j) {
        Vec eq(du * dv);
        for (std::size_t k = 0; k < dv; ++k) {
          eq[i * dv + k] = eq[i * dv + k] + u(k, j);
          if (j != i) eq[j * dv + k] = eq[j * dv + k] + u(k, i);
        }
        rows.push_back(std::move(eq));
      }
  }
  Matrix system(f, rows.size(), du * dv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < du * dv; ++c) system(r, c) = rows[r][c];
  return MatSubspace(du, dv, VecSubspace::row_space(nullspace(system)));
}

bool is_alternator(const MatSubspace& t, const Matrix& gram) {
  if (gram.rows() != t.cols() || gram.cols() != t.rows()) return false;
  if (rank(gram) != t.rows()) return false;
  for (const auto& u : t.basis()) {
    const Matrix a = gram * u;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!a(i, i).is_zero()) return false;
      for (std::size_t j = i + 1; j < a.cols(); ++j)
        if (a(i, j) != a(j, i)) return false;
    }
  }
  return true;
}

AlternatorSearch find_alternator(const MatSubspace& t, const ScanOptions& opts) {
  const MatSubspace sol = alternator_solutions(t);
  AlternatorSearch out;
  out.solution_dim = sol.dim();
  const std::size_t want = t.rows();
  const ScanResult scan = scan_elements(sol.flat(), opts, [&](std::span<const Fq> v) {
    return rank(sol.reshape(v)) != want;
  });
  out.mode = scan.mode;
  if (scan.first_failure) {
    out.status = SearchStatus::found;
    out.gram = sol.reshape(scan_element_at(sol.flat(), scan.mode, opts.seed, *scan.first_failure));
  } else if (scan.over_budget || scan.mode == Mode::sampled) {
    out.status = SearchStatus::budget;
  }
  return out;
}

ChoiceSolver::ChoiceSolver(const Matrix& m, std::size_t p, std::uint64_t budget)
    : m_(m), p_(p), budget_(budget), base_(m.field()) {
  if (!m.is_square() || !is_regular_hessenberg(m))
    throw std::invalid_argument("choice: M must be regular Hessenberg");
  const std::size_t n = m.rows();
  if (p < 1 || p + 1 > n) throw std::invalid_argument("choice: p must lie in 1..n-1");
  base_ = char_poly(m);
  // One row (p = 1) or one column (p = n - 1): det is affine in R.
  affine_ = p == 1 || p + 1 == n;
  if (affine_) {
    const Field f = m.field();
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n - p; ++j) {
        Matrix e(f, p, n - p);
        e(i, j) = f.one();
        increments_.push_back(char_poly(perturbed(e)) - base_);
      }
  }
}

Matrix ChoiceSolver::perturbed(const Matrix& r) const {
  Matrix out = m_;
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < p_; ++i)
    for (std::size_t j = 0; j < n - p_; ++j) out(i, p_ + j) = out(i, p_ + j) + r(i, j);
  return out;
}

ChoiceResult ChoiceSolver::solve(const Poly& target) const {
  const Field f = m_.field();
  const std::size_t n = m_.rows();
  if (!target.is_monic() || target.degree() != static_cast<int>(n))
    throw std::invalid_argument("choice: target must be monic of degree n");
  if (target.trace() != m_.trace()) throw std::invalid_argument("choice: tr r must equal tr M");
  const std::size_t cells = p_ * (n - p_);
  ChoiceResult out;
  if (affine_) {
    out.path = "affine";
    Matrix a(f, n, cells);
    Vec b(n);
    const Poly diff = target - base_;
    for (std::size_t k = 0; k < n; ++k) {
      b[k] = diff.coeff(k);
      for (std::size_t c = 0; c < cells; ++c) a(k, c) = increments_[c].coeff(k);
    }
    if (const auto x = solve_linear(a, b)) {
      Matrix r(f, p_, n - p_, *x);
      if (char_poly(perturbed(r)) == target) {
        out.status = SearchStatus::found;
        out.r = std::move(r);
      }
    }
    return out;
  }
  out.path = "exhaustive";
  const auto total = checked_pow(f.order(), cells);
  if (!total || *total > budget_) {
    out.status = SearchStatus::budget;
    return out;
  }
  for (std::uint64_t i = 0; i < *total; ++i) {
    Matrix r(f, p_, n - p_, coords_at(f, cells, i));
    if (char_poly(perturbed(r)) == target) {
      out.status = SearchStatus::found;
      out.r = std::move(r);
      return out;
    }
  }
  return out;
}

ChoiceResult choice_solve(const Matrix& m, const Poly& r, std::size_t p, std::uint64_t budget) {
  return ChoiceSolver(m, p, budget).solve(r);
}

}  // namespace bspec
