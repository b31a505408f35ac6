#include "bspec/enumerate.hpp"

#include <stdexcept>

namespace bspec {

namespace {

constexpr std::uint64_t kCap = std::uint64_t{1} << 62;

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kCap / a) return std::nullopt;
  return a * b;
}

// Digits of index in base q, last position least significant.
void fill_digits(Fq* out, std::size_t len, std::uint32_t q, std::uint64_t index) {
  for (std::size_t i = len; i-- > 0;) {
    out[i] = Fq(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
}

std::size_t free_entries(const std::vector<std::size_t>& pivots, std::size_t m) {
  const std::size_t d = pivots.size();
  std::size_t free = 0;
  for (std::size_t i = 0; i < d; ++i) free += (m - 1 - pivots[i]) - (d - 1 - i);
  return free;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
  const std::size_t d = c.size();
  for (std::size_t i = d; i-- > 0;) {
    if (c[i] < m - d + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

VecSubspace echelon_from(Field f, std::size_t m, const std::vector<std::size_t>& pivots,
                         std::uint64_t index) {
  const std::size_t d = pivots.size();
  std::vector<Fq> digits(free_entries(pivots, m));
  fill_digits(digits.data(), digits.size(), f.order(), index);
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows(d, Vec(m));
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i) {
    rows[i][pivots[i]] = f.one();
    for (std::size_t j = pivots[i] + 1; j < m; ++j)
      if (!is_pivot[j]) rows[i][j] = digits[k++];
  }
  return VecSubspace::span(f, m, rows);
}

}  // namespace

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

std::optional<std::uint64_t> element_count(const VecSubspace& s) {
  return checked_pow(s.field().order(), s.dim());
}

Vec coords_at(Field f, std::size_t dim, std::uint64_t index) {
  Vec c(dim);
  fill_digits(c.data(), dim, f.order(), index);
  return c;
}

Vec element_at(const VecSubspace& s, std::uint64_t index) {
  return s.combine(coords_at(s.field(), s.dim(), index));
}

ElementStream::ElementStream(const VecSubspace& s, std::uint64_t start)
    : s_(&s), q_(s.field().order()), coords_(coords_at(s.field(), s.dim(), start)), value_(s.combine(coords_)) {}

void ElementStream::advance() {
  const Field f = s_->field();
  const Matrix& b = s_->basis();
  const std::size_t m = s_->ambient();
  for (std::size_t i = coords_.size(); i-- > 0;) {
    const std::uint32_t c = coords_[i].code();
    const std::uint32_t next = c + 1 == q_ ? 0 : c + 1;
    // Old and new codes differ by their XOR, which is the field difference.
    const Fq delta(c ^ next);
    coords_[i] = Fq(next);
    const auto row = b.entries().subspan(i * m, m);
    for (std::size_t j = s_->pivots()[i]; j < m; ++j) value_[j] += f.mul(delta, row[j]);
    if (next != 0) return;
  }
}

EnumStatus for_each_element(const VecSubspace& s, std::uint64_t budget,
                            const std::function<bool(std::span<const Fq>)>& visit) {
  const auto count = element_count(s);
  if (!count || *count > budget) return EnumStatus::budget;
  ElementStream it(s, 0);
  for (std::uint64_t i = 0; i < *count; ++i, it.advance())
    if (!visit(it.value())) return EnumStatus::stopped;
  return EnumStatus::completed;
}

std::optional<std::uint64_t> projective_count(std::uint64_t q, std::size_t m) {
  std::uint64_t total = 0;
  for (std::size_t l = 0; l < m; ++l) {
    auto c = checked_pow(q, m - 1 - l);
    if (!c || total > kCap - *c) return std::nullopt;
    total += *c;
  }
  return total;
}

Vec projective_coords_at(Field f, std::size_t m, std::uint64_t index) {
  for (std::size_t l = 0; l < m; ++l) {
    const auto c = checked_pow(f.order(), m - 1 - l);
    if (!c) throw std::invalid_argument("projective space too large");
    if (index < *c) {
      Vec v(m);
      v[l] = f.one();
      fill_digits(v.data() + l + 1, m - 1 - l, f.order(), index);
      return v;
    }
    index -= *c;
  }
  throw std::out_of_range("projective index out of range");
}

Vec projective_point_at(const VecSubspace& s, std::uint64_t index) {
  return s.combine(projective_coords_at(s.field(), s.dim(), index));
}

EnumStatus for_each_projective(const VecSubspace& s, std::uint64_t budget,
                               const std::function<bool(std::span<const Fq>)>& visit) {
  const auto count = projective_count(s.field().order(), s.dim());
  if (!count || *count > budget) return EnumStatus::budget;
  for (std::uint64_t i = 0; i < *count; ++i)
    if (!visit(projective_point_at(s, i))) return EnumStatus::stopped;
  return EnumStatus::completed;
}

std::vector<Vec> projective_points(Field f, std::size_t m) {
  const auto count = projective_count(f.order(), m);
  if (!count) throw std::invalid_argument("projective space too large");
  std::vector<Vec> out;
  out.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) out.push_back(projective_coords_at(f, m, i));
  return out;
}

std::optional<std::uint64_t> gaussian_binomial(std::uint64_t q, std::size_t m, std::size_t d) {
  if (d > m) return 0;
  // G(m, d) = G(m-1, d-1) + q^d G(m-1, d).
  std::vector<std::optional<std::uint64_t>> row(d + 1, std::uint64_t{0});
  row[0] = 1;
  for (std::size_t mm = 1; mm <= m; ++mm) {
    for (std::size_t dd = std::min(mm, d); dd >= 1; --dd) {
      const auto qd = checked_pow(q, dd);
      std::optional<std::uint64_t> v;
      if (qd && row[dd] && row[dd - 1]) {
        auto t = checked_mul(*qd, *row[dd]);
        if (t && *t <= kCap - *row[dd - 1]) v = *t + *row[dd - 1];
      }
      row[dd] = v;
    }
  }
  return row[d];
}

VecSubspace grassmannian_at(Field f, std::size_t m, std::size_t d, std::uint64_t index) {
  if (d > m) throw std::invalid_argument("grassmannian: d exceeds ambient dimension");
  if (d == 0) {
    if (index != 0) throw std::out_of_range("grassmannian index out of range");
    return VecSubspace(f, m);
  }
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  do {
    const auto c = checked_pow(f.order(), free_entries(pivots, m));
    if (!c) throw std::invalid_argument("grassmannian too large");
    if (index < *c) return echelon_from(f, m, pivots, index);
    index -= *c;
  } while (next_combination(pivots, m));
  throw std::out_of_range("grassmannian index out of range");
}

EnumStatus for_each_grassmannian(Field f, std::size_t m, std::size_t d, std::uint64_t budget,
                                 const std::function<bool(const VecSubspace&)>& visit) {
  const auto count = gaussian_binomial(f.order(), m, d);
  if (!count || *count > budget) return EnumStatus::budget;
  if (d == 0) return visit(VecSubspace(f, m)) ? EnumStatus::completed : EnumStatus::stopped;
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  do {
    const std::uint64_t c = *checked_pow(f.order(), free_entries(pivots, m));
    for (std::uint64_t i = 0; i < c; ++i)
      if (!visit(echelon_from(f, m, pivots, i))) return EnumStatus::stopped;
  } while (next_combination(pivots, m));
  return EnumStatus::completed;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

Vec sample_coords(Field f, std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  Vec c(dim);
  const std::uint64_t mask = f.order() - 1;
  const unsigned k = f.degree();
  std::uint64_t state = stream_seed(seed, index);
  std::uint64_t bits = 0;
  unsigned avail = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (avail < k) {
      state = splitmix64(state);
      bits = state;
      avail = 64;
    }
    c[i] = Fq(static_cast<std::uint32_t>(bits & mask));
    bits >>= k;
    avail -= k;
  }
  return c;
}

}  // namespace bspec
