#include "bspec/gf.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace bspec {

namespace detail {

struct FieldTables {
  unsigned k = 0;
  std::uint32_t modulus = 0;
  std::uint32_t q = 0;
  // Log tables exist only for k <= 8. exp has 2(q-1) entries so that
  // exp[log a + log b] needs no reduction.
  std::vector<std::uint16_t> log;
  std::vector<std::uint16_t> exp;
};

}  // namespace detail

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, unsigned k, std::uint32_t modulus) {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> k) a ^= modulus;
  }
  return r;
}

const detail::FieldTables* build(unsigned k, std::uint32_t modulus) {
  auto t = std::make_unique<detail::FieldTables>();
  t->k = k;
  t->modulus = modulus;
  t->q = 1u << k;
  if (k <= 8) {
    // Find a generator of the multiplicative group, then tabulate its powers.
    const std::uint32_t order = t->q - 1;
    for (std::uint32_t g = (k == 1 ? 1 : 2); g < t->q; ++g) {
      std::vector<std::uint16_t> exp(2 * order + 1);
      std::uint32_t x = 1;
      bool generator = true;
      for (std::uint32_t i = 0; i < order; ++i) {
        if (i > 0 && x == 1) {
          generator = false;
          break;
        }
        exp[i] = static_cast<std::uint16_t>(x);
        x = clmul_reduce(x, g, k, modulus);
      }
      if (!generator) continue;
      for (std::uint32_t i = order; i < exp.size(); ++i) exp[i] = exp[i - order];
      t->log.assign(t->q, 0);
      for (std::uint32_t i = 0; i < order; ++i) t->log[exp[i]] = static_cast<std::uint16_t>(i);
      t->exp = std::move(exp);
      break;
    }
  }
  return t.release();
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t g = 2; poly_degree(g) <= d / 2; ++g) {
    if (gf2_mod(poly, g) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(unsigned degree) {
  if (degree < 1 || degree > Field::kMaxDegree)
    throw std::invalid_argument("field degree must be in 1..16, got " + std::to_string(degree));
  for (std::uint32_t m = 1u << degree; m < (2u << degree); ++m) {
    if (is_irreducible_gf2(m)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field Field::make(unsigned degree, std::optional<std::uint32_t> modulus) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::uint32_t>, const detail::FieldTables*> cache;

  const std::uint32_t m = modulus ? *modulus : default_modulus(degree);
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("field degree must be in 1..16, got " + std::to_string(degree));
  if (poly_degree(m) != static_cast<int>(degree))
    throw std::invalid_argument("modulus " + std::to_string(m) + " does not have degree " +
                                std::to_string(degree));
  if (!is_irreducible_gf2(m))
    throw std::invalid_argument("modulus " + std::to_string(m) + " is reducible over GF(2)");

  std::lock_guard lock(mutex);
  auto& slot = cache[{degree, m}];
  if (slot == nullptr) slot = build(degree, m);
  return Field(slot);
}

unsigned Field::degree() const { return t_->k; }
std::uint32_t Field::modulus() const { return t_->modulus; }
std::uint32_t Field::order() const { return t_->q; }

Fq Field::element(std::uint32_t code) const {
  if (code >= t_->q)
    throw std::invalid_argument("code " + std::to_string(code) + " is not an element of " + name());
  return Fq(code);
}

Fq Field::mul(Fq a, Fq b) const {
  if (a.is_zero() || b.is_zero()) return Fq(0);
  if (!t_->exp.empty()) return Fq(t_->exp[t_->log[a.code()] + t_->log[b.code()]]);
  return Fq(clmul_reduce(a.code(), b.code(), t_->k, t_->modulus));
}

Fq Field::pow(Fq a, std::uint64_t e) const {
  Fq result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Fq Field::inv(Fq a) const {
  if (a.is_zero()) throw DomainError("inverse of zero in " + name());
  if (!t_->exp.empty()) {
    const std::uint32_t order = t_->q - 1;
    return Fq(t_->exp[(order - t_->log[a.code()]) % order]);
  }
  return pow(a, t_->q - 2);
}

Fq Field::sqrt(Fq a) const {
  for (unsigned i = 1; i < t_->k; ++i) a = mul(a, a);
  return a;
}

std::string Field::name() const {
  switch (t_->k) {
    case 1:
      return "gf2";
    case 2:
      return "gf4";
    case 3:
      return "gf8";
    case 4:
      return "gf16";
    default:
      return "gf2^" + std::to_string(t_->k);
  }
}

Field parse_field(std::string_view name, std::optional<std::uint32_t> modulus) {
  static const std::map<std::string_view, unsigned> aliases{
      {"gf2", 1}, {"gf4", 2}, {"gf8", 3}, {"gf16", 4}};
  if (auto it = aliases.find(name); it != aliases.end()) return Field::make(it->second, modulus);
  constexpr std::string_view prefix = "gf2^";
  if (name.starts_with(prefix)) {
    unsigned k = 0;
    const auto digits = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return Field::make(k, modulus);
  }
  throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

}  // namespace bspec
