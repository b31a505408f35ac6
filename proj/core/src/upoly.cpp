#include "bspec/upoly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace bspec {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("polynomials over different fields: " + a.field().name() + " vs " +
                                b.field().name());
}

void require_nonzero(const Poly& f, const char* op) {
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
}

// Square of a polynomial in characteristic 2: (sum a_i t^i)^2 = sum a_i^2 t^(2i).
Poly frobenius(const Poly& a) {
  const Field f = a.field();
  Poly::Coeffs c(a.is_zero() ? 0 : 2 * a.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[2 * i] = f.square(a.coeffs()[i]);
  return Poly(f, std::move(c));
}

}  // namespace

Poly::Poly(Field f, std::span<const Fq> coeffs) : field_(f), c_(coeffs.begin(), coeffs.end()) {
  for (Fq x : c_)
    if (!f.contains_code(x.code()))
      throw std::invalid_argument("coefficient code " + std::to_string(x.code()) +
                                  " outside " + f.name());
  trim();
}

Poly::Poly(Field f, Coeffs coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

Poly Poly::from_codes(Field f, std::initializer_list<std::uint32_t> codes) {
  Coeffs c;
  for (auto code : codes) c.push_back(f.element(code));
  return Poly(f, std::move(c));
}

Poly Poly::constant(Field f, Fq c) { return monomial(f, 0, c); }

Poly Poly::monomial(Field f, std::size_t degree, Fq c) {
  Coeffs v(degree + 1);
  v[degree] = c;
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fq Poly::eval(Fq x) const {
  Fq acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.mul(acc, x) + *it;
  return acc;
}

Poly Poly::derivative() const {
  // d/dt t^i = i t^(i-1), and i vanishes for even i in characteristic 2.
  Coeffs d(c_.empty() ? 0 : c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); i += 2) d[i - 1] = c_[i];
  return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
  require_nonzero(*this, "monic");
  if (is_monic()) return *this;
  const Fq s = field_.inv(leading());
  Coeffs c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_.mul(c_[i], s);
  return Poly(field_, std::move(c));
}

Fq Poly::trace() const { return c_.size() >= 2 ? c_[c_.size() - 2] : Fq(); }

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c_[i].code() == 1;
    if (i == 0) {
      out += std::to_string(c_[i].code());
      continue;
    }
    if (!unit) out += std::to_string(c_[i].code()) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& big = a.coeffs().size() >= b.coeffs().size() ? a : b;
  const auto& small = &big == &a ? b : a;
  Poly::Coeffs c(big.coeffs().begin(), big.coeffs().end());
  for (std::size_t i = 0; i < small.coeffs().size(); ++i) c[i] += small.coeffs()[i];
  return Poly(a.field(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const Field f = a.field();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  Poly::Coeffs c(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += f.mul(ac[i], bc[j]);
  }
  return Poly(f, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field f = a.field();
  Poly::Coeffs r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  Poly::Coeffs q(a.degree() - db + 1);
  const Fq lead_inv = f.inv(b.leading());
  const auto bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const Fq c = r[i];
    if (c.is_zero()) continue;
    const Fq s = b.is_monic() ? c : f.mul(c, lead_inv);
    q[i - db] = s;
    for (int j = 0; j <= db; ++j) r[i - db + j] += f.mul(s, bc[j]);
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  return ((f * g) / poly_gcd(f, g)).monic();
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  require_same_field(base, m);
  Poly result = Poly::constant(m.field(), m.field().one()) % m;
  Poly b = base % m;
  while (e != 0) {
    if (e & 1u) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

std::size_t count_roots_in_field(const Poly& f) {
  require_nonzero(f, "count_roots_in_field");
  if (f.degree() == 0) return 0;
  const Field field = f.field();
  // t^q mod f by k successive squarings of t.
  Poly x = Poly::monomial(field, 1, field.one()) % f;
  for (unsigned i = 0; i < field.degree(); ++i) x = frobenius(x) % f;
  x = x + Poly::monomial(field, 1, field.one());
  return static_cast<std::size_t>(poly_gcd(f, x).degree());
}

std::size_t count_nonzero_roots_in_field(const Poly& f) {
  const std::size_t n = count_roots_in_field(f);
  return f.coeff(0).is_zero() ? n - 1 : n;
}

Poly radical(const Poly& f) {
  require_nonzero(f, "radical");
  const Field field = f.field();
  if (f.degree() == 0) return Poly::constant(field, field.one());
  const Poly d = f.derivative();
  if (d.is_zero()) {
    // Every odd coefficient vanishes, so f = s^2 with s_i = sqrt(f_{2i}).
    Poly::Coeffs s(f.degree() / 2 + 1);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = field.sqrt(f.coeff(2 * i));
    return radical(Poly(field, std::move(s)));
  }
  const Poly g = poly_gcd(f, d);
  const Poly w = f / g;
  const Poly rg = radical(g);
  return ((w * rg) / poly_gcd(w, rg)).monic();
}

std::size_t count_roots_in_closure(const Poly& f) {
  return static_cast<std::size_t>(radical(f).degree());
}

std::size_t count_nonzero_roots_in_closure(const Poly& f) {
  const std::size_t n = count_roots_in_closure(f);
  return f.coeff(0).is_zero() ? n - 1 : n;
}

Poly parse_poly(Field f, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  auto bad = [&] { return std::invalid_argument("cannot parse polynomial '" + std::string(text) + "'"); };
  auto number = [&](std::string_view v) {
    std::uint32_t x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) throw bad();
    return x;
  };
  if (s.empty()) throw bad();
  Poly result(f);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw bad();
    std::uint32_t coeff = 1;
    std::size_t degree = 0;
    const auto tpos = term.find('t');
    if (tpos == std::string_view::npos) {
      coeff = number(term);
    } else {
      if (tpos > 0) {
        if (term[tpos - 1] != '*') throw bad();
        coeff = number(term.substr(0, tpos - 1));
      }
      const auto rest = term.substr(tpos + 1);
      if (rest.empty()) {
        degree = 1;
      } else {
        if (rest[0] != '^') throw bad();
        degree = number(rest.substr(1));
      }
    }
    result = result + Poly::monomial(f, degree, f.element(coeff));
    pos = end + 1;
  }
  return result;
}

}  // namespace bspec
