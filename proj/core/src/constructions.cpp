#include "bspec/constructions.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <variant>

#include "bspec/random.hpp"

namespace bspec {

namespace {

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

MatSubspace from_units(Field f, std::size_t n, const std::function<bool(std::size_t, std::size_t)>& keep) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(i, j)) mats.push_back(Matrix::unit(f, n, n, i, j));
  return MatSubspace::span(f, n, n, mats);
}

Matrix embed(const Matrix& m, std::size_t n, std::size_t offset) {
  Matrix out(m.field(), n, n);
  out.set_block(offset, offset, m);
  return out;
}

}  // namespace

MatSubspace zero_space(Field f, std::size_t n) { return MatSubspace(f, n, n); }
MatSubspace full_space(Field f, std::size_t n) { return MatSubspace::full(f, n, n); }

MatSubspace scalars(Field f, std::size_t n) {
  if (n == 0) return zero_space(f, 0);
  return MatSubspace::span(f, n, n, {Matrix::identity(f, n)});
}

MatSubspace nt(Field f, std::size_t n) {
  return from_units(f, n, [](std::size_t i, std::size_t j) { return i < j; });
}

MatSubspace ut(Field f, std::size_t n) {
  return from_units(f, n, [](std::size_t i, std::size_t j) { return i <= j; });
}

MatSubspace sl(Field f, std::size_t n) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) mats.push_back(Matrix::unit(f, n, n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i)
    mats.push_back(Matrix::unit(f, n, n, i, i) + Matrix::unit(f, n, n, i + 1, i + 1));
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace syms(Field f, std::size_t n) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      mats.push_back(i == j ? Matrix::unit(f, n, n, i, i)
                            : Matrix::unit(f, n, n, i, j) + Matrix::unit(f, n, n, j, i));
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace alts(Field f, std::size_t n) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      mats.push_back(Matrix::unit(f, n, n, i, j) + Matrix::unit(f, n, n, j, i));
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace zero_diagonal(Field f, std::size_t n) {
  return from_units(f, n, [](std::size_t i, std::size_t j) { return i != j; });
}

MatSubspace joint(const MatSubspace& a, const MatSubspace& c) {
  if (!a.is_square() || !c.is_square()) throw std::invalid_argument("joint: square spaces required");
  if (!(a.field() == c.field())) throw std::invalid_argument("joint: spaces over different fields");
  const Field f = a.field();
  const std::size_t n = a.rows();
  const std::size_t p = c.rows();
  const std::size_t total = n + p;
  std::vector<Matrix> mats;
  for (const auto& b : a.basis()) mats.push_back(embed(b, total, 0));
  for (const auto& b : c.basis()) mats.push_back(embed(b, total, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) mats.push_back(Matrix::unit(f, total, total, i, n + j));
  return MatSubspace::span(f, total, total, mats);
}

MatSubspace joint(const std::vector<MatSubspace>& parts) {
  if (parts.empty()) throw std::invalid_argument("joint: no parts");
  MatSubspace acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = joint(acc, parts[i]);
  return acc;
}

MatSubspace hurdle_template(Field f, std::size_t n) {
  if (n < 2) throw std::invalid_argument("hurdle_template: n must be at least 2");
  return joint(zero_space(f, n - 2), sl(f, 2));
}

Matrix symplectic_gram(Field f, std::size_t m) {
  Matrix k(f, 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    k(i, m + i) = f.one();
    k(m + i, i) = f.one();
  }
  return k;
}

MatSubspace b2m(Field f, std::size_t m) {
  if (m < 1) throw std::invalid_argument("b2m: m must be at least 1");
  const std::size_t n = 2 * m;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mats.push_back(Matrix::unit(f, n, n, i, j) + Matrix::unit(f, n, n, m + j, m + i));
  // Symmetric blocks S2 (top-right) and S1 (bottom-left).
  auto add_symmetric = [&](std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Matrix s = Matrix::unit(f, n, n, r0 + i, c0 + j);
        if (i != j) s = s + Matrix::unit(f, n, n, r0 + j, c0 + i);
        mats.push_back(std::move(s));
      }
  };
  add_symmetric(0, m);
  add_symmetric(m, 0);
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace line_plus(const MatSubspace& t) { return sum(t, scalars(t.field(), t.rows())); }

MatSubspace mats_p(const Matrix& p) {
  if (!p.is_square()) throw std::invalid_argument("mats_p: P must be square");
  if (rank(p) != p.rows()) throw DomainError("mats_p: P must be invertible");
  return right_multiply(syms(p.field(), p.rows()), p);
}

MatSubspace case_iv_n6(Field f) {
  const std::size_t n = 6;
  std::vector<Matrix> mats;
  for (const auto& x : sl(f, 2).basis()) {
    mats.push_back(embed(x, n, 0) + embed(x, n, 4));
    mats.push_back(embed(x, n, 2));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j / 2 > i / 2) mats.push_back(Matrix::unit(f, n, n, i, j));
  return MatSubspace::span(f, n, n, mats);
}

MatSubspace third_confinement_template(Field f, std::size_t n) {
  if (n < 4) throw std::invalid_argument("third_confinement_template: n must be at least 4");
  auto e = [&](std::size_t i, std::size_t j) { return Matrix::unit(f, n, n, i, j); };
  std::vector<Matrix> mats{
      e(1, 0) + e(3, 2),  // a
      e(2, 0) + e(3, 1),  // b
      e(3, 0),            // c
      e(1, 1) + e(2, 2),  // lambda
      e(2, 1),            // x
      e(1, 2),            // y
  };
  for (std::size_t i = 4; i < n; ++i)
    for (std::size_t j = 0; j < 3; ++j) mats.push_back(e(i, j));
  return MatSubspace::span(f, n, n, mats);
}

std::vector<std::size_t> complex_dimensions(std::size_t k, std::size_t n) {
  if (k < 2) throw std::invalid_argument("complex order must be at least 2");
  std::vector<std::size_t> dims((k - 1) * n);
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = 1 + i / k;
  return dims;
}

ComplexFamily make_complex(Field f, std::size_t k, std::size_t n, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 0);
  std::vector<VecSubspace> spaces;
  for (std::size_t d : complex_dimensions(k, n)) {
    if (d > n) throw std::invalid_argument("complex dimension pattern exceeds ambient dimension");
    spaces.push_back(random_subspace(f, n, d, rng));
  }
  return ComplexFamily{k, n, std::move(spaces)};
}

ComplexFamily make_complex(std::size_t k, std::size_t n, std::vector<VecSubspace> spaces) {
  const auto dims = complex_dimensions(k, n);
  if (spaces.size() != dims.size()) throw std::invalid_argument("complex has the wrong length");
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (spaces[i].ambient() != n || spaces[i].dim() != dims[i])
      throw std::invalid_argument("complex space " + std::to_string(i + 1) + " has the wrong dimension");
  return ComplexFamily{k, n, std::move(spaces)};
}

std::vector<NamedSpace> catalogue(Field f) {
  std::vector<NamedSpace> out;
  auto add = [&](std::string name, std::string description, MatSubspace s, std::size_t expected) {
    out.push_back(NamedSpace{std::move(name), std::move(description), std::move(s), expected});
  };
  for (std::size_t n = 1; n <= 6; ++n)
    add("nt(" + std::to_string(n) + ")", "strictly upper-triangular matrices", nt(f, n), binom2(n));
  for (std::size_t n = 2; n <= 6; ++n)
    add("joint(sl(2),nt(" + std::to_string(n - 2) + "))", "sl2 joined with strictly upper-triangular",
        joint(sl(f, 2), nt(f, n - 2)), binom2(n) + 2);
  add("joint(sl(2),sl(2))", "sl2 joined with sl2", joint(sl(f, 2), sl(f, 2)), binom2(4) + 4);
  add("b2m(2)", "symmetric endomorphisms of a symplectic form on F^4", b2m(f, 2), 10);
  for (std::size_t n : {3, 5, 6})
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      const std::size_t m = n - k - 2;
      add("line_plus(joint(nt(" + std::to_string(k) + "),sl(2),nt(" + std::to_string(m) + ")))",
          "scalars plus nt v sl2 v nt", line_plus(joint({nt(f, k), sl(f, 2), nt(f, m)})), binom2(n) + 3);
    }
  add("case_iv_n6", "sl2 v sl2 v sl2 with equal first and third diagonal blocks", case_iv_n6(f), 18);
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::string s = "(" + std::to_string(n) + ")";
    add("sl" + s, "trace-zero matrices", sl(f, n), n * n - 1);
    add("syms" + s, "symmetric matrices", syms(f, n), binom2(n + 1));
    add("alts" + s, "alternating matrices", alts(f, n), binom2(n));
    add("ut" + s, "upper-triangular matrices", ut(f, n), binom2(n + 1));
    add("hurdle" + s, "zero block joined with sl2", hurdle_template(f, n), 3 + 2 * (n - 2));
  }
  add("b2m(1)", "symmetric endomorphisms of a symplectic form on F^2", b2m(f, 1), 3);
  add("zero_diag(3)", "matrices with zero diagonal", zero_diagonal(f, 3), 6);
  add("third_template(5)", "third confinement template", third_confinement_template(f, 5), 9);
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(Field f, std::string_view text, std::size_t n) : f_(f), text_(text), n_(n) {}

  MatSubspace parse() {
    MatSubspace s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  using Arg = std::variant<std::size_t, MatSubspace>;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("construction '" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                   text_[pos_] == '-'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Arg arg() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
      return v;
    }
    return expr();
  }

  MatSubspace expr() {
    const std::string name = ident();
    if (name.empty()) fail("expected a construction name");
    std::vector<Arg> args;
    const bool call = peek('(');
    if (call) {
      ++pos_;
      if (!peek(')')) {
        args.push_back(arg());
        while (peek(',')) {
          ++pos_;
          args.push_back(arg());
        }
      }
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    }
    return apply(name, args, call);
  }

  std::size_t num(const std::vector<Arg>& args, std::size_t i, const std::string& name) const {
    if (i >= args.size() || !std::holds_alternative<std::size_t>(args[i]))
      fail(name + ": expected an integer argument " + std::to_string(i + 1));
    return std::get<std::size_t>(args[i]);
  }

  MatSubspace space(const std::vector<Arg>& args, std::size_t i, const std::string& name) const {
    if (i >= args.size() || !std::holds_alternative<MatSubspace>(args[i]))
      fail(name + ": expected a space argument " + std::to_string(i + 1));
    return std::get<MatSubspace>(args[i]);
  }

  MatSubspace apply(const std::string& name, const std::vector<Arg>& args, bool call) const {
    // Size argument: explicit when called, otherwise the ambient n.
    auto size = [&](std::size_t i = 0) { return call ? num(args, i, name) : n_; };
    using Builder = MatSubspace (*)(Field, std::size_t);
    static const std::map<std::string, Builder> simple{
        {"zero", zero_space},       {"mat", full_space},      {"full", full_space},
        {"full-mat", full_space},   {"scalars", scalars},     {"nt", nt},
        {"ut", ut},                 {"sl", sl},               {"syms", syms},
        {"alts", alts},             {"zero_diag", zero_diagonal}, {"zero-diag", zero_diagonal},
        {"hurdle", hurdle_template}, {"third_template", third_confinement_template},
    };
    if (auto it = simple.find(name); it != simple.end()) return it->second(f_, size());
    if (name == "b2m") return b2m(f_, call ? num(args, 0, name) : n_ / 2);
    if (name == "b4") return b2m(f_, 2);
    if (name == "case_iv_n6" || name == "case-iv") return case_iv_n6(f_);
    if (name == "sl2-join-nt") {
      if (size() < 2) fail("sl2-join-nt needs n >= 2");
      return joint(sl(f_, 2), nt(f_, size() - 2));
    }
    if (name == "sl2-join-sl2") return joint(sl(f_, 2), sl(f_, 2));
    if (name == "line_plus" || name == "line-plus") return line_plus(space(args, 0, name));
    if (name == "joint") {
      std::vector<MatSubspace> parts;
      for (std::size_t i = 0; i < args.size(); ++i) parts.push_back(space(args, i, name));
      return joint(parts);
    }
    if (name == "mats_p" || name == "mats-p") {
      const std::size_t m = size();
      if (call && args.size() > 1) {
        Rng rng = trial_rng(num(args, 1, name), 0);
        return mats_p(m % 2 == 0 ? random_alternating_invertible(f_, m, rng) : random_invertible(f_, m, rng));
      }
      return mats_p(Matrix::identity(f_, m));
    }
    fail("unknown construction '" + name + "'");
  }

  Field f_;
  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

MatSubspace build_construction(Field f, std::string_view expr, std::size_t n) {
  return ExprParser(f, expr, n).parse();
}

}  // namespace bspec
