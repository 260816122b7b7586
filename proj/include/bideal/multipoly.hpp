#ifndef BIDEAL_MULTIPOLY_HPP
#define BIDEAL_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace bideal {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

/// Graded lex, largest monomial first (x1 > x2 > ... within a degree).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

/*
 * Sparse polynomial over Q in a fixed number of variables. Terms are kept in
 * graded-lex order with zero coefficients never stored, so equality is
 * structural and printing is deterministic.
 */
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : MultiPoly(nvars, default_variable_names(nvars)) {}
  MultiPoly(std::size_t nvars, std::vector<std::string> names) : nvars_(nvars), names_(std::move(names)) {
    if (names_.size() != nvars_)
      throw Error(ErrorKind::malformed_input, "variable name count does not match variable count");
  }

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t index) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  /// Linear form sum_k coeffs[k] * x_k.
  static MultiPoly linear(const Vector& coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Exponents e(coeffs.size(), 0);
      e[k] = 1;
      p.add_term(std::move(e), coeffs[k]);
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Leading term in graded-lex order; must not be called on zero.
  const TermMap::value_type& leading() const { return *terms_.begin(); }

  std::optional<unsigned> degree() const {
    if (is_zero()) return std::nullopt;
    return total_degree(leading().first);
  }

  /// Degree when every term has the same total degree.
  std::optional<unsigned> homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    unsigned d = total_degree(leading().first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return std::nullopt;
    return d;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Exponents e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::malformed_input, "exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, a.names_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "x1^2 - 3/2*x1*x2 + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_string(e);
      if (mono.empty()) {
        out += bideal::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += bideal::to_string(mag) + "*" + mono;
      }
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::malformed_input, "polynomials over different variable sets");
  }

  std::string monomial_string(const Exponents& e) const {
    std::string s;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!s.empty()) s += "*";
      s += names_[k];
      if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
  }

  std::size_t nvars_;
  std::vector<std::string> names_;
  TermMap terms_;
};

/*
 * Exact quotient a / b, or nullopt when b does not divide a. If b | a then
 * every intermediate remainder is a multiple of b, so its leading monomial is
 * divisible by lead(b); a non-divisible leading monomial therefore proves
 * non-divisibility.
 */
inline std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::malformed_input, "division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::malformed_input, "polynomials over different variable sets");
  const std::size_t n = a.nvars();
  MultiPoly quotient(n, a.variable_names());
  MultiPoly rest = a;
  const auto& [lead_exp, lead_coeff] = b.leading();
  while (!rest.is_zero()) {
    const auto& [re, rc] = rest.leading();
    Exponents shift(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (re[k] < lead_exp[k]) return std::nullopt;
      shift[k] = re[k] - lead_exp[k];
    }
    MultiPoly step(n, a.variable_names());
    step.add_term(std::move(shift), rc / lead_coeff);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

/// Partial derivative with respect to variable k.
inline MultiPoly derivative(const MultiPoly& p, std::size_t k) {
  MultiPoly d(p.nvars(), p.variable_names());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(k) == 0) continue;
    Exponents lowered = e;
    --lowered[k];
    d.add_term(std::move(lowered), c * e[k]);
  }
  return d;
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

namespace detail {

inline MultiPoly minor_det(const PolyMatrix& m, std::size_t row, unsigned long long used,
                           std::map<unsigned long long, MultiPoly>& memo) {
  const std::size_t n = m.size();
  if (row == n) return MultiPoly::constant(m.empty() ? 0 : m[0][0].nvars(), 1);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  MultiPoly acc(m[0][0].nvars(), m[0][0].variable_names());
  bool negative = false;
  for (std::size_t col = 0; col < n; ++col) {
    if (used & (1ULL << col)) continue;
    if (!m[row][col].is_zero()) {
      MultiPoly term = m[row][col] * minor_det(m, row + 1, used | (1ULL << col), memo);
      if (negative)
        acc -= term;
      else
        acc += term;
    }
    negative = !negative;
  }
  memo.emplace(used, acc);
  return acc;
}

}  // namespace detail

/// Determinant by Laplace expansion along rows, memoized on the set of used columns.
inline MultiPoly det_poly(const PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::malformed_input, "determinant of a non-square matrix");
  if (n == 0) return MultiPoly::constant(nvars, 1);
  if (n > 60) throw Error(ErrorKind::malformed_input, "determinant larger than 60x60");
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.nvars() != nvars) throw Error(ErrorKind::malformed_input, "matrix entries over different variable sets");
  std::map<unsigned long long, MultiPoly> memo;
  return detail::minor_det(m, 0, 0, memo);
}

}  // namespace bideal

#endif  // BIDEAL_MULTIPOLY_HPP
