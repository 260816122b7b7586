#ifndef BIDEAL_MATRIX_HPP
#define BIDEAL_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bideal {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

class RowSpace;
struct RrefResult;
RrefResult rref(std::span<const Vector> rows, std::size_t ambient_dim);

/*
 * Subspace of Q^n held as its reduced row echelon basis. The RREF of a
 * subspace is unique, so two RowSpaces are equal iff their matrices agree
 * entrywise; this is what flats are keyed on.
 */
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const Matrix& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coefficients of v on the basis rows, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    Vector rest = v;
    Vector coeffs(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational c = rest[pivots_[k]];
      coeffs[k] = c;
      if (c == 0) continue;
      for (std::size_t j = pivots_[k]; j < ambient_dim_; ++j) rest[j] -= c * rows_[k][j];
    }
    if (!is_zero(rest)) return std::nullopt;
    return coeffs;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  bool contains(const RowSpace& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  RowSpace sum(const RowSpace& other) const;
  RowSpace sum(const Vector& v) const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

  friend bool operator<(const RowSpace& a, const RowSpace& b) {
    if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
    return a.rows_ < b.rows_;
  }

 private:
  friend RrefResult rref(std::span<const Vector> rows, std::size_t ambient_dim);

  std::size_t ambient_dim_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  RowSpace space;
  std::size_t rank;
};

/// Gauss-Jordan elimination to the canonical reduced row echelon form, zero rows dropped.
inline RrefResult rref(std::span<const Vector> rows, std::size_t ambient_dim) {
  Matrix m(rows.begin(), rows.end());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].size() != ambient_dim)
      throw Error(ErrorKind::malformed_input, "row " + std::to_string(i + 1) + " has length " +
                                                  std::to_string(m[i].size()) + ", expected " +
                                                  std::to_string(ambient_dim));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ambient_dim && lead < m.size(); ++col) {
    std::size_t pick = lead;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[lead], m[pick]);
    Rational inv = 1 / m[lead][col];
    for (std::size_t j = col; j < ambient_dim; ++j) m[lead][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == lead || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ambient_dim; ++j) m[i][j] -= f * m[lead][j];
    }
    pivots.push_back(col);
    ++lead;
  }
  m.resize(lead);

  RowSpace space(ambient_dim);
  space.rows_ = std::move(m);
  space.pivots_ = std::move(pivots);
  return {std::move(space), lead};
}

inline RowSpace RowSpace::sum(const RowSpace& other) const {
  Matrix all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return rref(all, ambient_dim_).space;
}

inline RowSpace RowSpace::sum(const Vector& v) const {
  if (contains(v)) return *this;
  Matrix all = rows_;
  all.push_back(v);
  return rref(all, ambient_dim_).space;
}

inline std::size_t rank(std::span<const Vector> rows, std::size_t ambient_dim) {
  return rref(rows, ambient_dim).rank;
}

}  // namespace bideal

#endif  // BIDEAL_MATRIX_HPP
