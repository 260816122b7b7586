#ifndef BIDEAL_ARRANGEMENT_HPP
#define BIDEAL_ARRANGEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace bideal {

/// Sorted, duplicate-free set of 0-based hyperplane indices.
using IndexSet = std::vector<std::size_t>;

/// Scales v so that its first nonzero entry is 1. v must be nonzero.
inline Vector normalize_form(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) throw Error(ErrorKind::invalid_form, "zero linear form");
  Rational inv = Rational(1) / *it;
  for (auto& x : v) x *= inv;
  return v;
}

/*
 * Central arrangement: an ordered list of pairwise distinct hyperplanes, each
 * held as its normalized linear form. The position of a form is the index of
 * its s-variable, so order is significant and never changed by construction.
 */
class Arrangement {
 public:
  Arrangement() = default;

  /// Validates and normalizes; throws invalid-form / duplicate-hyperplane / malformed-input.
  Arrangement(std::size_t dim, std::vector<Vector> raw_forms, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != raw_forms.size())
      throw Error(ErrorKind::malformed_input, "label count " + std::to_string(labels_.size()) +
                                                  " does not match form count " + std::to_string(raw_forms.size()));
    forms_.reserve(raw_forms.size());
    for (std::size_t i = 0; i < raw_forms.size(); ++i) {
      if (raw_forms[i].size() != dim)
        throw Error(ErrorKind::malformed_input, "form " + std::to_string(i + 1) + " has length " +
                                                    std::to_string(raw_forms[i].size()) + ", expected " +
                                                    std::to_string(dim));
      if (is_zero(raw_forms[i]))
        throw Error(ErrorKind::invalid_form, "form " + std::to_string(i + 1) + " is zero");
      Vector f = normalize_form(std::move(raw_forms[i]));
      for (std::size_t j = 0; j < forms_.size(); ++j)
        if (forms_[j] == f)
          throw Error(ErrorKind::duplicate_hyperplane, "forms " + std::to_string(j + 1) + " and " +
                                                           std::to_string(i + 1) + " define the same hyperplane");
      forms_.push_back(std::move(f));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return forms_.size(); }
  bool empty() const noexcept { return forms_.empty(); }
  const std::vector<Vector>& forms() const noexcept { return forms_; }
  const Vector& form(std::size_t i) const { return forms_.at(i); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const {
    return labels_.empty() ? "H" + std::to_string(i + 1) : labels_.at(i);
  }

  std::size_t rank() const { return bideal::rank(forms_, dim_); }

  /// Q = l_1 ... l_p as a polynomial in x1..xn.
  MultiPoly defining_polynomial() const {
    MultiPoly q = MultiPoly::constant(dim_, 1);
    for (const auto& f : forms_) q *= MultiPoly::linear(f);
    return q;
  }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.dim_ == b.dim_ && a.forms_ == b.forms_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> forms_;
  std::vector<std::string> labels_;
};

inline Arrangement make_arrangement(std::size_t dim, std::vector<Vector> raw_forms,
                                    std::vector<std::string> labels = {}) {
  if (dim == 0)
    throw Error(ErrorKind::malformed_input, "ambient dimension must be positive");
  return Arrangement(dim, std::move(raw_forms), std::move(labels));
}

enum class Family { braid, boolean, generic2d };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "braid") return Family::braid;
  if (name == "boolean") return Family::boolean;
  if (name == "generic2d") return Family::generic2d;
  return std::nullopt;
}

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::braid: return "braid";
    case Family::boolean: return "boolean";
    case Family::generic2d: return "generic2d";
  }
  return "";
}

/*
 * Named families:
 *   braid(n)     forms x_i - x_j, i < j, lexicographic in (i, j); dim n
 *   boolean(n)   coordinate forms x_1 .. x_n
 *   generic2d(p) x, y, x+y, x+2y, ..., x+(p-2)y in dimension 2
 */
inline Arrangement family(Family f, std::size_t parameter) {
  std::vector<Vector> forms;
  std::vector<std::string> labels;
  switch (f) {
    case Family::braid: {
      if (parameter < 2) throw Error(ErrorKind::invalid_parameter, "braid requires n >= 2");
      for (std::size_t i = 0; i < parameter; ++i)
        for (std::size_t j = i + 1; j < parameter; ++j) {
          Vector v(parameter, 0);
          v[i] = 1;
          v[j] = -1;
          forms.push_back(std::move(v));
          labels.push_back("x" + std::to_string(i + 1) + "-x" + std::to_string(j + 1));
        }
      return Arrangement(parameter, std::move(forms), std::move(labels));
    }
    case Family::boolean: {
      if (parameter < 1) throw Error(ErrorKind::invalid_parameter, "boolean requires n >= 1");
      for (std::size_t i = 0; i < parameter; ++i) {
        Vector v(parameter, 0);
        v[i] = 1;
        forms.push_back(std::move(v));
        labels.push_back("x" + std::to_string(i + 1));
      }
      return Arrangement(parameter, std::move(forms), std::move(labels));
    }
    case Family::generic2d: {
      if (parameter < 1) throw Error(ErrorKind::invalid_parameter, "generic2d requires p >= 1");
      forms.push_back({1, 0});
      labels.push_back("x");
      if (parameter >= 2) {
        forms.push_back({0, 1});
        labels.push_back("y");
      }
      for (std::size_t k = 1; k + 2 <= parameter; ++k) {
        forms.push_back({1, Rational(static_cast<long long>(k))});
        labels.push_back(k == 1 ? "x+y" : "x+" + std::to_string(k) + "y");
      }
      return Arrangement(2, std::move(forms), std::move(labels));
    }
  }
  throw Error(ErrorKind::invalid_parameter, "unknown family");
}

/// True iff J is closed: every form vanishing on the intersection of H_j (j in J) has index in J.
inline bool is_closed(const Arrangement& a, const IndexSet& J) {
  std::vector<Vector> rows;
  for (std::size_t j : J) rows.push_back(a.form(j));
  RowSpace span = rref(rows, a.dim()).space;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (span.contains(a.form(i)) && !std::binary_search(J.begin(), J.end(), i)) return false;
  return true;
}

inline void check_index_set(const Arrangement& a, const IndexSet& J) {
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (J[k] >= a.size())
      throw Error(ErrorKind::invalid_index, "index " + std::to_string(J[k] + 1) + " out of range 1.." +
                                                std::to_string(a.size()));
    if (k > 0 && J[k] <= J[k - 1]) throw Error(ErrorKind::malformed_input, "index set must be sorted and distinct");
  }
}

/// Sub-arrangement A_X for the flat X with J(X) = J. Labels carry the original names.
inline Arrangement localize(const Arrangement& a, const IndexSet& J) {
  check_index_set(a, J);
  if (!is_closed(a, J)) throw Error(ErrorKind::not_a_flat, "index set is not closed under the arrangement");
  std::vector<Vector> forms;
  std::vector<std::string> labels;
  for (std::size_t j : J) {
    forms.push_back(a.form(j));
    labels.push_back(a.label(j));
  }
  return Arrangement(a.dim(), std::move(forms), std::move(labels));
}

/// A' = A minus H_i, in the same space.
inline Arrangement deletion(const Arrangement& a, std::size_t i) {
  if (i >= a.size()) throw Error(ErrorKind::invalid_index, "index " + std::to_string(i + 1) + " out of range");
  std::vector<Vector> forms;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == i) continue;
    forms.push_back(a.form(k));
    labels.push_back(a.label(k));
  }
  return Arrangement(a.dim(), std::move(forms), std::move(labels));
}

/*
 * A'' = {H_k ∩ H_i : k != i} inside H_i. Coordinates on H_i are the standard
 * coordinates except the last one on which l_i is nonzero (the lexicographically
 * smallest valid subset); that coordinate is eliminated through l_i = 0. Zero
 * images are dropped and proportional images keep their first occurrence.
 */
inline Arrangement restriction(const Arrangement& a, std::size_t i) {
  if (i >= a.size()) throw Error(ErrorKind::invalid_index, "index " + std::to_string(i + 1) + " out of range");
  const Vector& l = a.form(i);
  std::size_t q = a.dim();
  while (q > 0 && l[q - 1] == 0) --q;
  --q;  // last nonzero coordinate of l

  std::vector<Vector> forms;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == i) continue;
    const Vector& m = a.form(k);
    Rational ratio = m[q] / l[q];
    Vector image;
    image.reserve(a.dim() - 1);
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (j != q) image.push_back(m[j] - ratio * l[j]);
    if (is_zero(image)) continue;
    image = normalize_form(std::move(image));
    if (std::find(forms.begin(), forms.end(), image) != forms.end()) continue;
    forms.push_back(std::move(image));
    labels.push_back(a.label(k));
  }
  return Arrangement(a.dim() - 1, std::move(forms), std::move(labels));
}

struct Essentialization {
  Arrangement arrangement;
  std::size_t e0;
};

/*
 * Rewrites every form on the RREF basis of the span of all forms; the
 * coefficient on basis row k is the form's entry at pivot column k.
 */
inline Essentialization essentialize(const Arrangement& a) {
  RowSpace span = rref(a.forms(), a.dim()).space;
  std::vector<Vector> forms;
  forms.reserve(a.size());
  for (const auto& f : a.forms()) {
    Vector v;
    v.reserve(span.rank());
    for (std::size_t p : span.pivots()) v.push_back(f[p]);
    forms.push_back(std::move(v));
  }
  Arrangement out(span.rank(), std::move(forms), a.has_labels() ? a.labels() : std::vector<std::string>{});
  return {std::move(out), a.dim() - span.rank()};
}

}  // namespace bideal

#endif  // BIDEAL_ARRANGEMENT_HPP
