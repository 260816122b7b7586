#ifndef BIDEAL_LATTICE_HPP
#define BIDEAL_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "matrix.hpp"

namespace bideal {

/// Element X of L(A): the span of the forms vanishing on X, J(X), codim r(X), mu(X).
struct Flat {
  RowSpace space;
  IndexSet J;
  std::size_t codim = 0;
  std::int64_t mobius = 0;
};

struct IntersectionLattice {
  std::size_t ambient_dim = 0;
  /// Sorted by (codim, J); flats.front() is the whole space V.
  std::vector<Flat> flats;

  const Flat& top() const { return flats.back(); }
};

/*
 * Fixpoint closure level by level: every flat of codim k+1 is the sum of a
 * codim-k flat with the span of one form outside it. Flats are deduplicated
 * on their RREF key; J is recovered by row-space membership.
 */
inline IntersectionLattice intersection_lattice(const Arrangement& a) {
  const std::size_t n = a.dim();
  IntersectionLattice lattice{n, {}};
  lattice.flats.push_back(Flat{RowSpace(n), {}, 0, 1});

  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::map<RowSpace, Flat> next;
    for (std::size_t idx : level) {
      const Flat& x = lattice.flats[idx];
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::binary_search(x.J.begin(), x.J.end(), i)) continue;
        RowSpace grown = x.space.sum(a.form(i));
        if (next.contains(grown)) continue;
        Flat y{grown, {}, grown.rank(), 0};
        for (std::size_t k = 0; k < a.size(); ++k)
          if (grown.contains(a.form(k))) y.J.push_back(k);
        next.emplace(std::move(grown), std::move(y));
      }
    }
    std::vector<Flat> fresh;
    fresh.reserve(next.size());
    for (auto& [key, flat] : next) fresh.push_back(std::move(flat));
    std::sort(fresh.begin(), fresh.end(), [](const Flat& u, const Flat& v) { return u.J < v.J; });
    level.clear();
    for (auto& f : fresh) {
      level.push_back(lattice.flats.size());
      lattice.flats.push_back(std::move(f));
    }
  }

  // mu(X) = -sum of mu(Y) over flats Y strictly containing X, i.e. J(Y) strictly inside J(X).
  for (std::size_t k = 1; k < lattice.flats.size(); ++k) {
    Flat& x = lattice.flats[k];
    std::int64_t sum = 0;
    for (std::size_t m = 0; m < k; ++m) {
      const Flat& y = lattice.flats[m];
      if (y.codim < x.codim && std::includes(x.J.begin(), x.J.end(), y.J.begin(), y.J.end())) sum += y.mobius;
    }
    x.mobius = -sum;
  }
  return lattice;
}

/// Univariate integer polynomial in t, coefficient of t^k at index k.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  std::int64_t operator()(std::int64_t t) const {
    std::int64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "t^2 - 2t + 1"; with latex = true exponents are braced: "t^{2} - 2t + 1".
  std::string to_string(bool latex = false) const {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      std::int64_t c = coeffs[k];
      if (c == 0) continue;
      std::int64_t mag = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1 || k == 0) out += std::to_string(mag);
      if (k >= 1) out += "t";
      if (k >= 2) out += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }
};

/// chi(A, t) = sum over flats of mu(X) t^{dim X}.
inline IntPolynomial char_poly(const IntersectionLattice& lattice) {
  IntPolynomial chi{std::vector<std::int64_t>(lattice.ambient_dim + 1, 0)};
  for (const auto& x : lattice.flats) chi.coeffs[lattice.ambient_dim - x.codim] += x.mobius;
  chi.trim();
  return chi;
}

inline IntPolynomial char_poly(const Arrangement& a) { return char_poly(intersection_lattice(a)); }

}  // namespace bideal

#endif  // BIDEAL_LATTICE_HPP
