// Independent reference computations used only by the test suites. Nothing
// here calls the lattice closure, the fundamental-circuit decomposition, the
// memoized determinant or the generator code it is compared against.
#ifndef BIDEAL_TESTS_ORACLES_HPP
#define BIDEAL_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <bideal/arrangement.hpp>
#include <bideal/bernstein.hpp>
#include <bideal/lattice.hpp>
#include <bideal/matrix.hpp>
#include <bideal/multipoly.hpp>

namespace oracle {

using bideal::Arrangement;
using bideal::IndexSet;
using bideal::Rational;
using bideal::RowSpace;
using bideal::Vector;

inline std::vector<Vector> subset_rows(const Arrangement& a, unsigned mask) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask & (1u << i)) rows.push_back(a.form(i));
  return rows;
}

struct BruteFlat {
  IndexSet J;
  std::size_t codim;
  std::int64_t mobius;
};

/*
 * Every subset S of forms gives the flat span(S). mu(X) is computed by the
 * crosscut formula mu(X) = sum over S with span(S) = X of (-1)^{|S|}.
 */
inline std::vector<BruteFlat> brute_force_lattice(const Arrangement& a) {
  const std::size_t p = a.size();
  std::map<RowSpace, std::int64_t> mobius;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    RowSpace span = bideal::rref(subset_rows(a, mask), a.dim()).space;
    int sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
    mobius[span] += sign;
  }
  std::vector<BruteFlat> out;
  for (const auto& [space, mu] : mobius) {
    BruteFlat f{{}, space.rank(), mu};
    for (std::size_t i = 0; i < p; ++i)
      if (space.contains(a.form(i))) f.J.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const BruteFlat& x, const BruteFlat& y) {
    return std::tie(x.codim, x.J) < std::tie(y.codim, y.J);
  });
  return out;
}

/// Whitney: chi(t) = sum_S (-1)^{|S|} t^{n - rank S}; coefficient of t^k at index k.
inline std::vector<std::int64_t> whitney_char_poly(const Arrangement& a) {
  std::vector<std::int64_t> c(a.dim() + 1, 0);
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    std::size_t r = bideal::rank(subset_rows(a, mask), a.dim());
    c[a.dim() - r] += std::popcount(mask) % 2 == 0 ? 1 : -1;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Leibniz permutation expansion.
inline bideal::MultiPoly leibniz_det(const bideal::PolyMatrix& m, std::size_t nvars) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  bideal::MultiPoly det(nvars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    bideal::MultiPoly term = bideal::MultiPoly::constant(nvars, inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/*
 * Finest rank-additive partition: S is a separator iff rank(S) + rank(S^c) =
 * rank(all). The block of i is the intersection of all separators holding i.
 */
inline std::vector<IndexSet> exhaustive_blocks(const Arrangement& a) {
  const std::size_t p = a.size();
  const unsigned full = (1u << p) - 1;
  const std::size_t total = bideal::rank(a.forms(), a.dim());
  std::vector<unsigned> block_of(p, full);
  for (unsigned mask = 1; mask < full; ++mask) {
    std::size_t r1 = bideal::rank(subset_rows(a, mask), a.dim());
    std::size_t r2 = bideal::rank(subset_rows(a, full & ~mask), a.dim());
    if (r1 + r2 != total) continue;
    for (std::size_t i = 0; i < p; ++i) block_of[i] &= (mask & (1u << i)) ? mask : (full & ~mask);
  }
  std::set<unsigned> distinct(block_of.begin(), block_of.end());
  std::vector<IndexSet> out;
  for (unsigned b : distinct) {
    IndexSet s;
    for (std::size_t i = 0; i < p; ++i)
      if (b & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sorted multiset of (support, constant) pairs.
using FactorMultiset = std::vector<std::pair<IndexSet, std::int64_t>>;

inline FactorMultiset as_multiset(const bideal::FactoredSPolynomial& f) {
  FactorMultiset out;
  for (const auto& x : f.factors) out.emplace_back(x.support, x.constant);
  std::sort(out.begin(), out.end());
  return out;
}

/// prod_i (s_i + 1) * prod_{j=0}^{2(p-2)} (s_1 + ... + s_p + 2 + j), for p >= 3 lines in the plane.
inline FactorMultiset plane_lines_formula(std::size_t p) {
  FactorMultiset out;
  IndexSet all;
  for (std::size_t i = 0; i < p; ++i) {
    out.push_back({{i}, 1});
    all.push_back(i);
  }
  for (std::size_t j = 0; j <= 2 * (p - 2); ++j) out.push_back({all, static_cast<std::int64_t>(2 + j)});
  std::sort(out.begin(), out.end());
  return out;
}

/// Index of the form x_i - x_j (0-based i < j) in braid(n)'s lexicographic order.
inline std::size_t braid_pair_index(std::size_t n, std::size_t i, std::size_t j) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  return idx;
}

/*
 * prod over I subset of {1..n}, |I| >= 2, of
 *   prod_{k=0}^{(|I|-1)(|I|-2)} (sum_{i<j in I} s_ij + |I| - 1 + k)
 */
inline FactorMultiset braid_formula(std::size_t n) {
  FactorMultiset out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::size_t k = std::popcount(mask);
    if (k < 2) continue;
    IndexSet support;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u)) support.push_back(braid_pair_index(n, i, j));
    std::sort(support.begin(), support.end());
    for (std::size_t t = 0; t <= (k - 1) * (k - 2); ++t)
      out.push_back({support, static_cast<std::int64_t>(k - 1 + t)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random arrangement with small integer coefficients; proportional draws are skipped.
inline Arrangement random_arrangement(std::mt19937& rng, std::size_t n, std::size_t p, int range = 2) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Vector> forms;
  std::set<Vector> seen;
  int attempts = 0;
  while (forms.size() < p && attempts++ < 1000) {
    Vector v(n);
    for (auto& x : v) x = coeff(rng);
    if (bideal::is_zero(v)) continue;
    Vector key = bideal::normalize_form(v);
    if (!seen.insert(key).second) continue;
    forms.push_back(std::move(v));
  }
  return bideal::make_arrangement(n, std::move(forms));
}

}  // namespace oracle

#endif  // BIDEAL_TESTS_ORACLES_HPP
