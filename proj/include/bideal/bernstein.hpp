#ifndef BIDEAL_BERNSTEIN_HPP
#define BIDEAL_BERNSTEIN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "structure.hpp"

namespace bideal {

/// Shortlex order on index sets: by size, then lexicographic.
inline bool shortlex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// (sum_{i in support} s_i + constant).
struct LinearFactor {
  IndexSet support;
  std::int64_t constant = 0;

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;

  friend bool operator<(const LinearFactor& a, const LinearFactor& b) {
    if (a.support != b.support) return shortlex_less(a.support, b.support);
    return a.constant < b.constant;
  }

  std::string to_string(bool latex = false) const {
    std::string out = "(";
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (k > 0) out += "+";
      out += latex ? "s_{" + std::to_string(support[k] + 1) + "}" : "s" + std::to_string(support[k] + 1);
    }
    if (constant > 0)
      out += "+" + std::to_string(constant);
    else if (constant < 0)
      out += std::to_string(constant);
    return out + ")";
  }
};

/// Product of linear factors in s_1..s_p, kept as a sorted multiset.
struct FactoredSPolynomial {
  std::vector<LinearFactor> factors;
  std::size_t variable_count = 0;

  FactoredSPolynomial() = default;
  FactoredSPolynomial(std::vector<LinearFactor> f, std::size_t p) : factors(std::move(f)), variable_count(p) {
    std::sort(factors.begin(), factors.end());
  }

  std::size_t degree() const noexcept { return factors.size(); }

  /// Multiset inclusion of factors.
  bool divides(const FactoredSPolynomial& other) const {
    return std::includes(other.factors.begin(), other.factors.end(), factors.begin(), factors.end());
  }

  /// Distinct supports, shortlex ordered.
  std::vector<IndexSet> supports() const {
    std::vector<IndexSet> out;
    for (const auto& f : factors)
      if (out.empty() || out.back() != f.support) out.push_back(f.support);
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  friend bool operator==(const FactoredSPolynomial& a, const FactoredSPolynomial& b) {
    return a.factors == b.factors;
  }

  std::string to_string(bool latex = false) const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& f : factors) out += f.to_string(latex);
    return out;
  }
};

/// Index sets J(X) of the flats X != V whose localization A_X is irreducible.
inline std::vector<const Flat*> irreducible_flats(const Arrangement& a, const IntersectionLattice& lattice) {
  std::vector<const Flat*> out;
  for (const auto& x : lattice.flats) {
    if (x.J.empty()) continue;
    if (is_irreducible(localize(a, x.J))) out.push_back(&x);
  }
  return out;
}

namespace detail {

inline void require_free(const FreenessVerdict& verdict, bool assume_free) {
  if (assume_free || verdict.is_free()) return;
  if (verdict.outcome == FreenessOutcome::not_free)
    throw Error(ErrorKind::freeness_required, "characteristic polynomial has non-integral roots");
  throw Error(ErrorKind::freeness_required,
              verdict.budget_exhausted ? "freeness could not be certified within the search depth limit"
                                       : "freeness could not be certified (no addition-deletion chain found)");
}

inline void append_flat_factors(std::vector<LinearFactor>& out, const IndexSet& J, std::size_t codim,
                                std::size_t top) {
  for (std::size_t j = 0; j <= top; ++j)
    out.push_back({J, static_cast<std::int64_t>(codim + j)});
}

}  // namespace detail

/*
 * Generator of the Bernstein ideal of a free arrangement:
 *   prod over X in L'(A) of prod_{j=0}^{2(|J(X)| - r(X))} (sum_{i in J(X)} s_i + r(X) + j)
 * where L'(A) are the flats with irreducible localization.
 */
inline FactoredSPolynomial bernstein_generator(const Arrangement& a, const FreenessVerdict& verdict,
                                               bool assume_free = false) {
  detail::require_free(verdict, assume_free);
  IntersectionLattice lattice = intersection_lattice(a);
  std::vector<LinearFactor> factors;
  for (const Flat* x : irreducible_flats(a, lattice))
    detail::append_flat_factors(factors, x->J, x->codim, 2 * (x->J.size() - x->codim));
  return {std::move(factors), a.size()};
}

/// prod_{j=0}^{2(p-r)} (s_1 + ... + s_p + r + j) for an irreducible arrangement, r = rank.
inline FactoredSPolynomial lower_bound_irreducible(const Arrangement& a) {
  if (a.empty()) throw Error(ErrorKind::not_irreducible, "the empty arrangement is not irreducible");
  auto decomposition = irreducible_components(a);
  if (!decomposition.irreducible())
    throw Error(ErrorKind::not_irreducible,
                "arrangement splits into " + std::to_string(decomposition.blocks.size()) + " blocks");
  IndexSet all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
  std::vector<LinearFactor> factors;
  detail::append_flat_factors(factors, all, decomposition.rank, 2 * (a.size() - decomposition.rank));
  return {std::move(factors), a.size()};
}

/// Smallest N making every flat's block of the evident multiple cover the generator's.
inline std::size_t default_evident_multiple_order(const Arrangement& a) {
  IntersectionLattice lattice = intersection_lattice(a);
  std::size_t n = 0;
  for (const Flat* x : irreducible_flats(a, lattice)) n = std::max(n, 2 * (x->J.size() - x->codim));
  return n;
}

/// prod over X in L'(A) of prod_{j=0}^{N} (sum_{i in J(X)} s_i + r(X) + j); no freeness needed.
inline FactoredSPolynomial evident_multiple(const Arrangement& a, std::optional<std::size_t> order = std::nullopt) {
  IntersectionLattice lattice = intersection_lattice(a);
  std::size_t n = order ? *order : default_evident_multiple_order(a);
  std::vector<LinearFactor> factors;
  for (const Flat* x : irreducible_flats(a, lattice)) detail::append_flat_factors(factors, x->J, x->codim, n);
  return {std::move(factors), a.size()};
}

/*
 * Under s_i -> -s_i - 2 a factor (sum_J s_i + c) becomes -(sum_J s_i + 2|J| - c).
 * Returns (-1)^{#factors} when the image multiset equals the original.
 */
inline int symmetry_check(const FactoredSPolynomial& f) {
  std::vector<LinearFactor> image;
  image.reserve(f.factors.size());
  for (const auto& factor : f.factors)
    image.push_back({factor.support, 2 * static_cast<std::int64_t>(factor.support.size()) - factor.constant});
  std::sort(image.begin(), image.end());
  if (image != f.factors) {
    for (const auto& factor : f.factors) {
      LinearFactor partner{factor.support, 2 * static_cast<std::int64_t>(factor.support.size()) - factor.constant};
      if (std::count(f.factors.begin(), f.factors.end(), factor) !=
          std::count(f.factors.begin(), f.factors.end(), partner))
        throw Error(ErrorKind::asymmetry, "factor " + factor.to_string() + " has no partner " + partner.to_string() +
                                              " under s -> -s-2");
    }
    throw Error(ErrorKind::asymmetry, "factor multiset is not invariant under s -> -s-2");
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

/// Univariate product of (a*s + c)^m.
struct UnivariateFactored {
  struct Factor {
    std::int64_t slope;
    std::int64_t constant;
    unsigned multiplicity;
  };
  std::vector<Factor> factors;

  std::string to_string(bool latex = false) const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& f : factors) {
      out += "(";
      if (f.slope != 1) out += std::to_string(f.slope);
      out += "s";
      if (f.constant > 0)
        out += "+" + std::to_string(f.constant);
      else if (f.constant < 0)
        out += std::to_string(f.constant);
      out += ")";
      if (f.multiplicity > 1)
        out += latex ? "^{" + std::to_string(f.multiplicity) + "}" : "^" + std::to_string(f.multiplicity);
    }
    return out;
  }
};

enum class SpecializeMode { all_equal };

/// s_i = s for every i: (sum_J s_i + c) -> (|J| s + c), equal factors collected.
inline UnivariateFactored specialize(const FactoredSPolynomial& f, SpecializeMode = SpecializeMode::all_equal) {
  std::map<std::pair<std::int64_t, std::int64_t>, unsigned> counts;
  for (const auto& factor : f.factors) ++counts[{static_cast<std::int64_t>(factor.support.size()), factor.constant}];
  UnivariateFactored out;
  for (const auto& [key, m] : counts) out.factors.push_back({key.first, key.second, m});
  return out;
}

/// Slopes of the characteristic variety: hyperplanes sum_{i in J} s_i = 0.
struct SlopeSet {
  std::vector<IndexSet> slopes;

  std::string to_string(const IndexSet& J, bool latex = false) const {
    std::string out;
    for (std::size_t k = 0; k < J.size(); ++k) {
      if (k > 0) out += " + ";
      out += latex ? "s_{" + std::to_string(J[k] + 1) + "}" : "s" + std::to_string(J[k] + 1);
    }
    return out + " = 0";
  }
};

inline SlopeSet slopes(const Arrangement& a, const FreenessVerdict& verdict, bool assume_free = false) {
  detail::require_free(verdict, assume_free);
  IntersectionLattice lattice = intersection_lattice(a);
  SlopeSet out;
  for (const Flat* x : irreducible_flats(a, lattice)) out.slopes.push_back(x->J);
  std::sort(out.slopes.begin(), out.slopes.end(), shortlex_less);
  return out;
}

}  // namespace bideal

#endif  // BIDEAL_BERNSTEIN_HPP
