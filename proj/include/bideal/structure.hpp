#ifndef BIDEAL_STRUCTURE_HPP
#define BIDEAL_STRUCTURE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"

namespace bideal {

// ---------------------------------------------------------------------------
// Irreducible decomposition
// ---------------------------------------------------------------------------

struct IrreducibleDecomposition {
  /// Connected components of the linear matroid, each sorted, ordered by smallest index.
  std::vector<IndexSet> blocks;
  std::size_t e0 = 0;
  std::size_t rank = 0;

  /// Not a product of two nonempty arrangements (the inessential factor is empty).
  bool irreducible() const noexcept { return blocks.size() == 1; }
  bool essential() const noexcept { return e0 == 0; }
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

/*
 * Greedy basis B of the forms, then for each e outside B its fundamental
 * circuit C(e, B) = {e} + support of the expression of e on B. Components of
 * the matroid are the classes of the union of all fundamental circuits.
 */
inline IrreducibleDecomposition irreducible_components(const Arrangement& a) {
  if (a.empty()) throw Error(ErrorKind::empty_arrangement, "decomposition of the empty arrangement");
  const std::size_t p = a.size();

  std::vector<std::size_t> basis;
  std::vector<std::size_t> others;
  RowSpace span(a.dim());
  for (std::size_t i = 0; i < p; ++i) {
    if (span.contains(a.form(i))) {
      others.push_back(i);
    } else {
      span = span.sum(a.form(i));
      basis.push_back(i);
    }
  }

  // Coordinates on the basis: solve through the RREF of the transposed basis matrix.
  Matrix columns(a.dim(), Vector(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < a.dim(); ++j) columns[j][k] = a.form(basis[k])[j];

  detail::UnionFind uf(p);
  for (std::size_t e : others) {
    Matrix aug = columns;
    for (std::size_t j = 0; j < a.dim(); ++j) aug[j].push_back(a.form(e)[j]);
    RowSpace reduced = rref(aug, basis.size() + 1).space;
    // The system is consistent with a unique solution: pivots are the first |B| columns.
    for (std::size_t k = 0; k < reduced.rank(); ++k) {
      const Rational& coeff = reduced.rows()[k][basis.size()];
      if (coeff != 0) uf.unite(e, basis[reduced.pivots()[k]]);
    }
  }

  std::map<std::size_t, IndexSet> classes;
  for (std::size_t i = 0; i < p; ++i) classes[uf.find(i)].push_back(i);
  IrreducibleDecomposition out;
  for (auto& [root, members] : classes) out.blocks.push_back(std::move(members));
  out.rank = basis.size();
  out.e0 = a.dim() - out.rank;
  return out;
}

inline bool is_irreducible(const Arrangement& a) { return !a.empty() && irreducible_components(a).irreducible(); }

// ---------------------------------------------------------------------------
// Exponents
// ---------------------------------------------------------------------------

/// Integral factorization attempt of chi(A, t) into linear factors (t - e), e >= 0.
struct ExponentReport {
  IntPolynomial char_poly;
  /// Nonnegative integer roots extracted, ascending, with multiplicity.
  std::vector<std::int64_t> roots;
  /// chi divided by the extracted factors; the constant 1 when chi splits completely.
  IntPolynomial residual;

  bool integral() const { return residual.coeffs == std::vector<std::int64_t>{1}; }
  const std::vector<std::int64_t>& exponents() const { return roots; }
};

inline ExponentReport exponents(const IntPolynomial& chi, std::size_t max_root) {
  ExponentReport report{chi, {}, chi};
  for (std::int64_t e = 0; e <= static_cast<std::int64_t>(max_root) && report.residual.degree() > 0;) {
    if (report.residual(e) != 0) {
      ++e;
      continue;
    }
    // Synthetic division by (t - e).
    const auto& c = report.residual.coeffs;
    std::vector<std::int64_t> q(c.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = c[k] + carry * e;
      q[k - 1] = carry;
    }
    report.residual.coeffs = std::move(q);
    report.roots.push_back(e);
  }
  return report;
}

/// Roots of chi are bounded by p, so candidates 0..p suffice.
inline ExponentReport exponents(const Arrangement& a) { return exponents(char_poly(a), a.size()); }

namespace detail {

inline bool multiset_includes(std::vector<std::int64_t> big, std::vector<std::int64_t> small) {
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

/// Polynomial vector field sum_j a_j d/dx_j.
struct Derivation {
  std::vector<MultiPoly> coeffs;

  std::size_t dim() const noexcept { return coeffs.size(); }

  /// Common degree of the nonzero coefficients; nullopt when inhomogeneous or zero.
  std::optional<unsigned> degree() const {
    std::optional<unsigned> d;
    for (const auto& a : coeffs) {
      if (a.is_zero()) continue;
      auto h = a.homogeneous_degree();
      if (!h || (d && *d != *h)) return std::nullopt;
      d = h;
    }
    return d;
  }

  /// delta(l) = sum_k a_k * l_k for the linear form l.
  MultiPoly apply(const Vector& form) const {
    MultiPoly out(dim());
    for (std::size_t k = 0; k < dim(); ++k)
      if (form[k] != 0) out += coeffs[k] * form[k];
    return out;
  }

  /// Renders as "x1*d1 + x2*d2", d_j standing for d/dx_j.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < dim(); ++k) {
      const MultiPoly& a = coeffs[k];
      if (a.is_zero()) continue;
      std::string body = a.to_string();
      bool negative = a.terms().size() == 1 && a.leading().second < 0;
      if (negative) body = (-a).to_string();
      std::string d = "d" + std::to_string(k + 1);
      std::string term;
      if (body == "1")
        term = d;
      else if (a.terms().size() > 1)
        term = "(" + body + ")*" + d;
      else
        term = body + "*" + d;
      if (out.empty())
        out = negative ? "-" + term : term;
      else
        out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

  /// Euler field sum_j x_j d/dx_j.
  static Derivation euler(std::size_t n) { return power_sum(n, 1); }

  /// theta_k = sum_j x_j^k d/dx_j.
  static Derivation power_sum(std::size_t n, unsigned k) {
    Derivation d;
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly c(n);
      Exponents e(n, 0);
      e[j] = k;
      c.add_term(std::move(e), 1);
      d.coeffs.push_back(std::move(c));
    }
    return d;
  }
};

/// Outcome of the logarithmic test: all quotients b_j, or the first failing form.
struct LogarithmicCheck {
  std::vector<MultiPoly> quotients;
  std::optional<std::size_t> failed_form;

  bool ok() const noexcept { return !failed_form.has_value(); }
};

/// delta(l_j) must be divisible by l_j for every j; the quotients are the b_j.
inline LogarithmicCheck check_logarithmic(const Arrangement& a, const Derivation& d) {
  if (d.dim() != a.dim())
    throw Error(ErrorKind::malformed_input, "derivation has " + std::to_string(d.dim()) + " coefficients, expected " +
                                                std::to_string(a.dim()));
  for (const auto& c : d.coeffs)
    if (c.nvars() != a.dim()) throw Error(ErrorKind::malformed_input, "derivation coefficient in wrong variables");
  LogarithmicCheck out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto q = divide_exact(d.apply(a.form(j)), MultiPoly::linear(a.form(j)));
    if (!q) {
      out.failed_form = j;
      out.quotients.clear();
      return out;
    }
    out.quotients.push_back(std::move(*q));
  }
  return out;
}

struct SaitoResult {
  bool accepted = false;
  /// det(a_ij) = c * Q when accepted.
  Rational c;
};

/// Saito's criterion: n logarithmic derivations form a basis iff det = c * Q with c != 0.
inline SaitoResult saito_check(const Arrangement& a, const std::vector<Derivation>& basis) {
  if (basis.size() != a.dim())
    throw Error(ErrorKind::malformed_input, "basis has " + std::to_string(basis.size()) + " derivations, expected " +
                                                std::to_string(a.dim()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto check = check_logarithmic(a, basis[k]);
    if (!check.ok()) throw NotLogarithmicError(k, *check.failed_form);
  }
  PolyMatrix m;
  for (const auto& d : basis) m.push_back(d.coeffs);
  MultiPoly det = det_poly(m, a.dim());
  if (det.is_zero()) return {false, 0};
  MultiPoly q = a.defining_polynomial();
  Rational c = det.leading().second / q.leading().second;
  if (det != q * c) return {false, 0};
  return {true, c};
}

/// delta~ = delta - sum_j b_j s_j, with delta(l_j) = b_j l_j.
struct TildeOperator {
  Derivation base;
  std::vector<MultiPoly> s_coeffs;

  std::string to_string() const {
    std::string s_part;
    std::size_t nonzero_terms = 0;
    for (std::size_t j = 0; j < s_coeffs.size(); ++j) {
      const MultiPoly& b = s_coeffs[j];
      if (b.is_zero()) continue;
      std::string sj = "s" + std::to_string(j + 1);
      std::string term;
      bool negative = b.terms().size() == 1 && b.leading().second < 0;
      std::string body = negative ? (-b).to_string() : b.to_string();
      if (body == "1")
        term = sj;
      else if (b.terms().size() > 1)
        term = "(" + body + ")*" + sj;
      else
        term = body + "*" + sj;
      nonzero_terms += b.terms().size();
      if (s_part.empty())
        s_part = negative ? "-" + term : term;
      else
        s_part += (negative ? " - " : " + ") + term;
    }
    std::string out = base.to_string();
    if (s_part.empty()) return out;
    return out + " - " + (nonzero_terms > 1 ? "(" + s_part + ")" : s_part);
  }
};

inline TildeOperator tilde(const Arrangement& a, const Derivation& d) {
  auto check = check_logarithmic(a, d);
  if (!check.ok()) throw NotLogarithmicError(0, *check.failed_form);
  return {d, std::move(check.quotients)};
}

/// Generators delta~_1..delta~_n of Ann l_1^{s_1}...l_p^{s_p} for a Saito basis.
inline std::vector<TildeOperator> annihilator_presentation(const Arrangement& a,
                                                           const std::vector<Derivation>& basis) {
  auto saito = saito_check(a, basis);
  if (!saito.accepted)
    throw Error(ErrorKind::basis_rejected, "determinant of the basis is not a nonzero multiple of Q");
  std::vector<TildeOperator> out;
  out.reserve(basis.size());
  for (const auto& d : basis) out.push_back(tilde(a, d));
  return out;
}

/*
 * Known bases of D(A) for the named families:
 *   braid(n)     theta_k = sum_i x_i^k d_i, k = 0..n-1
 *   boolean(n)   x_i d_i
 *   generic2d(p) the Euler field and (-dQ/dy, dQ/dx)
 */
inline std::vector<Derivation> builtin_basis(Family f, std::size_t parameter) {
  Arrangement a = family(f, parameter);
  const std::size_t n = a.dim();
  std::vector<Derivation> basis;
  switch (f) {
    case Family::braid:
      for (unsigned k = 0; k < n; ++k) basis.push_back(Derivation::power_sum(n, k));
      break;
    case Family::boolean:
      for (std::size_t i = 0; i < n; ++i) {
        Derivation d;
        for (std::size_t j = 0; j < n; ++j) d.coeffs.push_back(i == j ? MultiPoly::variable(n, j) : MultiPoly(n));
        basis.push_back(std::move(d));
      }
      break;
    case Family::generic2d: {
      MultiPoly q = a.defining_polynomial();
      basis.push_back(Derivation::euler(2));
      basis.push_back(Derivation{{-derivative(q, 1), derivative(q, 0)}});
      break;
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Freeness
// ---------------------------------------------------------------------------

enum class FreenessOutcome { free, not_free, unknown };

constexpr std::string_view to_string(FreenessOutcome o) {
  switch (o) {
    case FreenessOutcome::free: return "free";
    case FreenessOutcome::not_free: return "not-free";
    case FreenessOutcome::unknown: return "unknown";
  }
  return "";
}

/// One addition-deletion step: A is free because A' = A \ H_deleted and A'' = A^{H_deleted} are.
struct InductiveStep {
  std::size_t deleted = 0;
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> deletion_exponents;
  std::vector<std::int64_t> restriction_exponents;
  std::shared_ptr<const InductiveStep> deletion;
  std::shared_ptr<const InductiveStep> restriction;
};

struct RankAtMostTwo {
  std::size_t rank = 0;
};

struct InductiveChain {
  /// Null for the empty arrangement.
  std::shared_ptr<const InductiveStep> root;

  /// Number of deletions down to the empty arrangement.
  std::size_t length() const {
    std::size_t n = 0;
    for (const InductiveStep* s = root.get(); s; s = s->deletion.get()) ++n;
    return n;
  }
};

struct SaitoWitness {
  std::vector<Derivation> basis;
  Rational c;
};

using FreenessCertificate = std::variant<std::monostate, RankAtMostTwo, InductiveChain, SaitoWitness>;

struct FreenessVerdict {
  FreenessOutcome outcome = FreenessOutcome::unknown;
  FreenessCertificate certificate;
  /// Present for NotFree: the factorization attempt that failed.
  std::optional<ExponentReport> evidence;
  std::size_t expanded_nodes = 0;
  /// The inductive search hit depth_limit before finishing.
  bool budget_exhausted = false;

  bool is_free() const noexcept { return outcome == FreenessOutcome::free; }
};

inline constexpr std::size_t default_depth_limit = 10000;

namespace detail {

struct BudgetExhausted {};

/*
 * Memoized addition-deletion search. Sub-arrangements are keyed on their
 * dimension plus the sorted list of normalized forms; a memo entry records
 * either a certificate or a definite "not inductively free".
 */
class InductiveSearch {
 public:
  using StepPtr = std::shared_ptr<const InductiveStep>;

  explicit InductiveSearch(std::size_t budget) : budget_(budget) {}

  std::size_t expanded() const noexcept { return expanded_; }

  /// nullopt: not inductively free. A null pointer inside means the empty arrangement.
  std::optional<StepPtr> run(const Arrangement& a) {
    if (a.empty()) return StepPtr{};
    Key key = make_key(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++expanded_ > budget_) throw BudgetExhausted{};

    std::optional<StepPtr> result;
    ExponentReport own = exponents(a);
    if (own.integral()) result = try_deletions(a, own);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  using Key = std::pair<std::size_t, std::vector<Vector>>;

  static Key make_key(const Arrangement& a) {
    std::vector<Vector> forms = a.forms();
    std::sort(forms.begin(), forms.end());
    return {a.dim(), std::move(forms)};
  }

  std::optional<StepPtr> try_deletions(const Arrangement& a, const ExponentReport& own) {
    for (std::size_t i = a.size(); i-- > 0;) {
      Arrangement del = deletion(a, i);
      Arrangement res = restriction(a, i);
      ExponentReport del_exp = exponents(del);
      ExponentReport res_exp = exponents(res);
      if (!del_exp.integral() || !res_exp.integral()) continue;
      if (!multiset_includes(del_exp.roots, res_exp.roots)) continue;
      auto res_step = run(res);
      if (!res_step) continue;
      auto del_step = run(del);
      if (!del_step) continue;
      auto step = std::make_shared<InductiveStep>();
      step->deleted = i;
      step->exponents = own.roots;
      step->deletion_exponents = del_exp.roots;
      step->restriction_exponents = res_exp.roots;
      step->deletion = *del_step;
      step->restriction = *res_step;
      return StepPtr(std::move(step));
    }
    return std::nullopt;
  }

  std::size_t budget_;
  std::size_t expanded_ = 0;
  std::map<Key, std::optional<StepPtr>> memo_;
};

}  // namespace detail

/*
 * Three-valued freeness:
 *   rank <= 2                 Free (inductive chain when the search fits the budget)
 *   chi not split over N      NotFree, with the factorization as evidence
 *   addition-deletion chain   Free
 *   otherwise                 Unknown
 * depth_limit bounds the number of distinct sub-arrangements expanded.
 */
inline FreenessVerdict freeness(const Arrangement& a, std::size_t depth_limit = default_depth_limit) {
  FreenessVerdict verdict;
  const std::size_t r = a.rank();
  ExponentReport report = exponents(a);

  if (r > 2 && !report.integral()) {
    verdict.outcome = FreenessOutcome::not_free;
    verdict.evidence = std::move(report);
    return verdict;
  }

  detail::InductiveSearch search(depth_limit);
  std::optional<detail::InductiveSearch::StepPtr> chain;
  bool exhausted = false;
  try {
    chain = search.run(a);
  } catch (const detail::BudgetExhausted&) {
    exhausted = true;
  }
  verdict.expanded_nodes = search.expanded();
  verdict.budget_exhausted = exhausted;

  if (chain) {
    verdict.outcome = FreenessOutcome::free;
    verdict.certificate = InductiveChain{*chain};
  } else if (r <= 2) {
    verdict.outcome = FreenessOutcome::free;
    verdict.certificate = RankAtMostTwo{r};
  } else {
    verdict.outcome = FreenessOutcome::unknown;
  }
  return verdict;
}

/// Free verdict backed by an accepted Saito basis.
inline FreenessVerdict saito_verdict(const Arrangement& a, const std::vector<Derivation>& basis) {
  auto result = saito_check(a, basis);
  FreenessVerdict verdict;
  if (result.accepted) {
    verdict.outcome = FreenessOutcome::free;
    verdict.certificate = SaitoWitness{basis, result.c};
  }
  return verdict;
}

}  // namespace bideal

#endif  // BIDEAL_STRUCTURE_HPP
