#include <gtest/gtest.h>

#include <random>

#include <bideal/bernstein.hpp>

#include "oracles.hpp"

using namespace bideal;

namespace {

FactoredSPolynomial generator(const Arrangement& a) { return bernstein_generator(a, freeness(a)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::malformed_input;
}

std::vector<Arrangement> free_corpus() {
  std::vector<Arrangement> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(family(Family::boolean, n));
  for (std::size_t p = 1; p <= 6; ++p) out.push_back(family(Family::generic2d, p));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(family(Family::braid, n));
  return out;
}

/// Direct sum of two arrangements, forms of b placed after a in both coordinates and order.
Arrangement direct_sum(const Arrangement& a, const Arrangement& b) {
  std::size_t n = a.dim() + b.dim();
  std::vector<Vector> forms;
  for (const auto& f : a.forms()) {
    Vector v(n);
    std::copy(f.begin(), f.end(), v.begin());
    forms.push_back(v);
  }
  for (const auto& f : b.forms()) {
    Vector v(n);
    std::copy(f.begin(), f.end(), v.begin() + a.dim());
    forms.push_back(v);
  }
  return make_arrangement(n, forms);
}

}  // namespace

TEST(Generator, Generic2d3) {
  auto f = generator(family(Family::generic2d, 3));
  EXPECT_EQ(f.to_string(), "(s1+1)(s2+1)(s3+1)(s1+s2+s3+2)(s1+s2+s3+3)(s1+s2+s3+4)");
  EXPECT_EQ(oracle::as_multiset(f), oracle::plane_lines_formula(3));
}

TEST(Generator, Braid3) {
  auto f = generator(family(Family::braid, 3));
  EXPECT_EQ(f.to_string(), "(s1+1)(s2+1)(s3+1)(s1+s2+s3+2)(s1+s2+s3+3)(s1+s2+s3+4)");
}

TEST(Generator, Boolean2) {
  EXPECT_EQ(generator(family(Family::boolean, 2)).to_string(), "(s1+1)(s2+1)");
}

TEST(Generator, LatexRendering) {
  EXPECT_EQ(generator(family(Family::boolean, 2)).to_string(true), "(s_{1}+1)(s_{2}+1)");
}

TEST(Generator, EmptyArrangementIsOne) {
  auto f = generator(make_arrangement(2, {}));
  EXPECT_EQ(f.degree(), 0u);
  EXPECT_EQ(f.to_string(), "1");
}

TEST(Generator, PlaneLinesMatchClosedForm) {
  for (std::size_t p = 3; p <= 7; ++p)
    EXPECT_EQ(oracle::as_multiset(generator(family(Family::generic2d, p))), oracle::plane_lines_formula(p));
}

TEST(Generator, BraidMatchesClosedForm) {
  for (std::size_t n = 2; n <= 5; ++n)
    EXPECT_EQ(oracle::as_multiset(generator(family(Family::braid, n))), oracle::braid_formula(n)) << "n=" << n;
}

TEST(Generator, RequiresFreeness) {
  Arrangement a = make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  try {
    bernstein_generator(a, freeness(a));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::freeness_required);
    EXPECT_STREQ(e.what(), "freeness-required: characteristic polynomial has non-integral roots");
  }
  EXPECT_NO_THROW(bernstein_generator(a, freeness(a), true));
}

TEST(Generator, UnknownVerdictAlsoRequiresFreeness) {
  Arrangement a = family(Family::braid, 4);
  auto v = freeness(a, 1);
  ASSERT_EQ(v.outcome, FreenessOutcome::unknown);
  EXPECT_EQ(kind_of([&] { bernstein_generator(a, v); }), ErrorKind::freeness_required);
  EXPECT_EQ(bernstein_generator(a, v, true), generator(a));
}

TEST(Generator, DegreeIsSumOverIrreducibleFlats) {
  for (const auto& a : free_corpus()) {
    auto lattice = intersection_lattice(a);
    std::size_t expected = 0;
    for (const Flat* x : irreducible_flats(a, lattice)) expected += 2 * (x->J.size() - x->codim) + 1;
    EXPECT_EQ(generator(a).degree(), expected);
  }
}

// ---------------------------------------------------------------------------

TEST(LowerBound, Generic2d3) {
  EXPECT_EQ(lower_bound_irreducible(family(Family::generic2d, 3)).to_string(),
            "(s1+s2+s3+2)(s1+s2+s3+3)(s1+s2+s3+4)");
}

TEST(LowerBound, EssentializedBraid3) {
  auto e = essentialize(family(Family::braid, 3)).arrangement;
  EXPECT_EQ(lower_bound_irreducible(e).to_string(), "(s1+s2+s3+2)(s1+s2+s3+3)(s1+s2+s3+4)");
}

TEST(LowerBound, SingleHyperplane) {
  EXPECT_EQ(lower_bound_irreducible(family(Family::boolean, 1)).to_string(), "(s1+1)");
}

TEST(LowerBound, ReducibleIsAnError) {
  EXPECT_EQ(kind_of([] { lower_bound_irreducible(family(Family::boolean, 2)); }), ErrorKind::not_irreducible);
  EXPECT_EQ(kind_of([] { lower_bound_irreducible(make_arrangement(2, {})); }), ErrorKind::not_irreducible);
}

TEST(LowerBound, DividesGeneratorOfIrreducibleFreeArrangements) {
  for (const auto& a : free_corpus()) {
    if (!is_irreducible(a)) continue;
    EXPECT_TRUE(lower_bound_irreducible(a).divides(generator(a)));
  }
}

// ---------------------------------------------------------------------------

TEST(EvidentMultiple, Boolean2OrderZero) {
  auto f = evident_multiple(family(Family::boolean, 2));
  EXPECT_EQ(default_evident_multiple_order(family(Family::boolean, 2)), 0u);
  EXPECT_EQ(f.to_string(), "(s1+1)(s2+1)");
}

TEST(EvidentMultiple, GeneratorDividesIt) {
  for (const auto& a : free_corpus()) {
    auto f = evident_multiple(a);
    EXPECT_TRUE(generator(a).divides(f));
    EXPECT_TRUE(generator(a).divides(evident_multiple(a, default_evident_multiple_order(a) + 2)));
  }
}

TEST(EvidentMultiple, WorksWithoutFreeness) {
  Arrangement a = make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  auto f = evident_multiple(a, 1);
  // Four singletons, and the top flat J = all with rank 3; no other flat is irreducible.
  EXPECT_EQ(f.degree(), 10u);
}

// ---------------------------------------------------------------------------

TEST(Symmetry, Examples) {
  FactoredSPolynomial product({{{0}, 1}, {{1}, 1}}, 2);
  EXPECT_EQ(symmetry_check(product), 1);
  EXPECT_EQ(symmetry_check(generator(family(Family::generic2d, 3))), 1);
  EXPECT_EQ(symmetry_check(FactoredSPolynomial({{{0}, 1}}, 1)), -1);
  EXPECT_EQ(kind_of([] { symmetry_check(FactoredSPolynomial({{{0}, 3}}, 1)); }), ErrorKind::asymmetry);
}

TEST(Symmetry, HoldsOnCorpusAndLocalizations) {
  for (const auto& a : free_corpus()) {
    EXPECT_NO_THROW(symmetry_check(generator(a)));
    for (const auto& x : intersection_lattice(a).flats) {
      Arrangement local = localize(a, x.J);
      EXPECT_NO_THROW(symmetry_check(generator(local)));
    }
  }
}

// ---------------------------------------------------------------------------

TEST(Specialize, Generic2d3) {
  auto u = specialize(generator(family(Family::generic2d, 3)));
  EXPECT_EQ(u.to_string(), "(s+1)^3(3s+2)(3s+3)(3s+4)");
  EXPECT_EQ(u.to_string(true), "(s+1)^{3}(3s+2)(3s+3)(3s+4)");
}

TEST(Specialize, Boolean2) { EXPECT_EQ(specialize(generator(family(Family::boolean, 2))).to_string(), "(s+1)^2"); }

TEST(Specialize, PreservesDegree) {
  for (const auto& a : free_corpus()) {
    auto f = generator(a);
    unsigned total = 0;
    for (const auto& u : specialize(f).factors) total += u.multiplicity;
    EXPECT_EQ(total, f.degree());
  }
}

// ---------------------------------------------------------------------------

TEST(Slopes, Braid3) {
  Arrangement a = family(Family::braid, 3);
  auto s = slopes(a, freeness(a));
  EXPECT_EQ(s.slopes, (std::vector<IndexSet>{{0}, {1}, {2}, {0, 1, 2}}));
  EXPECT_EQ(s.to_string(s.slopes[3]), "s1 + s2 + s3 = 0");
  EXPECT_EQ(s.to_string(s.slopes[0], true), "s_{1} = 0");
}

TEST(Slopes, BooleanAreCoordinates) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Arrangement a = family(Family::boolean, n);
    auto s = slopes(a, freeness(a));
    ASSERT_EQ(s.slopes.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(s.slopes[i], IndexSet{i});
  }
}

TEST(Slopes, Generic2d4) {
  Arrangement a = family(Family::generic2d, 4);
  auto s = slopes(a, freeness(a));
  EXPECT_EQ(s.slopes, (std::vector<IndexSet>{{0}, {1}, {2}, {3}, {0, 1, 2, 3}}));
}

TEST(Slopes, EqualGeneratorSupports) {
  for (const auto& a : free_corpus()) EXPECT_EQ(slopes(a, freeness(a)).slopes, generator(a).supports());
}

// ---------------------------------------------------------------------------

TEST(Properties, HyperplaneFactorsDivide) {
  for (const auto& a : free_corpus()) {
    std::vector<LinearFactor> hyperplanes;
    for (std::size_t i = 0; i < a.size(); ++i) hyperplanes.push_back({{i}, 1});
    EXPECT_TRUE(FactoredSPolynomial(hyperplanes, a.size()).divides(generator(a)));
  }
}

TEST(Properties, FactorsAreDistinct) {
  for (const auto& a : free_corpus()) {
    auto f = generator(a);
    EXPECT_EQ(std::adjacent_find(f.factors.begin(), f.factors.end()), f.factors.end());
  }
}

TEST(Properties, ConstantsFillIntervalPerFlat) {
  for (const auto& a : free_corpus()) {
    auto lattice = intersection_lattice(a);
    auto f = generator(a);
    for (const Flat* x : irreducible_flats(a, lattice)) {
      std::vector<std::int64_t> constants;
      for (const auto& factor : f.factors)
        if (factor.support == x->J) constants.push_back(factor.constant);
      std::int64_t lo = static_cast<std::int64_t>(x->codim);
      std::int64_t hi = 2 * static_cast<std::int64_t>(x->J.size()) - lo;
      ASSERT_EQ(constants.size(), static_cast<std::size_t>(hi - lo + 1));
      for (std::size_t k = 0; k < constants.size(); ++k) EXPECT_EQ(constants[k], lo + static_cast<std::int64_t>(k));
    }
  }
}

TEST(Properties, EssentializationInvariance) {
  for (const auto& a : free_corpus()) {
    auto e = essentialize(a).arrangement;
    EXPECT_EQ(generator(e), generator(a));
  }
}

TEST(Properties, PermutationInvariance) {
  std::mt19937 rng(5);
  for (const auto& a : free_corpus()) {
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vector> forms;
    for (auto i : perm) forms.push_back(a.form(i));
    auto g = generator(make_arrangement(a.dim(), forms));
    // Map supports of the permuted arrangement back to the original indices.
    oracle::FactorMultiset mapped;
    for (const auto& factor : g.factors) {
      IndexSet back;
      for (auto i : factor.support) back.push_back(perm[i]);
      std::sort(back.begin(), back.end());
      mapped.emplace_back(back, factor.constant);
    }
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, oracle::as_multiset(generator(a)));
  }
}

TEST(Properties, ProductMultiplicativity) {
  auto check = [](const Arrangement& a, const Arrangement& b) {
    auto sum = generator(direct_sum(a, b));
    auto expected = oracle::as_multiset(generator(a));
    for (const auto& factor : generator(b).factors) {
      IndexSet shifted;
      for (auto i : factor.support) shifted.push_back(i + a.size());
      expected.emplace_back(shifted, factor.constant);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(oracle::as_multiset(sum), expected);
  };
  check(family(Family::generic2d, 3), family(Family::generic2d, 4));
  check(family(Family::braid, 3), family(Family::boolean, 2));
  check(family(Family::generic2d, 3), family(Family::braid, 3));
}
