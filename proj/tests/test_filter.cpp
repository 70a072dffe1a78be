#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace scmkit;
using corpus::mono;
using QQ = Rationals;

namespace {

Poly<QQ> var(const RingPtr<QQ>& R, const std::string& name) {
  return Poly<QQ>::variable(R, static_cast<std::size_t>(R->index_of(name)));
}

Graph example_graph() {
  return Graph(10, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {1, 10}, {6, 7}, {8, 9}, {8, 10}, {9, 10}});
}

Ideal<QQ> mixed_ideal() {
  auto R = make_ring(QQ{}, {"x", "y"});
  return Ideal<QQ>(R, {mono(R, {2, 0}), mono(R, {1, 1})});
}

// Path-graph binomial edge ideals and the monomial corpus, each with its
// computed decomposition.
std::vector<std::pair<Ideal<QQ>, Decomposition<QQ>>> decomposed_corpus(int random_count = 20) {
  std::vector<std::pair<Ideal<QQ>, Decomposition<QQ>>> out;
  for (int n : {3, 4}) {
    auto J = corpus::path_edge_ideal(n);
    std::vector<Graph::Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    out.emplace_back(J, binomial_edge_primes(Graph(n, es), J.ring()));
  }
  for (const auto& c : corpus::monomial_corpus(random_count)) out.emplace_back(c.ideal, monomial_decomposition(c.ideal));
  return out;
}

}  // namespace

// Hand computation for I = (x^2, xy) = (x) ∩ (x^2, y):
//   components (x) of dim 1 and (x^2, y) of dim 0, so d = 1;
//   I^<0> = (x), I^<1> = S, I^<-1> = I; minimum dimension 0;
//   U_1 = S/(x), which is nonzero, so I is not unmixed;
//   depth S/I^<0> = depth S/(x) = 1 >= 1, so S/I is SCM.
TEST(Filter, MixedMonomialExample) {
  auto I = mixed_ideal();
  const auto& R = I.ring();
  auto D = monomial_decomposition(I);
  FilterProfile<QQ> F(D);
  EXPECT_EQ(F.dim(), 1);
  EXPECT_TRUE(F.filter_ideal(-1) == I);
  EXPECT_TRUE(F.filter_ideal(0) == Ideal<QQ>(R, {mono(R, {1, 0})}));
  EXPECT_TRUE(F.filter_ideal(1).is_unit());
  EXPECT_EQ(F.minimum_dimension(), 0);
  auto U1 = F.unmixed_layer(1);
  EXPECT_FALSE(U1.is_zero());
  EXPECT_TRUE(module_equals(U1, ModulePresentation<QQ>::quotient(Ideal<QQ>(R, {mono(R, {1, 0})}))));
  EXPECT_FALSE(F.is_unmixed());
  auto rep = F.scm_report();
  EXPECT_TRUE(rep.scm);
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_EQ(rep.checks[0].depth, 1);
  EXPECT_TRUE(is_scm_ideal(I, D));
}

TEST(Filter, PrimeIdealIsUnmixed) {
  auto R = make_ring(QQ{}, {"x", "y"});
  Ideal<QQ> P(R, {mono(R, {1, 0})});
  auto D = monomial_decomposition(P);
  EXPECT_EQ(minimum_dimension(P, D), 1);
  EXPECT_TRUE(is_unmixed(P, D));
  EXPECT_TRUE(filter_ideal(P, 0, D) == P);
  EXPECT_TRUE(filter_ideal(P, 1, D).is_unit());
}

TEST(Filter, CompleteIntersectionIsScm) {
  auto R = corpus::ring(5);
  Ideal<QQ> ci(R, {mono(R, {1, 1, 0, 0, 0}), mono(R, {0, 0, 1, 1, 0})});
  auto D = monomial_decomposition(ci);
  EXPECT_TRUE(is_scm_ideal(ci, D));
  EXPECT_TRUE(is_unmixed(ci, D));
  for (int i = 1; i < 3; ++i) EXPECT_TRUE(unmixed_layer(ci, i, D).is_zero());
}

TEST(Filter, ExampleGraph) {
  auto R = corpus::edge_ring(10);
  auto G = example_graph();
  auto J = binomial_edge_ideal(G, R);
  auto D = binomial_edge_primes(G, R);
  FilterProfile<QQ> F(D);
  EXPECT_EQ(F.dim(), 15);
  Ideal<QQ> cone_prime(R, {var(R, "y1"), var(R, "x1"), edge_binomial(R, 10, 9, 10), edge_binomial(R, 10, 8, 10),
                   edge_binomial(R, 10, 8, 9), edge_binomial(R, 10, 6, 7)});
  EXPECT_TRUE(F.filter_ideal(13) == cone_prime);
  EXPECT_EQ(F.minimum_dimension(), 11);
  EXPECT_TRUE(F.filter_ideal(7) == J);
  EXPECT_FALSE(F.filter_ideal(11) == J);
  EXPECT_FALSE(F.is_unmixed());
  EXPECT_TRUE(F.filter_ideal(15).is_unit());

  auto U13 = F.unmixed_layer(13);
  EXPECT_FALSE(U13.is_cokernel());
  EXPECT_EQ(U13.generators().cols(), 6u);
  EXPECT_TRUE(U13.is_zero());  // I^<12> = I^<13>
  auto U11 = F.unmixed_layer(11);
  EXPECT_FALSE(U11.is_zero());
  EXPECT_NE(U13.to_string().find("subquotient"), std::string::npos);

  auto rep = F.scm_report(1, true);
  EXPECT_TRUE(rep.scm);
  ASSERT_EQ(rep.checks.size(), 15u);
  for (const auto& c : rep.checks) EXPECT_EQ(c.depth, c.index < 11 ? 11 : 15) << c.index;
  EXPECT_TRUE(F.scm_report(4).scm);
}

TEST(Filter, Errors) {
  auto I = mixed_ideal();
  auto D = monomial_decomposition(I);
  EXPECT_THROW(filter_ideal(I, 2, D), std::out_of_range);
  EXPECT_THROW(filter_ideal(I, -2, D), std::out_of_range);
  EXPECT_THROW(unmixed_layer(I, 0, D), std::out_of_range);
  auto other = Ideal<QQ>(I.ring(), {mono(I.ring(), {1, 0})});
  EXPECT_THROW(filter_ideal(other, 0, D), std::invalid_argument);
  Decomposition<QQ> unit(Ideal<QQ>::unit(I.ring()), {}, Provenance::UserSupplied);
  EXPECT_THROW(FilterProfile<QQ>{unit}, std::invalid_argument);
}

TEST(Filter, ChainProperty) {
  for (const auto& [I, D] : decomposed_corpus()) {
    FilterProfile<QQ> F(D);
    EXPECT_TRUE(F.filter_ideal(-1) == I) << I.to_string();
    EXPECT_TRUE(F.filter_ideal(F.dim()).is_unit()) << I.to_string();
    for (int i = -1; i < F.dim(); ++i) EXPECT_TRUE(F.filter_ideal(i).is_subset_of(F.filter_ideal(i + 1))) << I.to_string();
  }
}

TEST(Filter, DecompositionIndependence) {
  for (const auto& c : corpus::monomial_corpus()) {
    const auto& I = c.ideal;
    auto merged = monomial_decomposition(I);
    auto unmerged = monomial_irreducible_decomposition(I);
    std::vector<std::size_t> rev(merged.components().size());
    std::iota(rev.rbegin(), rev.rend(), 0);
    auto permuted = merged.permuted(rev);
    std::vector<ComponentSpec<QQ>> specs;
    for (const auto& comp : merged.components()) specs.push_back({comp.primary, comp.radical});
    auto user = load_user_decomposition(I, specs);
    FilterProfile<QQ> a(merged), b(unmerged), p(permuted), u(user);
    ASSERT_EQ(a.dim(), b.dim());
    for (int i = -1; i <= a.dim(); ++i) {
      EXPECT_TRUE(a.filter_ideal(i) == b.filter_ideal(i)) << c.name << " i=" << i;
      EXPECT_TRUE(a.filter_ideal(i) == p.filter_ideal(i)) << c.name << " i=" << i;
      EXPECT_TRUE(a.filter_ideal(i) == u.filter_ideal(i)) << c.name << " i=" << i;
    }
    EXPECT_EQ(a.minimum_dimension(), b.minimum_dimension()) << c.name;
    EXPECT_EQ(a.is_unmixed(), b.is_unmixed()) << c.name;
    EXPECT_EQ(a.scm_report().scm, u.scm_report().scm) << c.name;
  }
}

TEST(Filter, MinimumDimensionIsSmallestComponent) {
  for (const auto& c : corpus::monomial_corpus()) {
    for (const auto& D : {monomial_decomposition(c.ideal), monomial_irreducible_decomposition(c.ideal)}) {
      int least = kInfinity;
      for (const auto& comp : D.components()) least = std::min(least, comp.dim);
      EXPECT_EQ(minimum_dimension(c.ideal, D), least) << c.name;
      EXPECT_GE(least, -1);
    }
  }
}

TEST(Filter, UnmixednessMatchesEqualComponentDimensions) {
  int unmixed = 0, mixed = 0;
  for (const auto& c : corpus::monomial_corpus()) {
    auto D = monomial_decomposition(c.ideal);
    bool equal = std::all_of(D.components().begin(), D.components().end(),
                             [&](const auto& comp) { return comp.dim == D.components().front().dim; });
    EXPECT_EQ(is_unmixed(c.ideal, D), equal) << c.name;
    (equal ? unmixed : mixed)++;
  }
  EXPECT_GT(unmixed, 0);
  EXPECT_GT(mixed, 0);
}

TEST(Filter, CriteriaAgreeOnSmallIdeals) {
  for (const auto& [I, D] : decomposed_corpus(10)) {
    bool by_depth = is_scm_ideal(I, D);
    bool by_ext = is_scm_module(ModulePresentation<QQ>::quotient(I));
    EXPECT_EQ(by_depth, by_ext) << I.to_string();
  }
}

TEST(Filter, ThreadedReportMatchesSequential) {
  for (const auto& c : corpus::monomial_corpus(10, 5)) {
    FilterProfile<QQ> F(monomial_decomposition(c.ideal));
    auto a = F.scm_report(1, true), b = F.scm_report(3, true);
    EXPECT_EQ(a.scm, b.scm) << c.name;
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k) EXPECT_EQ(a.checks[k].depth, b.checks[k].depth);
  }
}
