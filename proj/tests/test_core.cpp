#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace scmkit;
using oracle::exponents_of_degree;

namespace {

using QQ = Rationals;

std::vector<mpq_class> random_rationals(std::mt19937& rng, int count) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  std::vector<mpq_class> out;
  for (int k = 0; k < count; ++k) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool normalized(const mpq_class& q) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q.get_den() > 0 && (q.get_num() == 0 ? q.get_den() == 1 : g == 1);
}

}  // namespace

TEST(Field, RationalAxiomsOnSamples) {
  QQ F;
  std::mt19937 rng(7);
  auto xs = random_rationals(rng, 30);
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
    const auto &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
    EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
    EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    EXPECT_TRUE(F.is_zero(F.add(a, F.neg(a))));
    if (!F.is_zero(a)) EXPECT_TRUE(F.is_one(F.mul(a, F.inv(a))));
    for (const auto& r : {F.add(a, b), F.sub(a, b), F.mul(a, b), F.is_zero(b) ? a : F.div(a, b)})
      EXPECT_TRUE(normalized(r)) << r;
  }
}

TEST(Field, RationalDivisionByZeroThrows) {
  QQ F;
  EXPECT_THROW(F.div(F.one(), F.zero()), std::domain_error);
}

TEST(Field, PrimeFieldAxiomsOnSamples) {
  PrimeField F(101);
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int k = 0; k < 200; ++k) {
    auto a = F.from_int(d(rng)), b = F.from_int(d(rng)), c = F.from_int(d(rng));
    EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
    EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    EXPECT_TRUE(F.is_zero(F.add(a, F.neg(a))));
    if (!F.is_zero(a)) EXPECT_TRUE(F.is_one(F.mul(a, F.inv(a))));
    EXPECT_LT(a, 101u);
  }
  EXPECT_EQ(F.from_int(-1), 100u);
}

TEST(Field, PrimeFieldRejectsComposites) {
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(91), std::invalid_argument);
  EXPECT_THROW(PrimeField(1ULL << 31), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2147483647ULL - 0));
  EXPECT_NO_THROW(PrimeField(32003));
}

// Brute-force grevlex: higher degree wins; on ties, compare the last
// variable where the exponents differ, smaller exponent wins.
int grevlex_oracle(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t v = a.size(); v-- > 0;)
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  return 0;
}

int lex_oracle(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  return 0;
}

std::vector<std::vector<int>> all_up_to_degree(std::size_t n, int d) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= d; ++k)
    for (auto& e : exponents_of_degree(n, k)) out.push_back(e);
  return out;
}

TEST(MonomialOrder, GrevlexMatchesExhaustiveOracle) {
  auto es = all_up_to_degree(3, 3);
  auto ord = MonomialOrder::grevlex();
  for (const auto& a : es)
    for (const auto& b : es) {
      Monomial ma{std::span<const int>(a)}, mb{std::span<const int>(b)};
      EXPECT_EQ(ord.compare(ma, mb), grevlex_oracle(a, b));
    }
}

TEST(MonomialOrder, LexMatchesExhaustiveOracle) {
  auto es = all_up_to_degree(3, 3);
  auto ord = MonomialOrder::lex();
  for (const auto& a : es)
    for (const auto& b : es) {
      Monomial ma{std::span<const int>(a)}, mb{std::span<const int>(b)};
      EXPECT_EQ(ord.compare(ma, mb), lex_oracle(a, b));
    }
}

TEST(MonomialOrder, DegreeTwoGrevlexSortInThreeVariables) {
  // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
  auto ord = MonomialOrder::grevlex();
  std::vector<Monomial> sorted{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) EXPECT_GT(ord.compare(sorted[i], sorted[i + 1]), 0);
  EXPECT_LT(monomial_compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}, ord), 0);
}

TEST(MonomialOrder, LawsOnRandomTriples) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
    Monomial one(4);
    for (int k = 0; k < 300; ++k) {
      Monomial a{e(rng), e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng), e(rng)}, c{e(rng), e(rng), e(rng), e(rng)};
      EXPECT_EQ(ord.compare(a, b), -ord.compare(b, a));
      EXPECT_EQ(ord.compare(a, b) == 0, a == b);
      if (ord.compare(a, b) < 0 && ord.compare(b, c) < 0) EXPECT_LT(ord.compare(a, c), 0);
      EXPECT_EQ(ord.compare(a * c, b * c), ord.compare(a, b));
      EXPECT_LE(ord.compare(one, a), 0);
    }
  }
}

TEST(MonomialOrder, DegreeDominatesAndLengthMismatchThrows) {
  auto ord = MonomialOrder::grevlex();
  Monomial a{0, 2, 1};
  EXPECT_LT(monomial_compare(a, a * Monomial{1, 0, 0}, ord), 0);
  EXPECT_EQ(monomial_compare(a, a, ord), 0);
  EXPECT_THROW(monomial_compare(Monomial{1, 0}, Monomial{1, 0, 0}, ord), std::invalid_argument);
}

TEST(Poly, ArithmeticExamples) {
  auto R = make_ring(QQ{}, {"x", "y"});
  auto x = Poly<QQ>::variable(R, 0), y = Poly<QQ>::variable(R, 1);
  auto zero = Poly<QQ>(R), one = Poly<QQ>::constant(R, 1);
  EXPECT_EQ((x * y + zero), x * y);
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ(((x + y) * (x - y)).to_string(), "x^2 - y^2");
  EXPECT_EQ((x * one), x);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(((x + y) * (x + y)).degree(), 2);

  auto S = make_ring(QQ{}, {"x1", "x2", "y1", "y2"});
  auto f = Poly<QQ>::variable(S, 0) * Poly<QQ>::variable(S, 3) - Poly<QQ>::variable(S, 1) * Poly<QQ>::variable(S, 2);
  EXPECT_EQ(f * Poly<QQ>::constant(S, 1), f);
  // grevlex: x1*y2 carries the last variable, so it is the smaller term
  EXPECT_EQ(f.to_string(), "-x2*y1 + x1*y2");
}

TEST(Poly, RingMismatchThrows) {
  auto R = make_ring(QQ{}, {"x", "y"});
  auto T = make_ring(QQ{}, {"u", "v"});
  EXPECT_THROW(Poly<QQ>::variable(R, 0) + Poly<QQ>::variable(T, 0), std::invalid_argument);
}

TEST(Poly, LeadingTerm) {
  auto R = corpus::ring(5);
  auto f = corpus::mono(R, {2, 0, 0, 0, 1}) + corpus::mono(R, {0, 0, 1, 2, 0});
  // equal degree; the last variable x5 breaks the tie against x1^2*x5
  EXPECT_EQ(f.lead_monomial(), (Monomial{0, 0, 1, 2, 0}));
  auto lf = make_ring(QQ{}, R->names(), MonomialOrder::lex());
  EXPECT_EQ((corpus::mono(lf, {2, 0, 0, 0, 1}) + corpus::mono(lf, {0, 0, 1, 2, 0})).lead_monomial(), (Monomial{2, 0, 0, 0, 1}));
  auto g = corpus::mono(R, {0, 1, 1, 0, 0}).scaled(mpq_class(-3, 2));
  auto [c, m] = g.lead_term();
  EXPECT_EQ(c, mpq_class(-3, 2));
  EXPECT_EQ(m, (Monomial{0, 1, 1, 0, 0}));
  EXPECT_THROW(Poly<QQ>(R).lead_term(), std::domain_error);

  auto L = make_ring(QQ{}, {"x", "y"}, MonomialOrder::lex());
  auto h = Poly<QQ>::variable(L, 1) + Poly<QQ>::variable(L, 0);
  EXPECT_EQ(h.lead_monomial(), (Monomial{1, 0}));
}

TEST(Poly, NormalizationIsIdempotentAndMergesTerms) {
  auto R = make_ring(QQ{}, {"x", "y"});
  TermVec<QQ> ts{{mpq_class(1), Monomial{0, 1}, 0}, {mpq_class(2), Monomial{1, 0}, 0}, {mpq_class(-1), Monomial{0, 1}, 0},
                 {mpq_class(0), Monomial{1, 1}, 0}, {mpq_class(1, 2), Monomial{1, 0}, 0}};
  Poly<QQ> p(R, ts);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.lead_term().first, mpq_class(5, 2));
  Poly<QQ> again(R, p.terms());
  EXPECT_EQ(again, p);
  EXPECT_EQ(again.terms().size(), p.terms().size());
}

TEST(Poly, HomogeneityAndPowers) {
  auto R = make_ring(QQ{}, {"x", "y"});
  auto x = Poly<QQ>::variable(R, 0), y = Poly<QQ>::variable(R, 1);
  EXPECT_TRUE((x * x - x * y).is_homogeneous());
  EXPECT_FALSE((x * x + y).is_homogeneous());
  EXPECT_EQ((x + y).pow(3), (x + y) * (x + y) * (x + y));
}

TEST(Poly, PrimeFieldCoefficientsWrap) {
  auto R = make_ring(PrimeField(7), {"x", "y"});
  auto x = Poly<PrimeField>::variable(R, 0);
  auto seven_x = x.scaled(R->field().from_int(7));
  EXPECT_TRUE(seven_x.is_zero());
  EXPECT_EQ(((x + x + x) * Poly<PrimeField>::constant(R, 5)).to_string(), "x");
}

TEST(FreeModule, VecDegreeWithTwists) {
  auto R = make_ring(QQ{}, {"x", "y"});
  auto x = Poly<QQ>::variable(R, 0), y = Poly<QQ>::variable(R, 1);
  FreeModule F2(std::vector<int>{0, 1});
  auto v = Vec<QQ>::from_components(R, F2, {x * x, y});
  ASSERT_TRUE(v.degree().has_value());
  EXPECT_EQ(*v.degree(), 2);
  auto w = Vec<QQ>::from_components(R, F2, {x, y});
  EXPECT_FALSE(w.is_homogeneous());
}
