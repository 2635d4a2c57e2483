#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace knotcob;

namespace {

const char* kTorusKnot = "O1+ O2+ U1+ U2+";
const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kFigureEight = "O1+ U2+ O3- U4- O2+ U1+ O4- U3-";

KnotInvariants of(const GaussCode& c) { return invariants_of(build_carter(c)); }
KnotInvariants of(const std::string& c) { return of(parse_gauss_code(c)); }

GradedMatrix paper_matrix_2() {
  return GradedMatrix({"s", "x", "y"}, {0, 1, 1}, {{0, -1, 1}, {1, 0, 1}, {-1, -1, 0}});
}

}  // namespace

// [PAPER] u+ = u- = t for the two-crossing knot on the torus.
TEST(Polynomials, TwoCrossingKnot) {
  const KnotInvariants inv = of(kTorusKnot);
  EXPECT_EQ(inv.u_plus.to_string(), "t");
  EXPECT_EQ(inv.u_minus.to_string(), "t");
}

// [PAPER] classical knots have vanishing polynomials.
TEST(Polynomials, ClassicalKnotsVanish) {
  for (const char* c : {kTrefoil, kFigureEight, "O1+ U1+", ""}) {
    const KnotInvariants inv = of(c);
    EXPECT_TRUE(inv.u_plus.is_zero()) << c;
    EXPECT_TRUE(inv.u_minus.is_zero()) << c;
    EXPECT_TRUE(inv.primitive.result.is_trivial()) << c;
  }
}

TEST(Halves, DistinguishedBranch) {
  const EmbeddedDiagram d = build_carter(parse_gauss_code("O1- U1-"));
  const auto hs = halves(d);
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_EQ(hs[0].sign, -1);
  // eta = -writhe because the first pass is Over with writhe -1: the half starts at the second pass
  EXPECT_EQ(a_branch_position(d.crossings()[0]), 1);
  EXPECT_EQ(hs[0].path.size(), 1u);
}

// [PAPER] T(D) of the two-crossing knot is the displayed matrix.
TEST(GradedMatrixOf, TwoCrossingKnot) {
  const KnotInvariants inv = of(kTorusKnot);
  EXPECT_TRUE(is_isomorphic(inv.matrix, paper_matrix_2()));
  EXPECT_TRUE(oracle::isomorphic(inv.matrix, paper_matrix_2()));
  EXPECT_TRUE(is_primitive(inv.matrix));
  EXPECT_TRUE(is_isomorphic(inv.primitive.result, inv.matrix));
}

// [DERIVED] T(D) and u+- agree with the pushoff oracle and the defining formula.
TEST(GradedMatrixOf, AgreesWithOracleOnRandomCodes) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const GaussCode c = random_code(static_cast<int>(rng() % 7), rng);
    const KnotInvariants inv = of(c);
    const IntMatrix o = oracle::matrix_of(c);
    ASSERT_EQ(oracle::by_labels(inv.matrix, c.labels()), o) << serialize(c);
    std::vector<int> signs;
    std::vector<Int> n;
    for (std::size_t i = 0; i < c.labels().size(); ++i) {
      signs.push_back(c.writhe(c.labels()[i]));
      n.push_back(o[i + 1][0]);
      EXPECT_EQ(inv.matrix.sign(static_cast<int>(i) + 1), signs.back());
    }
    const auto [plus, minus] = oracle::u_from(signs, n);
    EXPECT_EQ(oracle::terms(inv.u_plus), plus) << serialize(c);
    EXPECT_EQ(oracle::terms(inv.u_minus), minus) << serialize(c);
    // u+-(T(D)) = u+-(K)
    EXPECT_EQ(u_pm_of_matrix(inv.matrix), std::make_pair(inv.u_plus, inv.u_minus));
    EXPECT_EQ(u_pm_of_matrix(inv.primitive.result), std::make_pair(inv.u_plus, inv.u_minus));
    // u+'(1) = u-'(1)
    EXPECT_EQ(inv.u_plus.derivative_at_one(), inv.u_minus.derivative_at_one());
    EXPECT_TRUE(inv.matrix.is_skew());
  }
}

// [PAPER] u+-(mirror) = -u-+, u+-(reverse) = u-+, T.(-K) = (T.)^-, T.(mirror) = -(T.)^-.
TEST(Symmetries, MirrorAndReverse) {
  std::mt19937_64 rng(59);
  std::vector<GaussCode> codes{parse_gauss_code(kTorusKnot), parse_gauss_code(kTrefoil), alpha_pq(2, 3, {1, -1, 1, 1, -1})};
  for (int i = 0; i < 40; ++i) codes.push_back(random_code(static_cast<int>(rng() % 6), rng));
  for (const GaussCode& c : codes) {
    const KnotInvariants k = of(c), m = of(mirror(c)), r = of(reverse(c));
    EXPECT_EQ(m.u_plus, -k.u_minus) << serialize(c);
    EXPECT_EQ(m.u_minus, -k.u_plus) << serialize(c);
    EXPECT_EQ(r.u_plus, k.u_minus) << serialize(c);
    EXPECT_EQ(r.u_minus, k.u_plus) << serialize(c);
    EXPECT_TRUE(is_isomorphic(r.primitive.result, bar(k.primitive.result))) << serialize(c);
    EXPECT_TRUE(is_isomorphic(m.primitive.result, neg(bar(k.primitive.result)))) << serialize(c);
  }
}

// [PAPER] u+- add under connected sum.
TEST(Symmetries, ConnectedSumAdds) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const GaussCode a = random_code(static_cast<int>(rng() % 4), rng), b = random_code(static_cast<int>(rng() % 4), rng);
    const KnotInvariants ka = of(a), kb = of(b), ks = of(connected_sum(a, b));
    EXPECT_EQ(ks.u_plus, ka.u_plus + kb.u_plus);
    EXPECT_EQ(ks.u_minus, ka.u_minus + kb.u_minus);
  }
}

// [PAPER] u+- of alpha_{p,q} = +-(a+- t^q - b-+ t^p).
TEST(Alpha, Polynomials) {
  const KnotInvariants inv = of(alpha_pq(2, 3, {1, 1, 1, 1, 1}));
  EXPECT_EQ(inv.u_plus.to_string(), "2t^3");
  EXPECT_EQ(inv.u_minus.to_string(), "3t^2");
  std::mt19937_64 rng(67);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      std::vector<int> signs(p + q);
      for (int& s : signs) s = (rng() & 1) ? 1 : -1;
      Int a_plus = 0, a_minus = 0, b_plus = 0, b_minus = 0;
      for (int i = 0; i < p; ++i) (signs[i] > 0 ? a_plus : a_minus) += 1;
      for (int j = 0; j < q; ++j) (signs[p + j] > 0 ? b_plus : b_minus) += 1;
      const KnotInvariants k = of(alpha_pq(p, q, signs));
      EXPECT_EQ(k.u_plus, LaurentFreePolynomial::monomial(a_plus, q) - LaurentFreePolynomial::monomial(b_minus, p));
      EXPECT_EQ(k.u_minus, -1 * (LaurentFreePolynomial::monomial(a_minus, q) - LaurentFreePolynomial::monomial(b_plus, p)));
    }
}

// [PAPER] K^(m) of the two-crossing knot has no crossings.
TEST(Covers, TwoCrossingKnotUnwinds) {
  const EmbeddedDiagram d = build_carter(parse_gauss_code(kTorusKnot));
  for (Int m : {2, 3, 4}) {
    const KnotInvariants h = higher_invariants(d, {m});
    EXPECT_TRUE(h.u_plus.is_zero());
    EXPECT_TRUE(h.u_minus.is_zero());
    EXPECT_TRUE(h.primitive.result.is_trivial());
    EXPECT_EQ(self_cover(d, m).crossing_count(), 0u);
  }
}

TEST(Covers, DegreeOneIsTheIdentity) {
  const EmbeddedDiagram d = build_carter(alpha_pq(2, 3, {1, -1, 1, 1, 1}));
  const KnotInvariants base = invariants_of(d), h = higher_invariants(d, {1});
  EXPECT_EQ(h.u_plus, base.u_plus);
  EXPECT_TRUE(is_isomorphic(h.primitive.result, base.primitive.result));
}

// [PAPER] when m divides p and q the covering knot is K itself.
TEST(Covers, AlphaWithMDividingBoth) {
  for (auto [p, q, m] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 4, 2}, {3, 3, 3}, {4, 2, 2}}) {
    const GaussCode c = alpha_pq(p, q, std::vector<int>(p + q, 1));
    const EmbeddedDiagram d = build_carter(c);
    const KnotInvariants base = invariants_of(d), h = higher_invariants(d, {m});
    EXPECT_EQ(self_cover(d, m).crossing_count(), c.crossing_count());
    EXPECT_EQ(h.u_plus, base.u_plus);
    EXPECT_EQ(h.u_minus, base.u_minus);
    EXPECT_TRUE(is_isomorphic(h.primitive.result, base.primitive.result)) << p << q << m;
  }
}

// Crossings survive in K^(m) exactly when m divides n(x).
TEST(Covers, SurvivingCrossings) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const GaussCode c = random_code(static_cast<int>(rng() % 6), rng);
    const EmbeddedDiagram d = build_carter(c);
    const GradedMatrix t = graded_matrix_of(d);
    for (Int m : {2, 3}) {
      std::set<std::string> expected;
      for (int g = 1; g < t.size(); ++g)
        if (mod_floor(t.at(g, 0), m) == 0) expected.insert(t.name(g));
      std::set<std::string> got;
      const EmbeddedDiagram lift = self_cover(d, m);
      for (const CrossingData& x : lift.crossings()) got.insert(x.label);
      EXPECT_EQ(got, expected) << serialize(c);
    }
  }
}

// [DERIVED] the cover's own surface and the Carter surface of the lifted word give the
// same invariants.
TEST(Covers, CarterSurfaceOfTheLiftAgreesWithTheCover) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const GaussCode c = random_code(static_cast<int>(rng() % 6), rng);
    const EmbeddedDiagram d = build_carter(c);
    for (Int m : {2, 3}) {
      const EmbeddedDiagram lift = self_cover(d, m);
      const KnotInvariants direct = invariants_of(lift), redrawn = invariants_of(build_carter(lift.to_gauss_code()));
      EXPECT_EQ(direct.u_plus, redrawn.u_plus);
      EXPECT_EQ(direct.u_minus, redrawn.u_minus);
      EXPECT_EQ(direct.matrix.pairing(), redrawn.matrix.pairing()) << serialize(c);
    }
  }
}

TEST(Covers, SizeCap) {
  const EmbeddedDiagram d = build_carter(alpha_pq(3, 3, std::vector<int>(6, 1)));
  try {
    iterated_cover(d, {3, 3}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
  EXPECT_THROW(iterated_cover(d, {0}), Error);
}
