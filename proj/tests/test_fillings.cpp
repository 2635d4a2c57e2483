#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace knotcob;

namespace {

GradedMatrix matrix_2() { return GradedMatrix({"s", "x", "y"}, {0, 1, 1}, {{0, -1, 1}, {1, 0, 1}, {-1, -1, 0}}); }

GradedMatrix signed_zero(const std::vector<int>& signs) {
  std::vector<std::string> names{"s"};
  std::vector<int> all{0};
  for (std::size_t i = 0; i < signs.size(); ++i) {
    names.push_back("g" + std::to_string(i + 1));
    all.push_back(signs[i]);
  }
  return GradedMatrix(names, all, IntMatrix(signs.size() + 1, std::vector<Int>(signs.size() + 1, 0)));
}

}  // namespace

// [PAPER] G_- empty leaves one simple filling.
TEST(SimpleFillings, Counts) {
  EXPECT_EQ(simple_fillings(matrix_2()).size(), 1u);
  EXPECT_EQ(simple_fillings(signed_zero({1, -1})).size(), 2u);
  EXPECT_EQ(simple_fillings(signed_zero({1, 1, -1, -1})).size(), 7u);
  EXPECT_EQ(simple_fillings(GradedMatrix::trivial()).size(), 1u);
  for (const Filling& l : simple_fillings(signed_zero({1, 1, -1, -1}))) EXPECT_NO_THROW(check_filling(Family({signed_zero({1, 1, -1, -1})}), l));
}

TEST(SimpleFillings, SizeCap) {
  try {
    simple_fillings(signed_zero(std::vector<int>(20, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCap);
  }
}

TEST(TupleFillings, Shapes) {
  EXPECT_EQ(tuple_fillings({matrix_2()}, 0).size(), simple_fillings(matrix_2()).size());
  const auto both_trivial = tuple_fillings({GradedMatrix::trivial(), GradedMatrix::trivial()}, 2);
  ASSERT_EQ(both_trivial.size(), 1u);
  EXPECT_EQ(both_trivial[0].vectors.size(), 1u);
  EXPECT_EQ(both_trivial[0].vectors[0].base, (std::vector<Int>{1, 1}));
}

// [PAPER] the diagonal filling of (T, -T) has zero matrix.
TEST(TupleFillings, DiagonalFillingOfTAndMinusT) {
  const GradedMatrix t = GradedMatrix({"s", "a", "b"}, {0, 1, -1}, {{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
  const Family f({t, neg(t)});
  bool found = false;
  for (const Filling& l : tuple_fillings({t, neg(t)}, 0)) {
    bool diagonal = true;
    for (const FillingVector& v : l.vectors)
      if (!v.elements.empty())
        diagonal = diagonal && v.elements.size() == 2 && f.owner(v.elements[0]) != f.owner(v.elements[1]) &&
                   f.local(v.elements[0]) == f.local(v.elements[1]);
    if (diagonal) {
      found = true;
      EXPECT_TRUE(verify_zero_filling(f, l));
    }
  }
  EXPECT_TRUE(found);
}

TEST(CheckFilling, RejectsBrokenFamilies) {
  const Family f({signed_zero({1, -1})});
  EXPECT_THROW(check_filling(f, Filling{{FillingVector{{0}, {0}}, FillingVector{{1}, {0}}}}), Error);
  EXPECT_THROW(check_filling(f, Filling{{FillingVector{{}, {1}}, FillingVector{{0}, {0}}}}), Error);
  EXPECT_THROW(check_filling(Family({signed_zero({1, 1})}), Filling{{FillingVector{{}, {1}}, FillingVector{{0, 1}, {0}}}}), Error);
  EXPECT_NO_THROW(check_filling(f, Filling{{FillingVector{{}, {1}}, FillingVector{{0, 1}, {3}}}}));
}

// [DERIVED] sigma(matrix (2)) = 1 from the rank of the displayed matrix; the same mod 2.
TEST(Genus, Examples) {
  EXPECT_EQ(genus(GradedMatrix::trivial()).twice, 0);
  EXPECT_EQ(genus(matrix_2()).twice, 2);
  EXPECT_EQ(p_genus(matrix_2(), 2).twice, 2);
  EXPECT_FALSE(is_hyperbolic(matrix_2()));
  EXPECT_TRUE(is_hyperbolic(GradedMatrix::trivial()));
  EXPECT_TRUE(is_hyperbolic(signed_zero({1, -1, 1})));
  const GenusResult g = genus_with_witness(matrix_2());
  EXPECT_EQ(filling_genus(Family({matrix_2()}), g.witness).twice, 2);
}

// [DERIVED] the branch and bound agrees with exhaustive involution search.
TEST(Genus, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 150; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 8), rng);
    const GenusResult g = genus_with_witness(t);
    EXPECT_EQ(g.value.twice, oracle::twice_genus(t));
    const Family f({t});
    EXPECT_NO_THROW(check_filling(f, g.witness));
    EXPECT_EQ(filling_genus(f, g.witness), g.value);
    for (Int p : {2, 3, 5}) {
      const HalfInteger sp = p_genus(t, p);
      EXPECT_EQ(sp.twice, oracle::twice_genus(t, p));
      EXPECT_LE(sp, g.value);
    }
    EXPECT_EQ(genus(neg(t)), g.value);
  }
}

// [PAPER] genus is a cobordism invariant, so M-move inflations keep it.
TEST(Genus, InvariantUnderInflation) {
  std::mt19937_64 rng(127);
  for (int i = 0; i < 60; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 6), rng);
    EXPECT_EQ(genus(inflate_randomly(t, static_cast<int>(rng() % 7), rng)), genus(t));
    EXPECT_EQ(genus(reduce_primitive(t).result), genus(t));
  }
}

TEST(Cobordism, SelfCobordantWithCertificate) {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 40; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 6), rng);
    const CobordismVerdict v = is_cobordant(t, t, 0);
    ASSERT_EQ(v.verdict, Verdict::Cobordant);
    ASSERT_TRUE(v.certificate.has_value());
    EXPECT_TRUE(verify_zero_filling(Family({t, neg(t)}), *v.certificate));
  }
}

TEST(Cobordism, ExactNegatives) {
  EXPECT_EQ(is_cobordant(matrix_2(), GradedMatrix::trivial(), 2).verdict, Verdict::NotCobordant);
  EXPECT_EQ(is_cobordant(GradedMatrix::trivial(), matrix_2(), 2).verdict, Verdict::NotCobordant);
  const GradedMatrix abnormal({"s"}, {0}, {{1}});
  const GradedMatrix other({"s", "a"}, {0, 1}, {{0, 1}, {-1, 0}});
  EXPECT_EQ(is_cobordant(abnormal, other, 1).verdict, Verdict::NotCobordant);
  // same genus, different u+
  EXPECT_EQ(is_cobordant(matrix_2(), neg(matrix_2()), 1).verdict, Verdict::NotCobordant);
}

TEST(Cobordism, HyperbolicAgainstTrivialCarriesACertificate) {
  const GradedMatrix t = add_type1(add_complementary_pair(GradedMatrix::trivial(), "a", "b", 1, {0}), "c", 1);
  const CobordismVerdict v = is_cobordant(t, GradedMatrix::trivial(), 0);
  ASSERT_EQ(v.verdict, Verdict::Cobordant);
  EXPECT_TRUE(verify_zero_filling(Family({t, neg(GradedMatrix::trivial())}), *v.certificate));
}

TEST(Cobordism, InflatedCopiesAreCobordant) {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 20; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 4), rng, 2);
    const GradedMatrix big = inflate_randomly(t, 2, rng);
    const CobordismVerdict v = is_cobordant(t, big, 1);
    EXPECT_NE(v.verdict, Verdict::NotCobordant);
    if (v.certificate) {
      EXPECT_TRUE(verify_zero_filling(Family({t, neg(big)}), *v.certificate));
      // [PAPER] hyperbolic normal families have vanishing total u+-.
      const auto [p1, m1] = u_pm_of_matrix(t);
      const auto [p2, m2] = u_pm_of_matrix(neg(big));
      EXPECT_TRUE((p1 + p2).is_zero());
      EXPECT_TRUE((m1 + m2).is_zero());
    }
  }
}

TEST(TupleGenus, UpperBounds) {
  EXPECT_EQ(tuple_genus_upper({GradedMatrix::trivial()}, 0).twice, 0);
  EXPECT_EQ(tuple_genus_upper({matrix_2(), neg(matrix_2())}, 0).twice, 0);
  EXPECT_EQ(tuple_genus_upper({matrix_2()}, 0), genus(matrix_2()));
}
