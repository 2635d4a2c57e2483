#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace knotcob;

namespace {

GradedMatrix matrix_2() { return GradedMatrix({"s", "x", "y"}, {0, 1, 1}, {{0, -1, 1}, {1, 0, 1}, {-1, -1, 0}}); }

GradedMatrix shuffled(const GradedMatrix& t, std::mt19937_64& rng) {
  std::vector<int> keep;
  for (int g = 1; g < t.size(); ++g) keep.push_back(g);
  std::shuffle(keep.begin(), keep.end(), rng);
  return t.restrict_to(keep);
}

}  // namespace

TEST(Involutions, TrivialIsFixed) {
  EXPECT_EQ(neg(GradedMatrix::trivial()).pairing(), GradedMatrix::trivial().pairing());
  EXPECT_EQ(bar(GradedMatrix::trivial()).pairing(), GradedMatrix::trivial().pairing());
}

// [DERIVED] b^-(x,y) = 1 - 1 - 1 = -1, b^-(s,x) = 1, b^-(s,y) = -1.
TEST(Involutions, BarOfMatrix2) {
  const GradedMatrix b = bar(matrix_2());
  EXPECT_EQ(b.at(1, 2), -1);
  EXPECT_EQ(b.at(0, 1), 1);
  EXPECT_EQ(b.at(0, 2), -1);
  EXPECT_EQ(b.sign(1), 1);
}

// [PAPER] commuting involutions.
TEST(Involutions, CommutingInvolutionsOnRandomMatrices) {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 100; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 7), rng);
    EXPECT_EQ(neg(neg(t)).pairing(), t.pairing());
    EXPECT_EQ(neg(neg(t)).signs(), t.signs());
    EXPECT_EQ(bar(bar(t)).pairing(), t.pairing());
    EXPECT_EQ(neg(bar(t)).pairing(), bar(neg(t)).pairing());
    EXPECT_EQ(neg(bar(t)).signs(), bar(neg(t)).signs());
  }
}

TEST(Involutions, ForgetBipartition) {
  const BasedMatrix b = forget_bipartition(matrix_2());
  EXPECT_EQ(b.b, matrix_2().pairing());
  const BasedMatrix n = forget_bipartition(neg(matrix_2()));
  EXPECT_EQ(n.b[1][2], -1);
}

TEST(Classify, Matrix2HasNothingToDelete) {
  const Classification c = classify_elements(matrix_2());
  for (ElementType e : c.types) EXPECT_EQ(e, ElementType::None);
  EXPECT_TRUE(c.complementary.empty());
  EXPECT_TRUE(is_primitive(matrix_2()));
}

TEST(Classify, ConstructedElements) {
  const GradedMatrix one = add_type1(matrix_2(), "z", -1);
  EXPECT_EQ(classify_elements(one).types[3], ElementType::Type1);
  const GradedMatrix two = add_type2(matrix_2(), "w", 1);
  EXPECT_EQ(classify_elements(two).types[3], ElementType::Type2);
  const GradedMatrix pair = add_complementary_pair(matrix_2(), "p", "q", 1, {2, -1, 3});
  const Classification c = classify_elements(pair);
  ASSERT_EQ(c.complementary.size(), 1u);
  EXPECT_EQ(c.complementary[0], std::make_pair(3, 4));
  EXPECT_TRUE(pair.is_skew());
}

TEST(Classify, RejectsNonSkew) {
  const GradedMatrix t({"s", "a"}, {0, 1}, {{0, 1}, {1, 0}});
  try {
    classify_elements(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSkew);
  }
  EXPECT_THROW(reduce_primitive(t), Error);
}

TEST(Reduce, Matrix2IsPrimitive) {
  const Reduction r = reduce_primitive(matrix_2());
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.result.pairing(), matrix_2().pairing());
  EXPECT_TRUE(reduce_primitive(GradedMatrix::trivial()).result.is_trivial());
}

// [DERIVED] inflations of matrix (2) reduce back to it in any deletion order.
TEST(Reduce, InflationsOfMatrix2) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 50; ++i) {
    const GradedMatrix big = inflate_randomly(matrix_2(), 6, rng);
    EXPECT_TRUE(is_isomorphic(reduce_primitive(big).result, matrix_2()));
    EXPECT_TRUE(oracle::isomorphic(reduce_primitive_randomized(big, rng).result, matrix_2()));
  }
}

TEST(Reduce, ConfluentOnRandomMatrices) {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 200; ++i) {
    const GradedMatrix t = inflate_randomly(random_skew_matrix(static_cast<int>(rng() % 5), rng, 2), static_cast<int>(rng() % 4), rng);
    const GradedMatrix a = reduce_primitive_randomized(t, rng).result, b = reduce_primitive_randomized(t, rng).result;
    EXPECT_TRUE(is_isomorphic(a, b));
    EXPECT_TRUE(is_primitive(a));
    if (a.size() <= 8) EXPECT_TRUE(oracle::isomorphic(a, b));
  }
}

// [PAPER] (-T). = -T. and (T^-). = (T.)^-.
TEST(Reduce, CommutesWithInvolutions) {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 100; ++i) {
    const GradedMatrix t = inflate_randomly(random_skew_matrix(static_cast<int>(rng() % 5), rng, 2), 3, rng);
    const GradedMatrix p = reduce_primitive(t).result;
    EXPECT_TRUE(is_isomorphic(reduce_primitive(neg(t)).result, neg(p)));
    EXPECT_TRUE(is_isomorphic(reduce_primitive(bar(t)).result, bar(p)));
  }
}

TEST(Isomorphism, Examples) {
  std::mt19937_64 rng(101);
  EXPECT_TRUE(is_isomorphic(matrix_2(), shuffled(matrix_2(), rng)));
  EXPECT_FALSE(is_isomorphic(matrix_2(), neg(matrix_2())));
  EXPECT_FALSE(is_isomorphic(matrix_2(), GradedMatrix::trivial()));
}

// [DERIVED] agreement with exhaustive search, on shuffled copies and perturbed copies.
TEST(Isomorphism, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 150; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 7), rng, 1);
    GradedMatrix u = shuffled(t, rng);
    if (rng() & 1 && t.size() > 2) {
      IntMatrix b = u.pairing();
      const int g = 1 + static_cast<int>(rng() % (u.size() - 1)), h = static_cast<int>(rng() % u.size());
      if (g != h) {
        b[g][h] += 1;
        b[h][g] -= 1;
      }
      u = GradedMatrix(u.names(), u.signs(), b);
    }
    const auto iso = find_isomorphism(t, u);
    EXPECT_EQ(iso.has_value(), oracle::isomorphic(t, u));
    if (iso)
      for (int g = 0; g < t.size(); ++g)
        for (int h = 0; h < t.size(); ++h) EXPECT_EQ(t.at(g, h), u.at((*iso)[g], (*iso)[h]));
  }
}

// [PAPER] u+-(matrix (2)) = (t, t); u+-(-T) = -u+-(T); u+-(T^-) = u-+(T).
TEST(Polynomials, OfMatrices) {
  const auto [p, m] = u_pm_of_matrix(matrix_2());
  EXPECT_EQ(p.to_string(), "t");
  EXPECT_EQ(m.to_string(), "t");
  EXPECT_TRUE(u_pm_of_matrix(GradedMatrix::trivial()).first.is_zero());
  std::mt19937_64 rng(107);
  for (int i = 0; i < 100; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 7), rng);
    const auto [up, um] = u_pm_of_matrix(t);
    EXPECT_EQ(u_pm_of_matrix(neg(t)), std::make_pair(-up, -um));
    EXPECT_EQ(u_pm_of_matrix(bar(t)), std::make_pair(um, up));
  }
}

TEST(Polynomials, Errors) {
  try {
    u_pm_of_matrix(matrix_2().reduced_mod(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongRing);
  }
  const GradedMatrix abnormal({"s", "a"}, {0, 1}, {{1, 0}, {0, 0}});
  try {
    u_pm_of_matrix(abnormal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormal);
  }
}

TEST(GammaA, Restriction) {
  EXPECT_EQ(gamma_A(matrix_2(), {1}).pairing(), matrix_2().pairing());
  EXPECT_EQ(gamma_A(matrix_2(), {}).size(), 1);
  const GradedMatrix t({"s", "a", "b", "c"}, {0, 1, -1, 1}, {{0, 2, 0, -3}, {-2, 0, 1, 1}, {0, -1, 0, 0}, {3, -1, 0, 0}});
  const GradedMatrix g = gamma_A(t, {2});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.name(1), "a");
  EXPECT_EQ(g.name(2), "b");
  const GradedMatrix abnormal({"s"}, {0}, {{5}});
  try {
    gamma_A(abnormal, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotANormal);
  }
  EXPECT_EQ(gamma_A(abnormal, {5}).size(), 1);
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 20; ++i) {
    const GradedMatrix t = random_skew_matrix(static_cast<int>(rng() % 5), rng);
    const GradedMatrix back = matrix_from_json(matrix_to_json(t));
    EXPECT_EQ(back.pairing(), t.pairing());
    EXPECT_EQ(back.signs(), t.signs());
    EXPECT_EQ(back.names(), t.names());
  }
  const GradedMatrix m = matrix_from_json_text(R"({"elements":[{"name":"a","sign":1}],"b":[[0,4],[-4,0]],"ring":"Z/3"})");
  EXPECT_EQ(m.modulus(), 3);
  EXPECT_EQ(m.at(0, 1), 1);
  EXPECT_THROW(matrix_from_json_text("{"), Error);
  EXPECT_THROW(matrix_from_json_text(R"({"elements":[],"b":[[0]],"ring":"Q"})"), Error);
}
