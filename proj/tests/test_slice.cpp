#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace knotcob;

namespace {

bool has_reason(const ObstructionReport& r, const std::string& kind) {
  return std::any_of(r.reasons.begin(), r.reasons.end(), [&](const ObstructionReason& x) { return x.kind == kind; });
}

ObstructionReport report(const std::string& code, SliceConfig config = {}) {
  return obstruction_report(build_carter(parse_gauss_code(code)), config);
}

}  // namespace

// [PAPER] u+ = t != 0 makes the two-crossing knot non-slice; sigma = 1 gives sg >= 1.
TEST(Slice, TwoCrossingKnot) {
  const ObstructionReport r = report("O1+ O2+ U1+ U2+");
  EXPECT_TRUE(r.not_slice);
  EXPECT_TRUE(has_reason(r, "u_nonzero"));
  EXPECT_TRUE(has_reason(r, "not_hyperbolic"));
  EXPECT_TRUE(has_reason(r, "lagrangian"));
  EXPECT_EQ(r.sg_lower_bound, 1);
  EXPECT_FALSE(r.partial);
  const Json j = report_to_json(r);
  EXPECT_EQ(j["verdict"], "NotSlice");
  EXPECT_EQ(j["reasons"][0]["kind"], "u_nonzero");
  EXPECT_EQ(j["reasons"][0]["u_plus"], "t");
  EXPECT_EQ(j["reasons"][0]["cover"], Json::array());
}

// [PAPER] all invariants vanish for classical knots.
TEST(Slice, ClassicalKnotsAreInconclusive) {
  for (const char* c : {"O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U2+ O3- U4- O2+ U1+ O4- U3-", ""}) {
    const ObstructionReport r = report(c);
    EXPECT_FALSE(r.not_slice) << c;
    EXPECT_TRUE(r.reasons.empty()) << c;
    EXPECT_EQ(r.sg_lower_bound, 0);
    EXPECT_EQ(report_to_json(r)["verdict"], "Inconclusive");
  }
}

// [DERIVED] sigma of the alpha_{2,3} matrix from the exhaustive oracle; sg >= ceil(sigma / 2).
TEST(Slice, Alpha23) {
  const GaussCode c = alpha_pq(2, 3, std::vector<int>(5, 1));
  const ObstructionReport r = obstruction_report(build_carter(c));
  EXPECT_TRUE(r.not_slice);
  EXPECT_TRUE(has_reason(r, "u_nonzero"));
  EXPECT_TRUE(has_reason(r, "not_hyperbolic"));
  const GradedMatrix t = reduce_primitive(graded_matrix_of(build_carter(c))).result;
  const Int twice = oracle::twice_genus(t);
  EXPECT_GT(twice, 0);
  EXPECT_EQ(r.sg_lower_bound, (twice + 3) / 4);
}

TEST(Slice, MoreConfigurationNeverWeakensTheVerdict) {
  std::mt19937_64 rng(139);
  SliceConfig small;
  small.covers = {};
  small.primes = {};
  small.lagrangian_moduli = {};
  for (int i = 0; i < 15; ++i) {
    const GaussCode c = random_code(static_cast<int>(rng() % 5), rng);
    const ObstructionReport a = obstruction_report(build_carter(c), small);
    const ObstructionReport b = obstruction_report(build_carter(c));
    if (a.not_slice) EXPECT_TRUE(b.not_slice) << serialize(c);
    EXPECT_GE(b.reasons.size(), a.reasons.size());
  }
}

TEST(Slice, TinyCapsMarkThePartialReport) {
  SliceConfig config;
  config.cover_cap = 1;
  config.homology_cap = 1;
  const ObstructionReport r = report("O1+ O2+ U1+ U2+", config);
  EXPECT_TRUE(r.partial);
  EXPECT_TRUE(r.not_slice);
  EXPECT_TRUE(report_to_json(r)["partial"].get<bool>());
}

TEST(Lagrangian, TwoCrossingKnotFailsAtTwo) {
  const LagrangianResult l = lagrangian_obstruction(build_carter(parse_gauss_code("O1+ O2+ U1+ U2+")), 2);
  EXPECT_FALSE(l.passes);
  EXPECT_EQ(l.genus, 1);
  EXPECT_FALSE(l.witness.empty());
}

TEST(Lagrangian, VacuousOnTheSphere) {
  for (const char* c : {"", "O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U2+ O3- U4- O2+ U1+ O4- U3-"}) {
    const LagrangianResult l = lagrangian_obstruction(build_carter(parse_gauss_code(c)), 2);
    EXPECT_TRUE(l.passes) << c;
    EXPECT_EQ(l.genus, 0);
  }
}

// h = 0 lies in every Lagrangian, so a nonzero u+- forces a failure.
TEST(Lagrangian, ConsistentWithTheBasePolynomials) {
  std::mt19937_64 rng(149);
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    const GaussCode c = random_code(static_cast<int>(rng() % 5), rng);
    const EmbeddedDiagram d = build_carter(c);
    const KnotInvariants inv = invariants_of(d);
    try {
      const LagrangianResult l = lagrangian_obstruction(d, 2);
      if (!inv.u_plus.is_zero() || !inv.u_minus.is_zero()) EXPECT_FALSE(l.passes) << serialize(c);
      ++compared;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::SizeCap || e.code() == ErrorCode::ResourceLimit);
    }
  }
  EXPECT_GT(compared, 20);
}
