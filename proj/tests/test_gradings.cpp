#include <gtest/gtest.h>

#include "hfk11/diagram.hpp"
#include "hfk11/error.hpp"
#include "hfk11/floer.hpp"
#include "hfk11/golden.hpp"
#include "hfk11/gradings.hpp"
#include "hfk11/pipeline.hpp"
#include "oracles.hpp"

using namespace hfk11;

namespace {

struct K0 {
  PlRealization real = realize(decode(family_params(0)));
  std::vector<Bigon> bigons = enumerate_bigons(real, 4);
  DifferentialTable hat_s3 = differential(bigons, 31, DifferentialMode::kHatS3);
  Gradings gradings = normalize(relative_gradings(bigons, real), hat_s3);
};

}  // namespace

TEST(Gradings, FamilyZeroAbsolute) {
  const K0 k;
  std::vector<int> a, m;
  for (const auto& g : k.gradings) {
    a.push_back(g.alexander);
    m.push_back(g.maslov);
  }
  EXPECT_EQ(a, (std::vector<int>{-1, 0, 1, 0, 1, 2, 1, 2, 1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0, -1, -2, -1,
                                 -2, -1, 0, -1, 0, 1}));
  EXPECT_EQ(a, golden::alexander_list(0));
  EXPECT_EQ(m, golden::maslov_list(0));
  EXPECT_EQ(m[30], 0);
}

TEST(Gradings, FamilyZeroBigonEquations) {
  const K0 k;
  const auto& g = k.gradings;
  EXPECT_EQ(g[11].alexander - g[12].alexander, 1);
  EXPECT_EQ(g[11].maslov - g[12].maslov, 1);
  EXPECT_EQ(g[0].alexander - g[6].alexander, -2);
  EXPECT_EQ(g[0].maslov - g[6].maslov, -3);
}

TEST(Gradings, Unknot) {
  const Analysis a = analyze(RasmussenParams{1, 0, 0, 0, {}});
  ASSERT_EQ(a.gradings.size(), 1u);
  EXPECT_EQ(a.gradings[0], (GradedGenerator{1, 0, 0}));
}

TEST(DomainFallback, Basics) {
  const K0 k;
  EXPECT_EQ(domain_fallback(k.real, 5, 5), (RelativeGrading{0, 0}));
  EXPECT_EQ(domain_fallback(k.real, 1, 2).alexander, -1);
}

TEST(DomainFallback, AgreesWithGradingsOnAllPairs) {
  const K0 k;
  for (int x = 1; x <= 31; ++x) {
    for (int y = 1; y <= 31; ++y) {
      const RelativeGrading r = domain_fallback(k.real, x, y);
      EXPECT_EQ(r.alexander, k.gradings[x - 1].alexander - k.gradings[y - 1].alexander) << x << "," << y;
      EXPECT_EQ(r.maslov, k.gradings[x - 1].maslov - k.gradings[y - 1].maslov) << x << "," << y;
    }
  }
}

TEST(DomainFallback, AgreesOnRandomBigonEdges) {
  oracle::RandomTuples gen(31337u, 80);
  for (int i = 0; i < 40; ++i) {
    const PlRealization real = realize(decode(gen.next()));
    for (const auto& b : all_bigons(real)) {
      const RelativeGrading r = domain_fallback(real, b.from, b.to);
      EXPECT_EQ(r.alexander, b.n_z - b.n_w);
      EXPECT_EQ(r.maslov, 1 - 2 * b.n_w);
    }
  }
}

TEST(Normalize, RejectsWrongHomology) {
  const K0 k;
  DifferentialTable empty;
  empty.p = 31;
  empty.mode = DifferentialMode::kHatS3;
  try {
    normalize(relative_gradings(k.bigons, k.real), empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentHomology);
  }
}

TEST(Properties, GradingEquationsHoldOnRandomDiagrams) {
  oracle::RandomTuples gen(8080u, 120);
  for (int i = 0; i < 60; ++i) {
    const RasmussenParams params = gen.next();
    const Analysis a = analyze(params);
    for (const auto& b : a.bigons) {
      EXPECT_EQ(a.gradings[b.from - 1].alexander - a.gradings[b.to - 1].alexander, b.n_z - b.n_w);
      EXPECT_EQ(a.gradings[b.from - 1].maslov - a.gradings[b.to - 1].maslov, 1 - 2 * b.n_w);
    }
  }
}

TEST(RelativeGradings, FallbackBridgesMissingEdges) {
  const K0 k;
  const Gradings full = relative_gradings(k.bigons, k.real);
  // Keep only bigons among slots 1..15, so slots 16..31 are reached only
  // through connecting domains.
  std::vector<Bigon> thin;
  for (const auto& b : k.bigons) {
    if (b.from <= 15 && b.to <= 15) thin.push_back(b);
  }
  EXPECT_EQ(relative_gradings(thin, k.real), full);
  EXPECT_EQ(relative_gradings({}, k.real), full);
}
