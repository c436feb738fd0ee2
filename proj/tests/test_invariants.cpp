#include <gtest/gtest.h>

#include <cstdlib>

#include "hfk11/error.hpp"
#include "hfk11/invariants.hpp"
#include "hfk11/pipeline.hpp"
#include "oracles.hpp"

using namespace hfk11;

namespace {

// Multiplies two-variable polynomials given as (m, a) -> c.
LaurentPoly2 times(const LaurentPoly2& x, const LaurentPoly2& y) {
  LaurentPoly2 out;
  for (auto [k1, c1] : x) {
    for (auto [k2, c2] : y) out[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// -q^-1 + (2n+1) q^-3 t^-2 (1+q) (1+qt)^4 by repeated multiplication.
LaurentPoly2 closed_form(int n) {
  LaurentPoly2 poly{{{-3, -2}, 2 * n + 1}};
  poly = times(poly, {{{0, 0}, 1}, {{1, 0}, 1}});
  for (int i = 0; i < 4; ++i) poly = times(poly, {{{0, 0}, 1}, {{1, 1}, 1}});
  poly[{-1, 0}] -= 1;
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return poly;
}

const Analysis& family(int n) {
  static std::map<int, Analysis> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, analyze(family_params(n))).first;
  return it->second;
}

}  // namespace

TEST(Poincare, ClosedFormExpansion) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(family_poincare(n), closed_form(n)) << n;
  const LaurentPoly2 k0 = closed_form(0);
  EXPECT_EQ(k0.at({0, 0}), 6);
  EXPECT_EQ(k0.at({-1, 0}), 5);
}

TEST(Hfk, FamilyZeroEntries) {
  const HfkTable& t = family(0).report.hfk;
  EXPECT_EQ(t.at({2, 2}), 1);
  EXPECT_EQ(t.at({2, 1}), 1);
  EXPECT_EQ(t.at({0, 0}), 6);
  EXPECT_EQ(t.at({0, -1}), 5);
}

TEST(Hfk, FamilyMatchesClosedForm) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(family(n).report.poincare, closed_form(n)) << n;
    int total = 0;
    for (auto [k, d] : family(n).report.hfk) total += d;
    EXPECT_EQ(total, 64 * n + 31);
  }
}

TEST(Hfk, Unknot) {
  const Analysis a = analyze(RasmussenParams{1, 0, 0, 0, {}});
  EXPECT_EQ(a.report.hfk, (HfkTable{{{0, 0}, 1}}));
  EXPECT_EQ(a.report.poincare, (LaurentPoly2{{{0, 0}, 1}}));
  EXPECT_EQ(a.report.alexander, (LaurentPoly{{0, 1}}));
  EXPECT_EQ(a.report.seifert_genus, 0);
  EXPECT_EQ(a.report.tau, 0);
}

TEST(Alexander, Family) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(family(n).report.alexander, (LaurentPoly{{0, 1}}));
    EXPECT_EQ(family(n).report.seifert_genus, 2);
  }
}

TEST(Alexander, FigureEightParameters) {
  const Analysis a = analyze(RasmussenParams{5, 2, 0, 4, {}});
  const LaurentPoly& delta = a.report.alexander;
  long long at_one = 0, at_minus_one = 0;
  for (auto [e, c] : delta) {
    EXPECT_EQ(delta.at(-e), c);
    at_one += c;
    at_minus_one += (e % 2 == 0) ? c : -c;
  }
  EXPECT_EQ(at_one, 1);
  EXPECT_EQ(std::llabs(at_minus_one) % 2, 1);
  EXPECT_EQ(delta, (LaurentPoly{{-1, -1}, {0, 3}, {1, -1}}));
}

TEST(Alexander, AsymmetricInputRejected) {
  try {
    alexander_polynomial({{{0, 1}, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAsymmetricResult);
  }
}

TEST(Tau, Family) {
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(family(n).report.tau, 1) << n;
}

TEST(Tau, HandComplexes) {
  // One generator at level 3.
  EXPECT_EQ(tau(ChainComplex({1}, {{}}, std::vector<int>{3})), 3);
  // x -> y with x at 2, y at 0, plus a survivor at -1.
  EXPECT_EQ(tau(ChainComplex({1, 2, 3}, {{1}, {}, {}}, std::vector<int>{2, 0, -1})), -1);
  // x at 1 and z at 2 both hit y at 0; the surviving class x + z needs level 2.
  EXPECT_EQ(tau(ChainComplex({1, 2, 3}, {{1}, {}, {1}}, std::vector<int>{1, 0, 2})), 2);
  try {
    tau(ChainComplex({1, 2}, {{}, {}}, std::vector<int>{0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentHomology);
  }
}

TEST(Cfk, Rows) {
  const auto rows = cfk_table(family(0).full, family(0).gradings);
  ASSERT_EQ(rows.size(), 31u);
  EXPECT_EQ(rows[3], "[x_4,i,i] -> [x_7,i-1,i] + [x_21,i,i-1]");
  EXPECT_EQ(rows[13], "[x_14,i,i] -> 0");
  const Analysis u = analyze(RasmussenParams{1, 0, 0, 0, {}});
  EXPECT_EQ(cfk_table(u.full, u.gradings), std::vector<std::string>{"[x_1,i,i] -> 0"});
}

TEST(Verdicts, FamilyAndUnknot) {
  for (int n : {0, 3}) {
    const InvariantReport& r = family(n).report;
    EXPECT_TRUE(r.conway_trivial);
    EXPECT_TRUE(r.topologically_slice_certified);
    EXPECT_TRUE(r.smoothly_slice_obstructed);
    EXPECT_EQ(r.g4_lower_bound, 1);
    EXPECT_TRUE(r.g4_note.has_value());
  }
  const InvariantReport u = analyze(RasmussenParams{1, 0, 0, 0, {}}).report;
  EXPECT_TRUE(u.topologically_slice_certified);
  EXPECT_FALSE(u.smoothly_slice_obstructed);
  EXPECT_EQ(u.g4_lower_bound, 0);
  EXPECT_FALSE(u.g4_note.has_value());
}

TEST(Format, Polynomials) {
  EXPECT_EQ(format_laurent({{-1, -1}, {0, 3}, {1, -1}}), "-t^-1 + 3 - t");
  EXPECT_EQ(format_laurent({{0, 1}}), "1");
  EXPECT_EQ(format_poincare({{{-1, 0}, -1}, {{1, 2}, 2}}), "-q^-1 + 2*q*t^2");
}

TEST(Properties, SymmetryAndGenusOnRandomDiagrams) {
  oracle::RandomTuples gen(2718u, 150);
  for (int i = 0; i < 60; ++i) {
    const RasmussenParams params = gen.next();
    const InvariantReport r = analyze(params).report;
    for (auto [am, dim] : r.hfk) {
      const auto [a, m] = am;
      auto it = r.hfk.find({-a, m - 2 * a});
      ASSERT_NE(it, r.hfk.end()) << params.p << "," << params.q << "," << params.r << "," << params.s;
      EXPECT_EQ(it->second, dim);
    }
    long long at_one = 0;
    for (auto [e, c] : r.alexander) at_one += c;
    EXPECT_EQ(at_one, 1);
    EXPECT_GE(r.seifert_genus, std::abs(r.tau));
  }
}
