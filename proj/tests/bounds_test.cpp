// Copyright 2026 The dehn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "dehn/bounds.hpp"
#include "test_support.hpp"

namespace dehn {
namespace {

int value(const BoundLedger& l, const std::string& m, Quantity q) {
  const auto& e = l.at(m).get(q);
  EXPECT_TRUE(e.has_value()) << m << " " << quantity_name(q);
  return e ? e->value : -1;
}

TEST(BoundsTest, TriangulationBound) {
  EXPECT_EQ(sc_upper_from_triangulation(1), 4);
  EXPECT_EQ(sc_upper_from_triangulation(2), 8);
  EXPECT_THROW(sc_upper_from_triangulation(0), std::invalid_argument);
  BoundLedger l;
  apply_triangulation_bound(l, "M", 2);
  EXPECT_EQ(value(l, "M", Quantity::kScUpper), 8);
  EXPECT_EQ(l.at("M").sc_upper->rule, "triangulation");
}

TEST(BoundsTest, CatalogValues) {
  for (const char* tag : {"S3", "B3", "RP3", "L(4,1)"}) {
    auto v = catalog_lookup(tag);
    ASSERT_TRUE(v.sc) << tag;
    EXPECT_EQ(*v.sc, 0);
  }
  for (const char* tag : {"S3", "B3", "RP3", "L(3,1)"}) {
    auto v = catalog_lookup(tag);
    ASSERT_TRUE(v.c) << tag;
    EXPECT_EQ(*v.c, 0);
  }
  EXPECT_FALSE(catalog_lookup("L(3,1)").sc);
  EXPECT_EQ(catalog_lookup("L(3,1)").sc_lower, 1);
  EXPECT_FALSE(catalog_lookup("L(4,1)").c);
  EXPECT_EQ(catalog_lookup("L(4,1)").c_lower, 1);
  EXPECT_TRUE(catalog_lookup("T3").empty());
  BoundLedger l;
  EXPECT_FALSE(apply_catalog(l, "T3"));
  EXPECT_FALSE(l.has("T3"));
}

TEST(BoundsTest, LensSpaceAsymmetry) {
  BoundLedger l;
  apply_catalog(l, "L(3,1)");
  apply_catalog(l, "L(4,1)");
  EXPECT_EQ(value(l, "L(3,1)", Quantity::kCUpper), 0);
  EXPECT_EQ(value(l, "L(3,1)", Quantity::kScLower), 1);
  EXPECT_FALSE(l.at("L(3,1)").sc_upper);
  EXPECT_EQ(value(l, "L(4,1)", Quantity::kScUpper), 0);
  EXPECT_EQ(value(l, "L(4,1)", Quantity::kCLower), 1);
  EXPECT_FALSE(l.at("L(4,1)").c_upper);
  l.declare("L(3,1)", true);
  l.declare("L(4,1)", true);
  EXPECT_THROW(apply_matveev_relations(l, "L(3,1)"), std::invalid_argument);
  EXPECT_THROW(apply_matveev_relations(l, "L(4,1)"), std::invalid_argument);
}

TEST(BoundsTest, MatveevNeedsHypotheses) {
  BoundLedger l;
  apply_catalog(l, "S3");
  EXPECT_THROW(apply_matveev_relations(l, "S3"), std::invalid_argument);
  EXPECT_THROW(apply_matveev_relations(l, "unknown"), std::invalid_argument);
}

TEST(BoundsTest, ZeroComplexityGivesZeroSurfaceComplexity) {
  BoundLedger l;
  l.declare("M", true);
  apply_assertion(l, "M", false, Relation::kEqual, 0);
  apply_matveev_relations(l, "M");
  EXPECT_EQ(value(l, "M", Quantity::kScUpper), 0);
  EXPECT_EQ(l.at("M").sc_upper->rule, "matveev");
}

TEST(BoundsTest, MatveevExamples) {
  BoundLedger l;
  l.declare("M", true);
  apply_assertion(l, "M", false, Relation::kAtMost, 3);
  apply_assertion(l, "M", false, Relation::kAtLeast, 1);
  apply_matveev_relations(l, "M");
  EXPECT_EQ(value(l, "M", Quantity::kScUpper), 12);
  EXPECT_EQ(value(l, "M", Quantity::kScLower), 1);
  l.declare("N", true);
  apply_assertion(l, "N", true, Relation::kAtLeast, 9);
  apply_assertion(l, "N", true, Relation::kAtMost, 10);
  apply_matveev_relations(l, "N");
  EXPECT_EQ(value(l, "N", Quantity::kCLower), 3);
  EXPECT_EQ(value(l, "N", Quantity::kCUpper), 80);
}

// The relations sc <= 4c and c <= 8sc on a box of naturals, projected by
// enumeration.
TEST(BoundsTest, MatveevMatchesProjection) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 24);
  int feasible = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    int b[4] = {d(rng), d(rng), d(rng), d(rng)};
    int sl = std::min(b[0], b[1]), sh = std::max(b[0], b[1]);
    int cl = std::min(b[2], b[3]), ch = std::max(b[2], b[3]);
    int best[4] = {1 << 20, -1, 1 << 20, -1};
    for (int sc = sl; sc <= sh; ++sc)
      for (int c = cl; c <= ch; ++c)
        if (sc <= 4 * c && c <= 8 * sc) {
          best[0] = std::min(best[0], sc);
          best[1] = std::max(best[1], sc);
          best[2] = std::min(best[2], c);
          best[3] = std::max(best[3], c);
        }
    BoundLedger l;
    l.declare("M", true);
    apply_assertion(l, "M", true, Relation::kAtLeast, sl);
    apply_assertion(l, "M", true, Relation::kAtMost, sh);
    apply_assertion(l, "M", false, Relation::kAtLeast, cl);
    apply_assertion(l, "M", false, Relation::kAtMost, ch);
    if (best[1] < 0) {
      EXPECT_THROW(apply_matveev_relations(l, "M"), ContradictionError) << sl << sh << cl << ch;
      continue;
    }
    ++feasible;
    apply_matveev_relations(l, "M");
    EXPECT_EQ(value(l, "M", Quantity::kScLower), best[0]);
    EXPECT_EQ(value(l, "M", Quantity::kScUpper), best[1]);
    EXPECT_EQ(value(l, "M", Quantity::kCLower), best[2]);
    EXPECT_EQ(value(l, "M", Quantity::kCUpper), best[3]);
  }
  EXPECT_GT(feasible, 100);
}

TEST(BoundsTest, Subadditivity) {
  BoundLedger l;
  apply_catalog(l, "S3");
  apply_catalog(l, "RP3");
  EXPECT_EQ(value(l, apply_subadditivity(l, "S3", "RP3", false), Quantity::kScUpper), 0);
  apply_assertion(l, "A", true, Relation::kAtMost, 2);
  apply_assertion(l, "B", true, Relation::kAtMost, 3);
  auto s = apply_subadditivity(l, "A", "B", false);
  EXPECT_EQ(s, "(A # B)");
  EXPECT_EQ(value(l, s, Quantity::kScUpper), 5);
  EXPECT_FALSE(l.at(s).sc_lower);
  auto t = apply_subadditivity(l, "A", "B", true, "AB");
  EXPECT_EQ(value(l, t, Quantity::kScUpper), 5);
  EXPECT_EQ(l.at(t).sc_upper->inputs.size(), 2u);
  EXPECT_THROW(apply_subadditivity(l, "A", "C", false), std::invalid_argument);
  apply_assertion(l, "D", true, Relation::kAtLeast, 1);
  EXPECT_THROW(apply_subadditivity(l, "A", "D", false), std::invalid_argument);
}

TEST(BoundsTest, ContradictionNamesBothChains) {
  BoundLedger l;
  apply_catalog(l, "S3");
  auto before = l;
  try {
    apply_assertion(l, "S3", true, Relation::kAtLeast, 1);
    FAIL();
  } catch (const ContradictionError& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("sc_lo(S3)=1 by assert"), std::string::npos) << what;
    EXPECT_NE(what.find("sc_hi(S3)=0 by catalog"), std::string::npos) << what;
  }
  EXPECT_EQ(l, before);
}

TEST(BoundsTest, OnlyTightens) {
  BoundLedger l;
  apply_triangulation_bound(l, "M", 1);
  EXPECT_FALSE(l.tighten("M", Quantity::kScUpper, 7, "assert"));
  EXPECT_EQ(value(l, "M", Quantity::kScUpper), 4);
  apply_triangulation_bound(l, "M", 2);
  EXPECT_EQ(value(l, "M", Quantity::kScUpper), 4);
  EXPECT_EQ(l.at("M").sc_upper->detail, "n=1");
  EXPECT_TRUE(l.tighten("M", Quantity::kScUpper, 3, "assert"));
  // One declaration and two bounds.
  EXPECT_EQ(l.events().size(), 3u);
}

TEST(BoundsTest, QfsGivesUpperBound) {
  BoundLedger l;
  auto q = filling_base(testing::coordinate_planes(), "planes", "S3");
  EXPECT_EQ(apply_qfs(l, q), "S3");
  EXPECT_EQ(value(l, "S3", Quantity::kScUpper), 2);
  apply_catalog(l, "S3");
  EXPECT_EQ(value(l, "S3", Quantity::kScUpper), 0);
}

const char* kScript = R"(# sample
manifold M hyp
tri M 2
catalog S3
catalog RP3
sum X = S3 # RP3
qfs F exc(four-hat)
sum Y = M #d F
assert M c hi 1
matveev M
)";

TEST(BoundsTest, ScriptAndReplay) {
  auto l = run_bounds_script(kScript);
  EXPECT_EQ(value(l, "M", Quantity::kScUpper), 4);
  EXPECT_EQ(value(l, "M", Quantity::kCUpper), 1);
  EXPECT_EQ(value(l, "X", Quantity::kScUpper), 0);
  EXPECT_EQ(value(l, "F", Quantity::kScUpper), 0);
  EXPECT_EQ(value(l, "Y", Quantity::kScUpper), 8);
  EXPECT_TRUE(l.at("M").hypotheses);
  EXPECT_EQ(replay(l.events()), l);
  // Every chain names a rule and cites its inputs.
  EXPECT_NE(l.at("Y").sc_upper->chain.find("by triangulation n=2"), std::string::npos);
  EXPECT_NE(render_ledger(l).find("M: sc in [0, 4]  c in [0, 1]  (hyp)"), std::string::npos);
}

TEST(BoundsTest, MergeIntersects) {
  BoundLedger a, b;
  apply_triangulation_bound(a, "M", 3);
  apply_assertion(a, "M", false, Relation::kAtLeast, 1);
  apply_triangulation_bound(b, "M", 2);
  apply_assertion(b, "N", true, Relation::kAtLeast, 2);
  auto ab = merge(a, b);
  auto ba = merge(b, a);
  for (const auto* m : {&ab, &ba}) {
    EXPECT_EQ(value(*m, "M", Quantity::kScUpper), 8);
    EXPECT_EQ(value(*m, "M", Quantity::kCLower), 1);
    EXPECT_EQ(value(*m, "N", Quantity::kScLower), 2);
  }
  EXPECT_EQ(ab, ba);
  BoundLedger c;
  apply_assertion(c, "M", true, Relation::kAtLeast, 9);
  EXPECT_THROW(merge(ab, c), ContradictionError);
}

TEST(BoundsTest, ScriptErrors) {
  EXPECT_THROW(run_bounds_script("tri M 0"), std::invalid_argument);
  EXPECT_THROW(run_bounds_script("catalog T3"), std::invalid_argument);
  EXPECT_THROW(run_bounds_script("frobnicate"), std::invalid_argument);
  EXPECT_THROW(run_bounds_script("assert M sc lo x"), std::invalid_argument);
  EXPECT_THROW(run_bounds_script("catalog S3\nassert S3 sc lo 1"), ContradictionError);
  try {
    run_bounds_script("catalog S3\n\nsum Z = S3 # Q\n");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u) << e.what();
  }
}

}  // namespace
}  // namespace dehn
