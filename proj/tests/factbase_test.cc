// Copyright 2026 The acenls Authors.
//
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

#include "acenls/factbase.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "acenls/model-parser.h"
#include "support/fixtures.h"
#include "support/random-model.h"

namespace acenls {
namespace {

Model WithEnums(std::vector<EnumerationType> enums) {
  Model m;
  m.data_dictionary = DataDictionary{std::move(enums), {}};
  return m;
}

TEST(ExtractFactsTest, SingleMemberEnumeration) {
  const FactBase fb = ExtractFacts(WithEnums({{"Signal", {"Present"}}}));
  const std::vector<Fact> want = {fact::IsDatatype{"Signal"},
                                  fact::HasElementCount{"Signal", 1},
                                  fact::ElementOf{"Present", "Signal"}};
  EXPECT_EQ(fb.facts(), want);
}

TEST(ExtractFactsTest, EmptyModel) { EXPECT_TRUE(ExtractFacts(Model{}).empty()); }

TEST(ExtractFactsTest, FourMembers) {
  const FactBase fb = ExtractFacts(
      WithEnums({{"TrafficColor", {"Green", "Red", "RedYellow", "Yellow"}}}));
  EXPECT_TRUE(fb.Contains(fact::HasElementCount{"TrafficColor", 4}));
  EXPECT_EQ(fb.All<fact::ElementOf>().size(), 4u);
  EXPECT_TRUE(fb.Contains(fact::ElementOf{"RedYellow", "TrafficColor"}));
}

TEST(ExtractFactsTest, FixtureHasPedestrianWalk) {
  const FactBase fb = ExtractFacts(
      ParseModelFile(testing::DataPath(testing::kTrafficLight)));
  bool found = false;
  for (const Fact& f : fb.facts()) {
    found = found || FactToString(f) == "ElementOf(Walk, pedastrianColor)";
  }
  EXPECT_TRUE(found);
}

TEST(ExtractFactsTest, ArchitectureAndAutomatonFacts) {
  const FactBase fb = ExtractFacts(
      ParseModelFile(testing::DataPath(testing::kTrafficLightFull)));
  EXPECT_TRUE(fb.Contains(fact::Subcomponent{"TrafficLightSystem", "TrafficLightsCtrl"}));
  EXPECT_TRUE(fb.Contains(
      fact::HasPort{"TrafficLightsCtrl", "pedestrian", PortDirection::kInput, "Signal"}));
  EXPECT_TRUE(fb.Contains(fact::Connects{"request", "TrafficLightSystem", "button",
                                         "TrafficLightsCtrl", "pedestrian"}));
  EXPECT_TRUE(fb.Contains(fact::IsAutomaton{"LightCycle", "TrafficLightsCtrl"}));
  EXPECT_TRUE(fb.Contains(fact::IsInitialState{"LightCycle", "Red"}));
  EXPECT_TRUE(fb.Contains(fact::HasTransition{"LightCycle", "Red", "RedYellow",
                                              "counter==tRed", std::nullopt}));
}

TEST(FactBaseTest, DeduplicatesAndIndexes) {
  FactBase fb;
  EXPECT_TRUE(fb.Add(fact::ElementOf{"On", "IndicatorSignal"}));
  EXPECT_FALSE(fb.Add(fact::ElementOf{"On", "IndicatorSignal"}));
  EXPECT_EQ(fb.size(), 1u);
  EXPECT_TRUE(fb.Knows("On"));
  EXPECT_TRUE(fb.Knows("IndicatorSignal"));
  EXPECT_FALSE(fb.Knows("Off"));
  EXPECT_EQ(fb.About("On").size(), 1u);
}

TEST(FactBaseTest, GuardTextIsNotAnEntity) {
  FactBase fb;
  fb.Add(fact::HasTransition{"A", "S", "T", "go", "reset"});
  EXPECT_TRUE(fb.Knows("S"));
  EXPECT_FALSE(fb.Knows("go"));
}

TEST(FactToStringTest, StableForms) {
  EXPECT_EQ(FactToString(fact::HasValue{"tRed", -5}), "HasValue(tRed, -5)");
  EXPECT_EQ(FactToString(fact::HasTransition{"A", "S", "T", std::nullopt, "go"}),
            "HasTransition(A, S, T, action: go)");
  EXPECT_EQ(FactToString(fact::HasPort{"C", "p", PortDirection::kOutput, "integer"}),
            "HasPort(C, p, output, integer)");
}

TEST(FactsEqualTest, ReflexiveStrictSubsetPermutation) {
  const FactBase f = ExtractFacts(
      ParseModelFile(testing::DataPath(testing::kTrafficLightFull)));
  EXPECT_TRUE(FactsEqual(f, f));

  FactBase missing;
  bool dropped = false;
  for (const Fact& x : f.facts()) {
    if (!dropped && std::holds_alternative<fact::ElementOf>(x)) {
      dropped = true;
      continue;
    }
    missing.Add(x);
  }
  EXPECT_FALSE(FactsEqual(f, missing));
  EXPECT_FALSE(FactsEqual(missing, f));
  EXPECT_EQ(FactsMissingFrom(f, missing).size(), 1u);

  std::vector<Fact> shuffled = f.facts();
  std::mt19937 rng(11);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  FactBase permuted;
  for (const Fact& x : shuffled) permuted.Add(x);
  EXPECT_TRUE(FactsEqual(f, permuted));
}

// For every type, HasElementCount(t, n) and the ElementOf facts agree.
TEST(FactBasePropertyTest, CountCoherence) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const FactBase fb = ExtractFacts(testing::RandomModel(seed));
    std::map<std::string, std::int64_t> counted;
    for (const Fact& f : fb.facts()) {
      if (auto* e = std::get_if<fact::ElementOf>(&f)) ++counted[e->type];
    }
    for (const auto* c : fb.All<fact::HasElementCount>()) {
      EXPECT_EQ(c->count, counted[c->type]) << "seed " << seed << " " << c->type;
    }
    for (const auto* s : fb.All<fact::IsInitialState>()) {
      EXPECT_TRUE(fb.Contains(fact::HasState{s->automaton, s->state}));
    }
  }
}

TEST(FactBasePropertyTest, Determinism) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Model m = testing::RandomModel(seed);
    const FactBase a = ExtractFacts(m);
    const FactBase b = ExtractFacts(m);
    EXPECT_TRUE(FactsEqual(a, b));
    EXPECT_EQ(a.facts(), b.facts());
  }
}

}  // namespace
}  // namespace acenls
