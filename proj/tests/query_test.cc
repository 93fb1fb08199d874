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


#include "acenls/query.h"

#include <gtest/gtest.h>

#include "acenls/generator.h"
#include "acenls/model-parser.h"
#include "support/fixtures.h"

namespace acenls {
namespace {

class TrafficLightQueryTest : public ::testing::Test {
 protected:
  void SetUp() override {
    model_ = ParseModelFile(testing::DataPath(testing::kTrafficLightFull));
    facts_ = ExtractFacts(model_);
    lexicon_ = LenientSessionLexicon(model_, Lexicon::Default());
  }

  Answer Ask(std::string_view q) {
    return AnswerQuestion(ParseQuestion(q, lexicon_), facts_, lexicon_);
  }

  ErrorCode AskError(std::string_view q) {
    try {
      Ask(q);
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "answered: " << q;
    return ErrorCode::kIo;
  }

  Model model_;
  FactBase facts_;
  Lexicon lexicon_ = Lexicon::Default();
};

TEST_F(TrafficLightQueryTest, WhatIsDatatype) {
  EXPECT_EQ(Ask("What is IndicatorSignal?").text, "It is a data-type.");
}

// The reference answer to this question reads "4 elements", but the model's
// own definition of IndicatorSignal lists exactly Off and On. Answers come
// from the fact base, so the expected count is taken from the fixture.
TEST_F(TrafficLightQueryTest, HowManyElementsCountsTheFixture) {
  std::int64_t members = 0;
  for (const EnumerationType& e : model_.data_dictionary->enumerations) {
    if (e.name == "IndicatorSignal") members = static_cast<std::int64_t>(e.members.size());
  }
  ASSERT_EQ(members, 2);
  const Answer a = Ask("How many elements does IndicatorSignal have?");
  EXPECT_EQ(a.text, "It has 2 elements.");
  EXPECT_EQ(a.count, members);
  EXPECT_EQ(Ask("How many elements does Signal have?").text, "It has 1 element.");
}

TEST_F(TrafficLightQueryTest, IsElementOf) {
  const Answer yes = Ask("Is On an element of IndicatorSignal?");
  EXPECT_EQ(yes.text, "Yes, it is.");
  EXPECT_EQ(yes.truth, true);
  EXPECT_EQ(Ask("Is Blue an element of TrafficColor?").text, "No, it is not.");
}

TEST_F(TrafficLightQueryTest, WalkIsNotATrafficColor) {
  bool in_traffic = false;
  bool in_pedestrian = false;
  for (const Fact& f : facts_.facts()) {
    if (auto* e = std::get_if<fact::ElementOf>(&f); e && e->member == "Walk") {
      in_traffic = in_traffic || e->type == "TrafficColor";
      in_pedestrian = in_pedestrian || e->type == "pedastrianColor";
    }
  }
  ASSERT_FALSE(in_traffic);
  ASSERT_TRUE(in_pedestrian);
  EXPECT_EQ(Ask("Is Walk an element of TrafficColor?").truth, false);
  EXPECT_EQ(Ask("Is Walk an element of pedastrianColor?").truth, true);
}

TEST_F(TrafficLightQueryTest, WhatIsOtherKinds) {
  EXPECT_EQ(Ask("What is tGreen?").text, "It is a constant.");
  EXPECT_EQ(Ask("What is TrafficLightsCtrl?").text, "It is a component.");
  EXPECT_EQ(Ask("What is LightCycle?").text, "It is a state-automaton.");
  EXPECT_EQ(Ask("What is request?").text, "It is a channel.");
  EXPECT_EQ(Ask("What is Walk?").text, "It is an element of pedastrianColor.");
  EXPECT_EQ(Ask("What is RedYellow?").text, "It is an element of TrafficColor.");
  EXPECT_EQ(Ask("What is pedestrian?").text, "It is a port of TrafficLightsCtrl.");
}

TEST_F(TrafficLightQueryTest, IsA) {
  EXPECT_EQ(Ask("Is TrafficLightsCtrl a component?").truth, true);
  EXPECT_EQ(Ask("Is Signal a constant?").truth, false);
  EXPECT_EQ(Ask("Is LightCycle a state-automaton?").truth, true);
}

TEST_F(TrafficLightQueryTest, Errors) {
  EXPECT_EQ(AskError("Where is IndicatorSignal?"), ErrorCode::kUnsupportedQuestionForm);
  EXPECT_EQ(AskError("How much elements does Signal have?"),
            ErrorCode::kUnsupportedQuestionForm);
  EXPECT_EQ(AskError("What is Zork?"), ErrorCode::kUnknownEntity);
  EXPECT_EQ(AskError("Is On an element of Zork?"), ErrorCode::kUnknownEntity);
  EXPECT_EQ(AskError("How many elements does Zork have?"), ErrorCode::kUnknownEntity);
  EXPECT_EQ(AskError("What is IndicatorSignal"), ErrorCode::kInvalidSentence);
  EXPECT_EQ(AskError("Signal is a datatype."), ErrorCode::kInvalidSentence);
  EXPECT_EQ(AskError("What is flurble?"), ErrorCode::kUnknownToken);
}

// Every proper name the generated document mentions has a WhatIs answer.
TEST_F(TrafficLightQueryTest, TotalOnGeneratedVocabulary) {
  const Document doc = GenerateDocument(model_, Lexicon::Default(), AllSections());
  for (const Sentence* s : doc.flat_sentences()) {
    for (const Token& t : s->tokens) {
      if (t.kind != TokenKind::kProperName || t.surface == "It") continue;
      EXPECT_NO_THROW(Ask("What is " + t.surface + "?")) << t.surface;
    }
  }
}

}  // namespace
}  // namespace acenls
