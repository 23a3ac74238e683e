// Copyright 2026 The dcqa Authors.
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

#include "dcqa/knowledge_extraction.h"

#include <doctest.h>

#include <random>

#include "dcqa/error.h"
#include "dcqa/resources.h"
#include "test_support.h"

namespace dcqa {
namespace {

const Resources& res() { return Resources::defaults(); }

ClauseParse parse(const std::string& text) {
  return parse_clause(analyze_sentence({text, 0}, res().lexicon, res().gazetteer));
}

std::string span_text(const ClauseParse& p, Span s) {
  std::string out;
  for (std::size_t i = s.begin; i < s.end; ++i)
    out += (out.empty() ? "" : " ") + p.tokens[i].surface;
  return out;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

TEST_CASE("parse_clause on the Gandhi sentence") {
  ClauseParse p = parse("Gandhiji was born in Porbandar on 2nd October 1869");
  CHECK(span_text(p, p.subject) == "Gandhiji");
  CHECK(span_text(p, p.verb_group) == "was born");
  CHECK(p.tokens[p.main_verb].surface == "born");
  CHECK_FALSE(p.copular);
  CHECK_FALSE(p.object.has_value());
  REQUIRE(p.adjuncts.size() == 2);
  CHECK(p.adjuncts[0].preposition == "in");
  CHECK(span_text(p, p.adjuncts[0].phrase) == "Porbandar");
  CHECK(p.adjuncts[0].kind == AdjunctKind::kLocation);
  CHECK(p.adjuncts[1].preposition == "on");
  CHECK(span_text(p, p.adjuncts[1].phrase) == "2-Oct-1869");
  CHECK(p.adjuncts[1].kind == AdjunctKind::kTime);
}

TEST_CASE("parse_clause on subject-verb-object") {
  ClauseParse p = parse("Popeye eats spinach");
  CHECK(span_text(p, p.subject) == "Popeye");
  CHECK(span_text(p, p.verb_group) == "eats");
  REQUIRE(p.object.has_value());
  CHECK(span_text(p, *p.object) == "spinach");
  CHECK(p.adjuncts.empty());
}

TEST_CASE("parse_clause without a verb fails") {
  try {
    parse("in Porbandar");
    FAIL("expected NoVerbFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoVerbFound);
  }
  CHECK_THROWS_AS(parse_clause(std::vector<Token>{}), Error);
}

TEST_CASE("copula promotes to main verb") {
  ClauseParse p = parse("Spinach is green");
  CHECK(p.copular);
  CHECK(p.tokens[p.main_verb].surface == "is");
  CHECK(p.tokens[p.main_verb].pos == PosTag::kVerb);
  REQUIRE(p.object_head.has_value());
  CHECK(p.tokens[*p.object_head].surface == "green");

  ClauseParse has = parse("Popeye has a pipe");
  CHECK_FALSE(has.copular);
  CHECK(has.tokens[has.main_verb].surface == "has");
}

TEST_CASE("adjunct kinds") {
  ClauseParse p = parse("Popeye cut the bread with a knife near the house");
  REQUIRE(p.adjuncts.size() == 2);
  CHECK(p.adjuncts[0].kind == AdjunctKind::kInstrument);
  CHECK(p.tokens[p.adjuncts[0].head].surface == "knife");
  CHECK(p.adjuncts[1].kind == AdjunctKind::kLocation);

  const Gazetteer people = parse_gazetteer("kasturba\tPerson\n");
  ClauseParse with_person =
      parse_clause(analyze_sentence({"Gandhiji walked with Kasturba", 0}, res().lexicon, people));
  CHECK(with_person.adjuncts[0].kind == AdjunctKind::kOther);
  ClauseParse of = parse("Rahim is the brother of Karim");
  CHECK(of.adjuncts[0].kind == AdjunctKind::kOther);
  ClauseParse located = parse("Karim works for Delhi");
  CHECK(located.adjuncts[0].kind == AdjunctKind::kLocation);
}

TEST_CASE("split_knowledge_units reproduces the Gandhi units") {
  auto units = split_knowledge_units(parse("Gandhiji was born in Porbandar on 2nd October 1869"));
  REQUIRE(units.size() == 2);
  CHECK(units[0].text == "Gandhiji was born in Porbandar");
  CHECK(units[1].text == "Gandhiji was born on 2-Oct-1869");

  auto core = split_knowledge_units(parse("Popeye eats spinach"));
  REQUIRE(core.size() == 1);
  CHECK(core[0].text == "Popeye eats spinach");
}

TEST_CASE("three adjuncts give three units sharing the core") {
  ClauseParse p = parse("Gandhiji walked with a stick in Delhi on 12 March 1930");
  REQUIRE(p.adjuncts.size() == 3);
  auto units = split_knowledge_units(p);
  REQUIRE(units.size() == 3);
  CHECK(units[0].text == "Gandhiji walked with a stick");
  CHECK(units[1].text == "Gandhiji walked in Delhi");
  CHECK(units[2].text == "Gandhiji walked on 12-Mar-1930");
}

TEST_CASE("content_words drops function words and stopwords") {
  auto units = split_knowledge_units(parse("Gandhiji was born in Porbandar on 2nd October 1869"));
  CHECK(surfaces(content_words(units[0], res().stopwords)) ==
        std::vector<std::string>{"Gandhiji", "born", "Porbandar"});
  CHECK(surfaces(content_words(units[1], res().stopwords)) ==
        std::vector<std::string>{"Gandhiji", "born", "2-Oct-1869"});

  KnowledgeUnitDraft only_stop;
  only_stop.member_tokens = tokenize({"he and it", 0});
  CHECK(content_words(only_stop, res().stopwords).empty());
}

TEST_CASE("unit invariants on generated sentences") {
  std::mt19937 rng(5);
  const std::vector<std::string> subjects = {"Gandhiji", "Popeye", "The old king", "Karim"};
  const std::vector<std::string> verbs = {"was born", "eats", "lives", "walked", "is", "has"};
  const std::vector<std::string> objects = {"", "spinach", "the bread", "a brother", "green"};
  const std::vector<std::string> adjuncts = {"in Porbandar", "on 2nd October 1869",
                                             "with a knife", "near the house",
                                             "of Karim",     "at Rajkot"};
  for (int round = 0; round < 300; ++round) {
    std::string text =
        subjects[testing::uniform(rng, 0, 3)] + " " + verbs[testing::uniform(rng, 0, 5)];
    const std::string object = objects[testing::uniform(rng, 0, 4)];
    if (!object.empty()) text += " " + object;
    const int n = testing::uniform(rng, 0, 3);
    for (int i = 0; i < n; ++i) text += " " + adjuncts[testing::uniform(rng, 0, 5)];

    const std::vector<Token> sentence = analyze_sentence({text, 0}, res().lexicon, res().gazetteer);
    ClauseParse p = parse_clause(sentence);
    auto units = split_knowledge_units(p);
    CHECK(units.size() == std::max<std::size_t>(1, p.adjuncts.size()));

    // verb group holds exactly one Verb
    int verbs_in_group = 0;
    for (std::size_t i = p.verb_group.begin; i < p.verb_group.end; ++i) {
      verbs_in_group += p.tokens[i].pos == PosTag::kVerb;
    }
    CHECK(verbs_in_group == 1);

    for (const KnowledgeUnitDraft& unit : units) {
      for (const Token& t : content_words(unit, res().stopwords)) {
        CHECK(t.position < sentence.size());
        CHECK(sentence[t.position].surface == t.surface);
      }
      // core tokens appear in every unit
      for (std::size_t i = p.subject.begin; i < p.verb_group.end; ++i) {
        bool present = false;
        for (const Token& t : unit.member_tokens) present |= t.position == i;
        CHECK(present);
      }
    }
  }
}

}  // namespace
}  // namespace dcqa
