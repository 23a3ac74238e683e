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

#ifndef DCQA_QA_ENGINE_H_
#define DCQA_QA_ENGINE_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcqa/deep_case.h"
#include "dcqa/network.h"
#include "dcqa/resources.h"

namespace dcqa {

inline constexpr int kDefaultMaxHops = 3;

struct Question {
  std::string raw;
  std::string interrogative;  // lowercase
  std::vector<std::string> content_words;
  std::vector<DeepCase> required_cases;
};

// The answer-bearing word of a unit and the rank of its case in
// Question::required_cases.
struct CaseMatch {
  WordId word = 0;
  DeepCase deep_case = DeepCase::kPatient;
  std::size_t preference = 0;

  bool operator==(const CaseMatch&) const = default;
};

struct Candidate {
  KnowledgeId knowledge = 0;
  std::vector<WordId> matched_word_ids;
  std::optional<CaseMatch> case_match;

  bool operator==(const Candidate&) const = default;
};

struct ResolvedWord {
  std::string surface;
  WordId id = 0;

  bool operator==(const ResolvedWord&) const = default;
};

// How an answer was derived.
struct Trace {
  Question question;
  std::vector<ResolvedWord> resolved;
  std::vector<Candidate> candidates;
  std::string route;            // "direct" or "multi-hop"
  std::string fallback_reason;  // why direct search did not answer, if it did not
  std::vector<KnowledgeId> chain;
};

struct Answer {
  std::vector<std::string> texts;
  std::optional<std::string> answer_word;
  int hops = 1;
  std::vector<KnowledgeId> units;
  Trace trace;
};

// Throws Error(kNoInterrogative) or Error(kNoContentWords).
Question analyze_question(std::string_view text,
                          const Resources& resources = Resources::defaults());

// Exact case-insensitive lookup, then the word with -s/-es/-ed/-d (or y/-ies/-ied)
// stripped or added, in that order.
std::optional<WordId> resolve_word(const Network& net, std::string_view surface);

// Best answer-bearing word of a unit: earliest required case wins; within a
// case, words outside `question_words` win over question words.
std::optional<CaseMatch> find_case_match(const KnowledgeEntry& entry,
                                         const std::vector<DeepCase>& required_cases,
                                         const std::vector<WordId>& question_words);

// Units containing every question word. Throws Error(kUnknownWord).
std::vector<Candidate> search_direct(const Question& q, const Network& net);

// Throws Error(kNoCaseMatch) when no candidate carries a required case
// (including when there are no candidates).
Answer select_answer(const std::vector<Candidate>& candidates, const Question& q,
                     const Network& net);

// Strength of the step between two consecutive units of a chain: the heaviest
// link between words both units share, or 1 when they share a single word.
// 0 when they share nothing.
std::size_t hop_weight(const Network& net, KnowledgeId from, KnowledgeId to);

// Shortest chain of units (consecutive units share a word, no unit repeated)
// that starts at a unit holding the first resolvable question word, ends at a
// unit with a required case, and covers every resolvable question word. Ties:
// case preference, then higher minimum hop weight, then lower id sequence.
// Throws Error(kUnknownWord) or Error(kNoPathFound).
Answer answer_multi_hop(const Question& q, const Network& net, int max_hops = kDefaultMaxHops);

// Question analysis, direct search and case filter, with multi-hop fallback.
Answer answer(std::string_view text, const Network& net,
              const Resources& resources = Resources::defaults(), int max_hops = kDefaultMaxHops);

}  // namespace dcqa

#endif  // DCQA_QA_ENGINE_H_
