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

#ifndef DCQA_DEEP_CASE_H_
#define DCQA_DEEP_CASE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcqa/knowledge_extraction.h"
#include "dcqa/text_analysis.h"

namespace dcqa {

enum class DeepCase { kAgent, kAction, kLocation, kTime, kInstrument, kPatient, kState };

enum class WordType { kWho, kWhat, kWhere, kWhen, kHowWith };

inline constexpr DeepCase kAllDeepCases[] = {
    DeepCase::kAgent,      DeepCase::kAction,  DeepCase::kLocation, DeepCase::kTime,
    DeepCase::kInstrument, DeepCase::kPatient, DeepCase::kState};

std::string_view case_name(DeepCase c);
std::string_view word_type_name(WordType t);

// Accepts the canonical names plus the display aliases "Place" (Location)
// and "Date" (Time). Case-insensitive.
std::optional<DeepCase> parse_case(std::string_view name);

struct CaseAssignment {
  std::size_t member = 0;  // index into KnowledgeUnitDraft::member_tokens
  DeepCase deep_case = DeepCase::kPatient;
};

// Cases for every member token that is not an auxiliary, preposition or
// determiner. Subject head is Agent, main verb Action, object head Patient
// (State for an adjective after a copula), adjunct heads take their adjunct
// kind; everything else is Patient.
std::vector<CaseAssignment> assign_deep_cases(const KnowledgeUnitDraft& unit,
                                              const ClauseParse& parse);

WordType word_type_for_case(DeepCase c, EntityTag entity);

// Interrogative (lowercase) -> required cases in preference order.
using InterrogativeTable = std::map<std::string, std::vector<DeepCase>, std::less<>>;

const InterrogativeTable& default_interrogatives();

// Throws Error(kUnknownInterrogative).
std::vector<DeepCase> cases_for_interrogative(
    std::string_view word, const InterrogativeTable& table = default_interrogatives());

}  // namespace dcqa

#endif  // DCQA_DEEP_CASE_H_
