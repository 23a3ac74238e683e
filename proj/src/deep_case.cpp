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

#include "dcqa/deep_case.h"

#include "dcqa/error.h"

namespace dcqa {

std::string_view case_name(DeepCase c) {
  switch (c) {
    case DeepCase::kAgent:
      return "Agent";
    case DeepCase::kAction:
      return "Action";
    case DeepCase::kLocation:
      return "Location";
    case DeepCase::kTime:
      return "Time";
    case DeepCase::kInstrument:
      return "Instrument";
    case DeepCase::kPatient:
      return "Patient";
    case DeepCase::kState:
      return "State";
  }
  return "Patient";
}

std::string_view word_type_name(WordType t) {
  switch (t) {
    case WordType::kWho:
      return "Who";
    case WordType::kWhat:
      return "What";
    case WordType::kWhere:
      return "Where";
    case WordType::kWhen:
      return "When";
    case WordType::kHowWith:
      return "HowWith";
  }
  return "What";
}

std::optional<DeepCase> parse_case(std::string_view name) {
  std::string lower = fold_case(name);
  if (lower == "place") return DeepCase::kLocation;
  if (lower == "date") return DeepCase::kTime;
  for (DeepCase c : kAllDeepCases) {
    if (lower == fold_case(case_name(c))) return c;
  }
  return std::nullopt;
}

std::vector<CaseAssignment> assign_deep_cases(const KnowledgeUnitDraft& unit,
                                              const ClauseParse& parse) {
  std::vector<CaseAssignment> assignments;
  for (std::size_t m = 0; m < unit.member_tokens.size(); ++m) {
    const Token& token = unit.member_tokens[m];
    if (token.pos == PosTag::kAuxiliary || token.pos == PosTag::kPreposition ||
        token.pos == PosTag::kDeterminer) {
      continue;
    }
    const std::size_t at = token.position;
    DeepCase c = DeepCase::kPatient;
    if (at == parse.main_verb) {
      c = DeepCase::kAction;
    } else if (parse.subject_head == at) {
      c = DeepCase::kAgent;
    } else if (parse.object_head == at) {
      c = parse.copular && token.pos == PosTag::kAdjective ? DeepCase::kState : DeepCase::kPatient;
    } else {
      for (const Adjunct& adjunct : parse.adjuncts) {
        if (adjunct.head != at) continue;
        switch (adjunct.kind) {
          case AdjunctKind::kLocation:
            c = DeepCase::kLocation;
            break;
          case AdjunctKind::kTime:
            c = DeepCase::kTime;
            break;
          case AdjunctKind::kInstrument:
            c = DeepCase::kInstrument;
            break;
          case AdjunctKind::kOther:
            break;
        }
      }
    }
    assignments.push_back({m, c});
  }
  return assignments;
}

WordType word_type_for_case(DeepCase c, EntityTag entity) {
  switch (c) {
    case DeepCase::kAgent:
    case DeepCase::kPatient:
      return entity == EntityTag::kPerson ? WordType::kWho : WordType::kWhat;
    case DeepCase::kAction:
    case DeepCase::kState:
      return WordType::kWhat;
    case DeepCase::kLocation:
      return WordType::kWhere;
    case DeepCase::kTime:
      return WordType::kWhen;
    case DeepCase::kInstrument:
      return WordType::kHowWith;
  }
  return WordType::kWhat;
}

std::vector<DeepCase> cases_for_interrogative(std::string_view word,
                                              const InterrogativeTable& table) {
  auto it = table.find(fold_case(word));
  if (it == table.end()) {
    throw Error(ErrorCode::kUnknownInterrogative, "unsupported interrogative: " + std::string(word),
                std::string(word));
  }
  return it->second;
}

}  // namespace dcqa
