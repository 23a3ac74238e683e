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

#ifndef DCQA_KNOWLEDGE_EXTRACTION_H_
#define DCQA_KNOWLEDGE_EXTRACTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "dcqa/text_analysis.h"

namespace dcqa {

// Lowercase surfaces dropped from content words.
using Stopwords = std::unordered_set<std::string>;

// Half-open token index range.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const { return begin >= end; }
  std::size_t size() const { return empty() ? 0 : end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
  bool operator==(const Span&) const = default;
};

enum class AdjunctKind { kLocation, kTime, kInstrument, kOther };

std::string_view adjunct_kind_name(AdjunctKind kind);

struct Adjunct {
  std::string preposition;
  std::size_t preposition_index = 0;
  Span phrase;
  std::size_t head = 0;
  AdjunctKind kind = AdjunctKind::kOther;
};

// A sentence reduced to subject + verb group [+ object] + prepositional
// adjuncts. All indices refer to `tokens`.
struct ClauseParse {
  std::vector<Token> tokens;
  Span subject;
  std::optional<std::size_t> subject_head;
  Span verb_group;
  std::size_t main_verb = 0;
  // Main verb is a promoted auxiliary ("Spinach is green").
  bool copular = false;
  std::optional<Span> object;
  std::optional<std::size_t> object_head;
  std::vector<Adjunct> adjuncts;
};

struct KnowledgeUnitDraft {
  std::string text;
  std::vector<Token> member_tokens;
  std::size_t source_sentence = 0;
};

// Throws Error(kNoVerbFound) when the sentence has neither a verb nor an
// auxiliary. An auxiliary run not followed by a verb promotes its last
// auxiliary to main verb (tagged Verb in the returned tokens).
ClauseParse parse_clause(std::span<const Token> tokens);

// One unit per adjunct (core + that adjunct), or the bare core when there are
// no adjuncts.
std::vector<KnowledgeUnitDraft> split_knowledge_units(const ClauseParse& parse,
                                                      std::size_t source_sentence = 0);

// Auxiliaries, prepositions, determiners and stopwords are function words.
bool is_function_word(const Token& token, const Stopwords& stopwords);

std::vector<Token> content_words(const KnowledgeUnitDraft& unit, const Stopwords& stopwords);

}  // namespace dcqa

#endif  // DCQA_KNOWLEDGE_EXTRACTION_H_
