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

#ifndef DCQA_TEXT_ANALYSIS_H_
#define DCQA_TEXT_ANALYSIS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dcqa {

enum class PosTag {
  kNoun,
  kVerb,
  kAdjective,
  kAdverb,
  kPreposition,
  kDeterminer,
  kPronoun,
  kAuxiliary,
  kInterrogative,
  kNumber,
  kOther,
};

enum class EntityTag { kPerson, kLocation, kDate, kOrganization, kNone };

std::string_view pos_name(PosTag tag);
std::string_view entity_name(EntityTag tag);
// Case-insensitive; nullopt for unknown names.
std::optional<PosTag> parse_pos(std::string_view name);
std::optional<EntityTag> parse_entity(std::string_view name);

// Keys are lowercase surfaces.
using Lexicon = std::unordered_map<std::string, PosTag>;
using Gazetteer = std::unordered_map<std::string, EntityTag>;

struct RawSentence {
  std::string text;
  std::size_t document_offset = 0;
};

struct Token {
  std::string surface;
  std::size_t position = 0;
  PosTag pos = PosTag::kOther;
  EntityTag entity = EntityTag::kNone;
  // Raw text the token was built from. Differs from `surface` only for
  // merged date expressions ("2nd October 1869" vs "2-Oct-1869").
  std::string original;
};

// Splits at . ! ? followed by whitespace (or end of text), and at blank
// lines. Periods after known abbreviations, single-letter initials and
// ordinals ("2nd.") do not end a sentence.
std::vector<RawSentence> split_sentences(std::string_view document_text);

// Whitespace- and punctuation-delimited words. Hyphens, apostrophes, periods
// and slashes are kept when they sit between two word characters; all other
// punctuation is dropped.
std::vector<Token> tokenize(const RawSentence& sentence);

// Lexicon first, then numerals, suffix rules (-s/-es/-ed/-d after a known verb
// stem, -ly), then Noun.
std::vector<Token> tag_pos(std::vector<Token> tokens, const Lexicon& lexicon);

// Merges date expressions into single canonical Date tokens and assigns
// entity tags. Positions are renumbered to stay contiguous.
std::vector<Token> recognize_entities(std::vector<Token> tokens, const Gazetteer& gazetteer);

// Canonical `D-Mon-YYYY` (or `Mon-YYYY` when no day is present). Accepts
// "2nd October 1869", "October 2 1869", "2 of October 1869", "2-Oct-1869".
// Throws Error(kUnparseableDate).
std::string normalize_date(std::span<const std::string> parts);
std::string normalize_date(std::string_view expression);

// True if `word` names a month (full or abbreviated), any case.
bool is_month_name(std::string_view word);

// Lowercases ASCII letters; other bytes are left alone.
std::string fold_case(std::string_view text);

// Runs tokenize, tag_pos and recognize_entities.
std::vector<Token> analyze_sentence(const RawSentence& sentence, const Lexicon& lexicon,
                                    const Gazetteer& gazetteer);

}  // namespace dcqa

#endif  // DCQA_TEXT_ANALYSIS_H_
