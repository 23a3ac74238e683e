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

#include <algorithm>

#include "dcqa/error.h"

namespace dcqa {
namespace {

bool nominal(const Token& t) {
  return t.pos == PosTag::kNoun || t.pos == PosTag::kPronoun || t.pos == PosTag::kNumber;
}

bool is_be_form(std::string_view word) {
  static constexpr std::string_view kForms[] = {"am",   "is", "are",  "was",
                                                "were", "be", "been", "being"};
  std::string lower = fold_case(word);
  return std::find(std::begin(kForms), std::end(kForms), lower) != std::end(kForms);
}

std::optional<std::size_t> last_matching(const std::vector<Token>& tokens, Span span,
                                         bool (*pred)(const Token&)) {
  for (std::size_t i = span.end; i > span.begin; --i) {
    if (pred(tokens[i - 1])) return i - 1;
  }
  return std::nullopt;
}

std::optional<std::size_t> subject_head(const std::vector<Token>& tokens, Span subject) {
  for (std::size_t i = subject.begin; i < subject.end; ++i) {
    if (tokens[i].pos != PosTag::kPreposition) continue;
    if (auto head = last_matching(tokens, {subject.begin, i}, nominal)) return head;
    break;
  }
  return last_matching(tokens, subject, nominal);
}

std::size_t adjunct_head(const std::vector<Token>& tokens, Span phrase) {
  for (std::size_t i = phrase.begin; i < phrase.end; ++i) {
    if (tokens[i].entity == EntityTag::kDate) return i;
  }
  return last_matching(tokens, phrase, nominal).value_or(phrase.end - 1);
}

AdjunctKind classify(const std::string& preposition, const Token& head) {
  if (head.entity == EntityTag::kDate) return AdjunctKind::kTime;
  if (head.entity == EntityTag::kLocation || preposition == "in" || preposition == "at" ||
      preposition == "near") {
    return AdjunctKind::kLocation;
  }
  if (preposition == "with" && head.entity != EntityTag::kPerson) return AdjunctKind::kInstrument;
  return AdjunctKind::kOther;
}

std::string sentence_text(std::span<const Token> tokens) {
  std::string text;
  for (const Token& t : tokens) text += (text.empty() ? "" : " ") + t.surface;
  return text;
}

}  // namespace

std::string_view adjunct_kind_name(AdjunctKind kind) {
  switch (kind) {
    case AdjunctKind::kLocation:
      return "Location";
    case AdjunctKind::kTime:
      return "Time";
    case AdjunctKind::kInstrument:
      return "Instrument";
    case AdjunctKind::kOther:
      return "Other";
  }
  return "Other";
}

ClauseParse parse_clause(std::span<const Token> input) {
  ClauseParse parse;
  parse.tokens.assign(input.begin(), input.end());
  std::vector<Token>& tokens = parse.tokens;
  const std::size_t n = tokens.size();

  auto verbal = [](const Token& t) {
    return t.pos == PosTag::kVerb || t.pos == PosTag::kAuxiliary;
  };
  auto first = std::find_if(tokens.begin(), tokens.end(), verbal);
  if (first == tokens.end()) {
    throw Error(ErrorCode::kNoVerbFound, "no verb in: " + sentence_text(input),
                sentence_text(input));
  }
  const std::size_t verb_start = static_cast<std::size_t>(first - tokens.begin());

  // Auxiliary* [Adverb* between auxiliaries and verb] Verb
  std::size_t j = verb_start;
  std::optional<std::size_t> main_verb;
  std::optional<std::size_t> last_aux;
  while (j < n) {
    PosTag tag = tokens[j].pos;
    if (tag == PosTag::kAuxiliary) {
      last_aux = j++;
      continue;
    }
    if (tag == PosTag::kVerb) {
      main_verb = j++;
      break;
    }
    if (tag == PosTag::kAdverb && last_aux) {
      std::size_t k = j;
      while (k < n && tokens[k].pos == PosTag::kAdverb) ++k;
      if (k < n && verbal(tokens[k])) {
        j = k;
        continue;
      }
    }
    break;
  }
  if (!main_verb) {
    main_verb = last_aux;
    parse.copular = is_be_form(tokens[*last_aux].surface);
    tokens[*last_aux].pos = PosTag::kVerb;
  }
  parse.main_verb = *main_verb;
  parse.verb_group = {verb_start, j};
  parse.subject = {0, verb_start};
  parse.subject_head = subject_head(tokens, parse.subject);

  std::size_t k = j;
  while (k < n && tokens[k].pos != PosTag::kPreposition) ++k;
  if (k > j) {
    parse.object = Span{j, k};
    parse.object_head = last_matching(tokens, *parse.object, nominal);
    if (!parse.object_head) {
      parse.object_head = last_matching(tokens, *parse.object,
                                        [](const Token& t) { return t.pos == PosTag::kAdjective; });
    }
  }

  while (k < n) {
    std::size_t prep = k++;
    while (k < n && tokens[k].pos != PosTag::kPreposition) ++k;
    Span phrase{prep + 1, k};
    if (phrase.empty()) continue;
    Adjunct adjunct;
    adjunct.preposition = fold_case(tokens[prep].surface);
    adjunct.preposition_index = prep;
    adjunct.phrase = phrase;
    adjunct.head = adjunct_head(tokens, phrase);
    adjunct.kind = classify(adjunct.preposition, tokens[adjunct.head]);
    parse.adjuncts.push_back(std::move(adjunct));
  }
  return parse;
}

std::vector<KnowledgeUnitDraft> split_knowledge_units(const ClauseParse& parse,
                                                      std::size_t source_sentence) {
  std::vector<std::size_t> core;
  auto add_span = [](std::vector<std::size_t>& out, Span span) {
    for (std::size_t i = span.begin; i < span.end; ++i) out.push_back(i);
  };
  add_span(core, parse.subject);
  add_span(core, parse.verb_group);
  if (parse.object) add_span(core, *parse.object);

  auto make_unit = [&](std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    KnowledgeUnitDraft unit;
    unit.source_sentence = source_sentence;
    for (std::size_t i : members) {
      const Token& token = parse.tokens[i];
      unit.text += (unit.text.empty() ? "" : " ") + token.surface;
      unit.member_tokens.push_back(token);
    }
    return unit;
  };

  std::vector<KnowledgeUnitDraft> units;
  if (parse.adjuncts.empty()) {
    units.push_back(make_unit(core));
    return units;
  }
  for (const Adjunct& adjunct : parse.adjuncts) {
    std::vector<std::size_t> members = core;
    members.push_back(adjunct.preposition_index);
    add_span(members, adjunct.phrase);
    units.push_back(make_unit(std::move(members)));
  }
  return units;
}

bool is_function_word(const Token& token, const Stopwords& stopwords) {
  if (token.pos == PosTag::kAuxiliary || token.pos == PosTag::kPreposition ||
      token.pos == PosTag::kDeterminer) {
    return true;
  }
  return stopwords.contains(fold_case(token.surface));
}

std::vector<Token> content_words(const KnowledgeUnitDraft& unit, const Stopwords& stopwords) {
  std::vector<Token> words;
  for (const Token& token : unit.member_tokens) {
    if (!is_function_word(token, stopwords)) words.push_back(token);
  }
  return words;
}

}  // namespace dcqa
