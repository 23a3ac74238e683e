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

#include "dcqa/pipeline.h"

#include "dcqa/error.h"

namespace dcqa {

std::vector<UnitInput> extract_units(const RawSentence& sentence, std::string_view source,
                                     const Resources& resources) {
  std::vector<Token> tokens = analyze_sentence(sentence, resources.lexicon, resources.gazetteer);
  ClauseParse parse = parse_clause(tokens);

  std::vector<UnitInput> units;
  for (const KnowledgeUnitDraft& draft : split_knowledge_units(parse)) {
    std::vector<CaseAssignment> cases = assign_deep_cases(draft, parse);
    UnitInput unit;
    unit.text = draft.text;
    unit.source = std::string(source);
    for (const CaseAssignment& assignment : cases) {
      const Token& token = draft.member_tokens[assignment.member];
      if (is_function_word(token, resources.stopwords)) continue;
      unit.words.push_back({token.surface, token.pos, token.entity, assignment.deep_case});
    }
    units.push_back(std::move(unit));
  }
  return units;
}

IngestReport ingest_document(Network& net, std::string_view text, std::string_view source,
                             const Resources& resources) {
  IngestReport report;
  const std::vector<RawSentence> sentences = split_sentences(text);
  report.sentences = sentences.size();
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const RawSentence& sentence = sentences[i];
    const std::string where = std::string(source) + ": sentence " + std::to_string(i + 1) +
                              " (offset " + std::to_string(sentence.document_offset) + ")";
    std::vector<UnitInput> units;
    try {
      units = extract_units(sentence, source, resources);
    } catch (const Error& e) {
      report.diagnostics.push_back(where + ": skipped: " + std::string(error_name(e.code())) +
                                   ": " + e.what());
      continue;
    }
    bool stored = false;
    for (const UnitInput& unit : units) {
      if (unit.words.empty()) {
        report.diagnostics.push_back(where + ": unit without content words: " + unit.text);
        continue;
      }
      report.units.push_back(net.add_knowledge_unit(unit));
      stored = true;
    }
    if (stored) ++report.parsed;
  }
  return report;
}

}  // namespace dcqa
