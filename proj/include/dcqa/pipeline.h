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

#ifndef DCQA_PIPELINE_H_
#define DCQA_PIPELINE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dcqa/network.h"
#include "dcqa/resources.h"

namespace dcqa {

struct IngestReport {
  std::size_t sentences = 0;
  // Sentences that produced at least one knowledge unit.
  std::size_t parsed = 0;
  std::vector<KnowledgeId> units;
  std::vector<std::string> diagnostics;
};

// Sentence analysis, clause parsing, unit splitting and case assignment for
// one sentence. Throws Error(kNoVerbFound).
std::vector<UnitInput> extract_units(const RawSentence& sentence, std::string_view source,
                                     const Resources& resources);

// Learning phase for one document. Sentences that fail to parse, and units
// without content words, are skipped with a diagnostic.
IngestReport ingest_document(Network& net, std::string_view text, std::string_view source,
                             const Resources& resources);

}  // namespace dcqa

#endif  // DCQA_PIPELINE_H_
