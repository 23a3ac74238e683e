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

#ifndef DCQA_RESOURCES_H_
#define DCQA_RESOURCES_H_

#include <optional>
#include <string>
#include <string_view>

#include "dcqa/deep_case.h"
#include "dcqa/knowledge_extraction.h"
#include "dcqa/text_analysis.h"

namespace dcqa {

// Word lists shared by ingestion and question analysis. Read-only after
// construction.
struct Resources {
  Lexicon lexicon;
  Gazetteer gazetteer;
  Stopwords stopwords;
  InterrogativeTable interrogatives;

  // The lists shipped in data/, compiled into the library.
  static const Resources& defaults();
};

struct ResourcePaths {
  std::optional<std::string> lexicon;
  std::optional<std::string> gazetteer;
  std::optional<std::string> stopwords;
  std::optional<std::string> interrogatives;
};

// Unset paths fall back to the defaults. Throws Error(kIoError) for
// unreadable files and Error(kBadConfig) for malformed lines.
Resources load_resources(const ResourcePaths& paths);

// Config text parsers. Format: one entry per line, `word<TAB>value`,
// `#` starts a comment, blank lines ignored. `origin` names the source in
// error messages.
Lexicon parse_lexicon(std::string_view text, std::string_view origin = "lexicon");
Gazetteer parse_gazetteer(std::string_view text, std::string_view origin = "gazetteer");
// One word per line.
Stopwords parse_stopwords(std::string_view text, std::string_view origin = "stopwords");
// Value is a comma-separated case list.
InterrogativeTable parse_interrogatives(std::string_view text,
                                        std::string_view origin = "interrogatives");

namespace internal {
extern const std::string_view kDefaultLexicon;
extern const std::string_view kDefaultGazetteer;
extern const std::string_view kDefaultStopwords;
extern const std::string_view kDefaultInterrogatives;
}  // namespace internal

}  // namespace dcqa

#endif  // DCQA_RESOURCES_H_
