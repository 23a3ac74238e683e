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

#include "dcqa/resources.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "dcqa/error.h"

namespace dcqa {
namespace {

struct ConfigLine {
  std::size_t number;
  std::string key;
  std::string value;
};

std::string strip(std::string_view s) {
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

std::vector<ConfigLine> config_lines(std::string_view text, bool need_value,
                                     std::string_view origin) {
  std::vector<ConfigLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (strip(line).empty()) continue;

    std::size_t tab = line.find('\t');
    std::string key = strip(line.substr(0, tab));
    std::string value = tab == std::string_view::npos ? "" : strip(line.substr(tab + 1));
    if (need_value && (tab == std::string_view::npos || value.empty())) {
      throw Error(ErrorCode::kBadConfig,
                  std::string(origin) + ":" + std::to_string(number) + ": expected word<TAB>value",
                  std::string(origin));
    }
    if (key.find_first_of(" \t") != std::string::npos) {
      throw Error(ErrorCode::kBadConfig,
                  std::string(origin) + ":" + std::to_string(number) + ": word contains spaces",
                  std::string(origin));
    }
    lines.push_back({number, fold_case(key), value});
  }
  return lines;
}

[[noreturn]] void bad_value(std::string_view origin, std::size_t line, const std::string& value) {
  throw Error(ErrorCode::kBadConfig,
              std::string(origin) + ":" + std::to_string(line) + ": unknown tag '" + value + "'",
              std::string(origin));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Lexicon parse_lexicon(std::string_view text, std::string_view origin) {
  Lexicon lexicon;
  for (const ConfigLine& line : config_lines(text, true, origin)) {
    auto tag = parse_pos(line.value);
    if (!tag) bad_value(origin, line.number, line.value);
    lexicon[line.key] = *tag;
  }
  return lexicon;
}

Gazetteer parse_gazetteer(std::string_view text, std::string_view origin) {
  Gazetteer gazetteer;
  for (const ConfigLine& line : config_lines(text, true, origin)) {
    auto tag = parse_entity(line.value);
    if (!tag) bad_value(origin, line.number, line.value);
    gazetteer[line.key] = *tag;
  }
  return gazetteer;
}

Stopwords parse_stopwords(std::string_view text, std::string_view origin) {
  Stopwords stopwords;
  for (const ConfigLine& line : config_lines(text, false, origin)) stopwords.insert(line.key);
  return stopwords;
}

InterrogativeTable parse_interrogatives(std::string_view text, std::string_view origin) {
  InterrogativeTable table;
  for (const ConfigLine& line : config_lines(text, true, origin)) {
    std::vector<DeepCase> cases;
    std::stringstream list(line.value);
    std::string item;
    while (std::getline(list, item, ',')) {
      auto c = parse_case(strip(item));
      if (!c) bad_value(origin, line.number, strip(item));
      cases.push_back(*c);
    }
    table[line.key] = std::move(cases);
  }
  return table;
}

const Resources& Resources::defaults() {
  static const Resources resources{
      parse_lexicon(internal::kDefaultLexicon),
      parse_gazetteer(internal::kDefaultGazetteer),
      parse_stopwords(internal::kDefaultStopwords),
      parse_interrogatives(internal::kDefaultInterrogatives),
  };
  return resources;
}

const InterrogativeTable& default_interrogatives() { return Resources::defaults().interrogatives; }

Resources load_resources(const ResourcePaths& paths) {
  Resources resources = Resources::defaults();
  if (paths.lexicon) resources.lexicon = parse_lexicon(read_file(*paths.lexicon), *paths.lexicon);
  if (paths.gazetteer) {
    resources.gazetteer = parse_gazetteer(read_file(*paths.gazetteer), *paths.gazetteer);
  }
  if (paths.stopwords) {
    resources.stopwords = parse_stopwords(read_file(*paths.stopwords), *paths.stopwords);
  }
  if (paths.interrogatives) {
    resources.interrogatives =
        parse_interrogatives(read_file(*paths.interrogatives), *paths.interrogatives);
  }
  return resources;
}

}  // namespace dcqa
