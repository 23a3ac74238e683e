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

#include "dcqa/persistence.h"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "dcqa/error.h"

namespace dcqa {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorCode::kCorruptStore, "corrupt store: " + what);
}

template <typename T>
T field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) corrupt(where + ": missing '" + key + "'");
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    corrupt(where + ": bad '" + key + "'");
  }
}

const json& array_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    corrupt(std::string("missing array '") + key + "'");
  return doc.at(key);
}

}  // namespace

std::string serialize_network(const Network& net) {
  const NetworkStats stats = net.stats();
  json doc;
  doc["header"] = {{"magic", kStoreMagic},
                   {"format_version", kStoreFormatVersion},
                   {"word_count", stats.words},
                   {"knowledge_count", stats.knowledge_units},
                   {"link_count", stats.links}};

  json words = json::array();
  for (const WordNode& w : net.words()) {
    words.push_back({{"id", w.id},
                     {"display", w.display},
                     {"canonical", w.canonical},
                     {"pos", pos_name(w.pos)},
                     {"entity", entity_name(w.entity)}});
  }
  doc["words"] = std::move(words);

  json knowledge = json::array();
  for (const KnowledgeEntry& k : net.knowledge_entries()) {
    json cases = json::array();
    for (DeepCase c : k.cases) cases.push_back(case_name(c));
    knowledge.push_back({{"id", k.id},
                         {"text", k.text},
                         {"source", k.source},
                         {"word_ids", k.word_ids},
                         {"cases", std::move(cases)}});
  }
  doc["knowledge"] = std::move(knowledge);

  json links = json::array();
  for (const auto& [pair, l] : net.links()) {
    links.push_back({{"a", l.a}, {"b", l.b}, {"knowledge_ids", l.knowledge_ids}});
  }
  doc["links"] = std::move(links);
  return doc.dump(2) + "\n";
}

Network deserialize_network(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    corrupt(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object() || !doc.contains("header")) corrupt("missing header");
  const json& header = doc.at("header");
  if (field<std::string>(header, "magic", "header") != kStoreMagic) corrupt("bad magic");
  const int version = field<int>(header, "format_version", "header");
  if (version != kStoreFormatVersion) {
    corrupt("unsupported format_version " + std::to_string(version));
  }

  const json& word_records = array_field(doc, "words");
  const json& knowledge_records = array_field(doc, "knowledge");
  const json& link_records = array_field(doc, "links");
  auto check_count = [&](const char* key, std::size_t actual) {
    auto declared = field<std::size_t>(header, key, "header");
    if (declared != actual) {
      corrupt(std::string(key) + " is " + std::to_string(declared) + " but body has " +
              std::to_string(actual));
    }
  };
  check_count("word_count", word_records.size());
  check_count("knowledge_count", knowledge_records.size());
  check_count("link_count", link_records.size());

  std::vector<WordNode> words;
  for (const json& r : word_records) {
    WordNode w;
    w.id = field<WordId>(r, "id", "word");
    const std::string where = "word " + std::to_string(w.id);
    w.display = field<std::string>(r, "display", where);
    w.canonical = field<std::string>(r, "canonical", where);
    auto pos = parse_pos(field<std::string>(r, "pos", where));
    auto entity = parse_entity(field<std::string>(r, "entity", where));
    if (!pos || !entity) corrupt(where + ": unknown tag");
    w.pos = *pos;
    w.entity = *entity;
    words.push_back(std::move(w));
  }

  std::vector<KnowledgeEntry> knowledge;
  for (const json& r : knowledge_records) {
    KnowledgeEntry k;
    k.id = field<KnowledgeId>(r, "id", "knowledge");
    const std::string where = "knowledge K" + std::to_string(k.id);
    k.text = field<std::string>(r, "text", where);
    k.source = field<std::string>(r, "source", where);
    k.word_ids = field<std::vector<WordId>>(r, "word_ids", where);
    for (const std::string& name : field<std::vector<std::string>>(r, "cases", where)) {
      auto c = parse_case(name);
      // Only canonical names are stored.
      if (!c || case_name(*c) != name) corrupt(where + ": unknown case '" + name + "'");
      k.cases.push_back(*c);
    }
    knowledge.push_back(std::move(k));
  }

  Network net;
  try {
    net = Network::from_records(std::move(words), std::move(knowledge));
  } catch (const std::invalid_argument& e) {
    corrupt(e.what());
  }

  std::vector<Link> links;
  for (const json& r : link_records) {
    Link l;
    l.a = field<WordId>(r, "a", "link");
    l.b = field<WordId>(r, "b", "link");
    for (WordId endpoint : {l.a, l.b}) {
      if (endpoint == 0 || endpoint > net.words().size()) {
        corrupt("link references missing word id " + std::to_string(endpoint));
      }
    }
    const std::string where = "link (" + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
    for (KnowledgeId k : field<std::vector<KnowledgeId>>(r, "knowledge_ids", where)) {
      if (k == 0 || k > net.knowledge_entries().size()) {
        corrupt(where + " references missing knowledge id " + std::to_string(k));
      }
      l.knowledge_ids.insert(k);
    }
    links.push_back(std::move(l));
  }
  auto derived = net.links().begin();
  for (const Link& l : links) {
    if (derived == net.links().end() || !(l == derived->second)) {
      corrupt("link (" + std::to_string(l.a) + "," + std::to_string(l.b) +
              ") disagrees with knowledge units");
    }
    ++derived;
  }
  if (derived != net.links().end()) corrupt("links missing for knowledge units");
  return net;
}

void save(const Network& net, const std::string& path) {
  const std::string text = serialize_network(net);
  const std::filesystem::path target(path);
  const std::filesystem::path temp = target.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path, path);
    out << text;
    if (!out.flush()) throw Error(ErrorCode::kIoError, "cannot write " + path, path);
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot write " + path + ": " + ec.message(), path);
}

Network load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read store " + path, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return deserialize_network(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()) + " (" + path + ")", path);
  }
}

}  // namespace dcqa
