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

#include "dcqa/network.h"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <stdexcept>

#include "dcqa/error.h"

namespace dcqa {

std::optional<DeepCase> KnowledgeEntry::case_of(WordId word) const {
  for (std::size_t i = 0; i < word_ids.size(); ++i) {
    if (word_ids[i] == word) return cases[i];
  }
  return std::nullopt;
}

bool KnowledgeEntry::contains(WordId word) const {
  return std::find(word_ids.begin(), word_ids.end(), word) != word_ids.end();
}

std::string canonical_unit_text(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return fold_case(out);
}

WordId Network::intern_word(std::string_view surface, PosTag pos, EntityTag entity) {
  std::string canonical = fold_case(surface);
  if (auto it = word_index_.find(canonical); it != word_index_.end()) {
    WordNode& node = words_[it->second - 1];
    if (node.entity == EntityTag::kNone) node.entity = entity;
    if (node.pos == PosTag::kOther) node.pos = pos;
    return node.id;
  }
  WordNode node;
  node.id = static_cast<WordId>(words_.size() + 1);
  node.canonical = canonical;
  node.display = std::string(surface);
  node.pos = pos;
  node.entity = entity;
  word_index_.emplace(std::move(canonical), node.id);
  words_.push_back(std::move(node));
  neighbours_.emplace_back();
  word_units_.emplace_back();
  return words_.back().id;
}

KnowledgeId Network::add_knowledge_unit(const UnitInput& unit) {
  if (unit.words.empty()) {
    throw Error(ErrorCode::kEmptyUnit, "knowledge unit has no content words: " + unit.text,
                unit.text);
  }
  auto key = std::make_pair(unit.source, canonical_unit_text(unit.text));
  if (auto it = knowledge_index_.find(key); it != knowledge_index_.end()) return it->second;

  KnowledgeEntry entry;
  entry.id = static_cast<KnowledgeId>(knowledge_.size() + 1);
  entry.text = unit.text;
  entry.source = unit.source;
  for (const UnitWord& w : unit.words) {
    WordId id = intern_word(w.surface, w.pos, w.entity);
    auto at = std::find(entry.word_ids.begin(), entry.word_ids.end(), id);
    if (at == entry.word_ids.end()) {
      entry.word_ids.push_back(id);
      entry.cases.push_back(w.deep_case);
    } else if (w.deep_case == DeepCase::kAction) {
      entry.cases[static_cast<std::size_t>(at - entry.word_ids.begin())] = DeepCase::kAction;
    }
  }
  connect(entry);
  knowledge_index_.emplace(std::move(key), entry.id);
  knowledge_.push_back(std::move(entry));
  return knowledge_.back().id;
}

void Network::connect(const KnowledgeEntry& entry) {
  for (WordId w : entry.word_ids) word_units_[w - 1].push_back(entry.id);
  for (std::size_t i = 0; i < entry.word_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < entry.word_ids.size(); ++j) {
      WordId a = std::min(entry.word_ids[i], entry.word_ids[j]);
      WordId b = std::max(entry.word_ids[i], entry.word_ids[j]);
      Link& link = links_[{a, b}];
      link.a = a;
      link.b = b;
      link.knowledge_ids.insert(entry.id);
      neighbours_[a - 1].insert(b);
      neighbours_[b - 1].insert(a);
    }
  }
}

std::vector<KnowledgeId> Network::knowledge_containing(const std::set<WordId>& word_ids) const {
  std::vector<KnowledgeId> result;
  if (word_ids.empty()) {
    for (const KnowledgeEntry& e : knowledge_) result.push_back(e.id);
    return result;
  }
  for (WordId w : word_ids) {
    if (w == 0 || w > words_.size()) return result;
  }
  const WordId anchor = *word_ids.begin();
  if (word_ids.size() == 1) return word_units_[anchor - 1];

  // A unit holds every query word iff it labels each link (anchor, w).
  std::set<KnowledgeId> common;
  bool first = true;
  for (WordId w : word_ids) {
    if (w == anchor) continue;
    const Link* l = link(anchor, w);
    if (l == nullptr) return result;
    if (first) {
      common = l->knowledge_ids;
      first = false;
      continue;
    }
    std::set<KnowledgeId> narrowed;
    std::set_intersection(common.begin(), common.end(), l->knowledge_ids.begin(),
                          l->knowledge_ids.end(), std::inserter(narrowed, narrowed.end()));
    common = std::move(narrowed);
  }
  result.assign(common.begin(), common.end());
  return result;
}

std::vector<Link> Network::links_of(WordId word) const {
  if (word == 0 || word > words_.size()) {
    throw Error(ErrorCode::kUnknownWord, "unknown word id " + std::to_string(word),
                std::to_string(word));
  }
  std::vector<Link> result;
  for (WordId other : neighbours_[word - 1]) result.push_back(*link(word, other));
  return result;
}

NetworkStats Network::stats() const {
  NetworkStats s;
  s.words = words_.size();
  s.knowledge_units = knowledge_.size();
  s.links = links_.size();
  for (const auto& [pair, l] : links_) s.total_link_weight += l.weight();
  return s;
}

std::optional<WordId> Network::find_word(std::string_view surface) const {
  auto it = word_index_.find(fold_case(surface));
  if (it == word_index_.end()) return std::nullopt;
  return it->second;
}

const WordNode& Network::word(WordId id) const { return words_.at(id - 1); }

const KnowledgeEntry& Network::knowledge(KnowledgeId id) const { return knowledge_.at(id - 1); }

const Link* Network::link(WordId a, WordId b) const {
  auto it = links_.find({std::min(a, b), std::max(a, b)});
  return it == links_.end() ? nullptr : &it->second;
}

const std::vector<KnowledgeId>& Network::units_of(WordId word) const {
  return word_units_.at(word - 1);
}

bool Network::operator==(const Network& other) const {
  return words_ == other.words_ && knowledge_ == other.knowledge_ && links_ == other.links_;
}

Network Network::from_records(std::vector<WordNode> words, std::vector<KnowledgeEntry> knowledge) {
  Network net;
  for (std::size_t i = 0; i < words.size(); ++i) {
    WordNode& w = words[i];
    if (w.id != i + 1) {
      throw std::invalid_argument("word ids not contiguous at id " + std::to_string(w.id));
    }
    if (w.canonical.empty() || w.canonical != fold_case(w.canonical)) {
      throw std::invalid_argument("word " + std::to_string(w.id) + " has bad canonical form");
    }
    if (!net.word_index_.emplace(w.canonical, w.id).second) {
      throw std::invalid_argument("duplicate word '" + w.canonical + "'");
    }
    net.words_.push_back(std::move(w));
    net.neighbours_.emplace_back();
    net.word_units_.emplace_back();
  }
  for (std::size_t i = 0; i < knowledge.size(); ++i) {
    KnowledgeEntry& k = knowledge[i];
    const std::string name = "knowledge K" + std::to_string(k.id);
    if (k.id != i + 1) throw std::invalid_argument("knowledge ids not contiguous at " + name);
    if (k.word_ids.empty()) throw std::invalid_argument(name + " has no words");
    if (k.cases.size() != k.word_ids.size()) {
      throw std::invalid_argument(name + " has mismatched case count");
    }
    std::set<WordId> seen;
    for (WordId w : k.word_ids) {
      if (w == 0 || w > net.words_.size()) {
        throw std::invalid_argument(name + " references missing word id " + std::to_string(w));
      }
      if (!seen.insert(w).second) {
        throw std::invalid_argument(name + " repeats word id " + std::to_string(w));
      }
    }
    auto key = std::make_pair(k.source, canonical_unit_text(k.text));
    if (!net.knowledge_index_.emplace(std::move(key), k.id).second) {
      throw std::invalid_argument(name + " duplicates an earlier unit");
    }
    net.connect(k);
    net.knowledge_.push_back(std::move(k));
  }
  return net;
}

}  // namespace dcqa
