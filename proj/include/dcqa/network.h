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

#ifndef DCQA_NETWORK_H_
#define DCQA_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcqa/deep_case.h"
#include "dcqa/text_analysis.h"

namespace dcqa {

using WordId = std::uint32_t;
using KnowledgeId = std::uint32_t;

// Interned content word ("neuron"). Ids start at 1.
struct WordNode {
  WordId id = 0;
  std::string canonical;  // case-folded
  std::string display;    // casing of first occurrence
  PosTag pos = PosTag::kNoun;
  EntityTag entity = EntityTag::kNone;

  bool operator==(const WordNode&) const = default;
};

struct KnowledgeEntry {
  KnowledgeId id = 0;
  std::string text;
  std::string source;
  std::vector<WordId> word_ids;  // unit order, no duplicates
  std::vector<DeepCase> cases;   // parallel to word_ids

  std::optional<DeepCase> case_of(WordId word) const;
  bool contains(WordId word) const;
  bool operator==(const KnowledgeEntry&) const = default;
};

// Unordered word pair (a < b) and the knowledge units relating them.
struct Link {
  WordId a = 0;
  WordId b = 0;
  std::set<KnowledgeId> knowledge_ids;

  std::size_t weight() const { return knowledge_ids.size(); }
  WordId other(WordId w) const { return w == a ? b : a; }
  bool operator==(const Link&) const = default;
};

struct NetworkStats {
  std::size_t words = 0;
  std::size_t knowledge_units = 0;
  std::size_t links = 0;
  std::size_t total_link_weight = 0;

  bool operator==(const NetworkStats&) const = default;
};

// One content word occurrence handed to add_knowledge_unit.
struct UnitWord {
  std::string surface;
  PosTag pos = PosTag::kNoun;
  EntityTag entity = EntityTag::kNone;
  DeepCase deep_case = DeepCase::kPatient;
};

struct UnitInput {
  std::string text;
  std::string source;
  std::vector<UnitWord> words;
};

// Dedup key for knowledge text: case-folded, whitespace collapsed.
std::string canonical_unit_text(std::string_view text);

// Associative word/knowledge graph. Single writer; concurrent readers are safe
// while no mutation is in progress.
class Network {
 public:
  Network() = default;

  // Rebuilds a network from stored records and re-derives every link.
  // Throws std::invalid_argument describing the first violated invariant.
  static Network from_records(std::vector<WordNode> words, std::vector<KnowledgeEntry> knowledge);

  WordId intern_word(std::string_view surface, PosTag pos, EntityTag entity);

  // Returns the existing id when (source, canonical text) is already stored;
  // nothing changes in that case. Repeated words keep their first case unless
  // a later occurrence is the Action. Throws Error(kEmptyUnit).
  KnowledgeId add_knowledge_unit(const UnitInput& unit);

  // Units whose words are a superset of `word_ids`, ascending. The empty set
  // matches every unit.
  std::vector<KnowledgeId> knowledge_containing(const std::set<WordId>& word_ids) const;

  // Ordered by neighbour id. Throws Error(kUnknownWord).
  std::vector<Link> links_of(WordId word) const;

  NetworkStats stats() const;

  std::optional<WordId> find_word(std::string_view surface) const;
  const WordNode& word(WordId id) const;
  const KnowledgeEntry& knowledge(KnowledgeId id) const;
  const std::vector<WordNode>& words() const { return words_; }
  const std::vector<KnowledgeEntry>& knowledge_entries() const { return knowledge_; }
  const std::map<std::pair<WordId, WordId>, Link>& links() const { return links_; }
  const Link* link(WordId a, WordId b) const;
  // Units containing `word`, ascending.
  const std::vector<KnowledgeId>& units_of(WordId word) const;

  bool operator==(const Network& other) const;

 private:
  void connect(const KnowledgeEntry& entry);

  std::vector<WordNode> words_;  // words_[id - 1]
  std::unordered_map<std::string, WordId> word_index_;
  std::vector<KnowledgeEntry> knowledge_;  // knowledge_[id - 1]
  std::map<std::pair<std::string, std::string>, KnowledgeId> knowledge_index_;
  std::map<std::pair<WordId, WordId>, Link> links_;
  std::vector<std::set<WordId>> neighbours_;
  std::vector<std::vector<KnowledgeId>> word_units_;
};

}  // namespace dcqa

#endif  // DCQA_NETWORK_H_
