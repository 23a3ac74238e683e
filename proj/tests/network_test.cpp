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

#include <doctest.h>

#include <random>

#include "dcqa/error.h"
#include "dcqa/pipeline.h"
#include "dcqa/resources.h"
#include "test_support.h"

namespace dcqa {
namespace {

Network gandhi() {
  Network net;
  ingest_document(net, testing::read_fixture("gandhi.txt"), "gandhi.txt", Resources::defaults());
  return net;
}

WordId id_of(const Network& net, std::string_view surface) {
  auto id = net.find_word(surface);
  REQUIRE(id.has_value());
  return *id;
}

UnitInput unit(std::string text, std::vector<std::string> words, std::string source = "t") {
  UnitInput in{std::move(text), std::move(source), {}};
  for (auto& w : words)
    in.words.push_back({std::move(w), PosTag::kNoun, EntityTag::kNone, DeepCase::kPatient});
  return in;
}

TEST_CASE("the Gandhi sentence builds the expected network") {
  Network net = gandhi();
  CHECK(net.stats() == NetworkStats{4, 2, 5, 6});

  const WordId gandhiji = id_of(net, "Gandhiji");
  const WordId born = id_of(net, "born");
  const WordId porbandar = id_of(net, "Porbandar");
  const WordId date = id_of(net, "2-Oct-1869");
  CHECK(gandhiji == 1);
  CHECK(born == 2);
  CHECK(porbandar == 3);
  CHECK(date == 4);
  CHECK(net.word(porbandar).entity == EntityTag::kLocation);
  CHECK(net.word(date).entity == EntityTag::kDate);
  CHECK(net.word(gandhiji).entity == EntityTag::kPerson);

  REQUIRE(net.link(gandhiji, born) != nullptr);
  CHECK(net.link(gandhiji, born)->knowledge_ids == std::set<KnowledgeId>{1, 2});
  CHECK(net.link(born, gandhiji)->weight() == 2);
  CHECK(net.link(gandhiji, porbandar)->knowledge_ids == std::set<KnowledgeId>{1});
  CHECK(net.link(born, porbandar)->knowledge_ids == std::set<KnowledgeId>{1});
  CHECK(net.link(gandhiji, date)->knowledge_ids == std::set<KnowledgeId>{2});
  CHECK(net.link(born, date)->knowledge_ids == std::set<KnowledgeId>{2});
  CHECK(net.link(porbandar, date) == nullptr);

  const KnowledgeEntry& k1 = net.knowledge(1);
  CHECK(k1.text == "Gandhiji was born in Porbandar");
  CHECK(k1.case_of(porbandar) == DeepCase::kLocation);
  CHECK(net.knowledge(2).case_of(date) == DeepCase::kTime);
}

TEST_CASE("interning is case-insensitive and idempotent") {
  Network net;
  const WordId a = net.intern_word("Delhi", PosTag::kNoun, EntityTag::kNone);
  CHECK(net.intern_word("DELHI", PosTag::kNoun, EntityTag::kLocation) == a);
  CHECK(net.intern_word("delhi", PosTag::kVerb, EntityTag::kPerson) == a);
  CHECK(net.words().size() == 1);
  CHECK(net.word(a).display == "Delhi");
  CHECK(net.word(a).canonical == "delhi");
  // entity only upgrades from None
  CHECK(net.word(a).entity == EntityTag::kLocation);
  CHECK(net.find_word("dElHi") == a);
  CHECK_FALSE(net.find_word("Mumbai").has_value());
}

TEST_CASE("re-adding a unit changes nothing") {
  Network net = gandhi();
  const Network before = net;
  IngestReport again = ingest_document(net, testing::read_fixture("gandhi.txt"), "gandhi.txt",
                                       Resources::defaults());
  CHECK(again.units == std::vector<KnowledgeId>{1, 2});
  CHECK(net == before);

  // the same text from another document is a distinct unit
  ingest_document(net, testing::read_fixture("gandhi.txt"), "copy.txt", Resources::defaults());
  CHECK(net.stats() == NetworkStats{4, 4, 5, 12});
}

TEST_CASE("single-word units and empty units") {
  Network net;
  net.add_knowledge_unit(unit("Spinach", {"spinach"}));
  CHECK(net.stats() == NetworkStats{1, 1, 0, 0});
  CHECK(net.links_of(1).empty());
  try {
    net.add_knowledge_unit(unit("", {}));
    FAIL("expected EmptyUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyUnit);
  }
  CHECK(net.stats() == NetworkStats{1, 1, 0, 0});
}

TEST_CASE("repeated words keep one entry") {
  Network net;
  UnitInput in = unit("eat eat", {"eat", "eat"});
  in.words[1].deep_case = DeepCase::kAction;
  const KnowledgeId k = net.add_knowledge_unit(in);
  CHECK(net.knowledge(k).word_ids.size() == 1);
  CHECK(net.knowledge(k).cases == std::vector<DeepCase>{DeepCase::kAction});
  CHECK(net.links().empty());
}

TEST_CASE("links_of and unknown words") {
  Network net = gandhi();
  auto links = net.links_of(id_of(net, "born"));
  REQUIRE(links.size() == 3);
  CHECK(links[0].other(2) == 1);
  CHECK(links[1].other(2) == 3);
  CHECK(links[2].other(2) == 4);
  try {
    net.links_of(99);
    FAIL("expected UnknownWord");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownWord);
  }
}

TEST_CASE("from_records rejects broken records") {
  Network net = gandhi();
  CHECK(Network::from_records(net.words(), net.knowledge_entries()) == net);

  auto words = net.words();
  auto knowledge = net.knowledge_entries();
  knowledge[0].word_ids.push_back(42);
  knowledge[0].cases.push_back(DeepCase::kPatient);
  CHECK_THROWS_AS(Network::from_records(words, knowledge), std::invalid_argument);

  knowledge = net.knowledge_entries();
  knowledge[1].cases.pop_back();
  CHECK_THROWS_AS(Network::from_records(words, knowledge), std::invalid_argument);

  words[0].canonical = "born";
  CHECK_THROWS_AS(Network::from_records(words, net.knowledge_entries()), std::invalid_argument);
}

TEST_CASE("network invariants on random corpora") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    Network net = testing::random_network(rng);
    const auto& words = net.words();

    // each link's weight is the co-occurrence count, and every co-occurring
    // pair has a link
    std::size_t expected_links = 0;
    for (std::size_t i = 1; i <= words.size(); ++i) {
      for (std::size_t j = i + 1; j <= words.size(); ++j) {
        const std::size_t n = testing::brute_force_cooccurrence(net, i, j);
        const Link* l = net.link(i, j);
        if (n == 0) {
          CHECK(l == nullptr);
        } else {
          REQUIRE(l != nullptr);
          CHECK(l->weight() == n);
          ++expected_links;
        }
      }
    }
    CHECK(net.links().size() == expected_links);

    // total weight equals the sum over units of C(n, 2)
    std::size_t pairs = 0;
    for (const KnowledgeEntry& k : net.knowledge_entries()) {
      pairs += k.word_ids.size() * (k.word_ids.size() - 1) / 2;
      for (WordId w : k.word_ids) CHECK((w >= 1 && w <= words.size()));
    }
    CHECK(net.stats().total_link_weight == pairs);

    for (const auto& [key, link] : net.links()) {
      CHECK(key.first < key.second);
      for (KnowledgeId k : link.knowledge_ids) {
        CHECK(net.knowledge(k).contains(link.a));
        CHECK(net.knowledge(k).contains(link.b));
      }
    }

    // degree agrees with a brute-force neighbour count
    for (const WordNode& w : words) {
      std::set<WordId> neighbours;
      for (const KnowledgeEntry& k : net.knowledge_entries()) {
        if (!k.contains(w.id)) continue;
        for (WordId o : k.word_ids) {
          if (o != w.id) neighbours.insert(o);
        }
      }
      CHECK(net.links_of(w.id).size() == neighbours.size());
    }
  }
}

TEST_CASE("knowledge_containing matches brute force and shrinks with more words") {
  std::mt19937 rng(23);
  for (int round = 0; round < 300; ++round) {
    Network net = testing::random_network(rng);
    std::set<WordId> query;
    std::vector<KnowledgeId> previous = net.knowledge_containing(query);
    CHECK(previous.size() == net.knowledge_entries().size());
    const int extra = testing::uniform(rng, 1, 4);
    for (int i = 0; i < extra; ++i) {
      query.insert(testing::uniform(rng, 1, static_cast<int>(net.words().size())));
      std::vector<KnowledgeId> found = net.knowledge_containing(query);
      CHECK(found == testing::brute_force_containing(net, query));
      CHECK(std::includes(previous.begin(), previous.end(), found.begin(), found.end()));
      previous = found;
    }
  }
}

}  // namespace
}  // namespace dcqa
