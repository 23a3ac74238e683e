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

#include "dcqa/qa_engine.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "dcqa/error.h"

namespace dcqa {
namespace {

std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Resolves every content word it can, in question order, without duplicates.
std::vector<ResolvedWord> resolve_all(const Question& q, const Network& net, bool strict) {
  std::vector<ResolvedWord> resolved;
  for (const std::string& word : q.content_words) {
    std::optional<WordId> id = resolve_word(net, word);
    if (!id) {
      if (strict) throw Error(ErrorCode::kUnknownWord, "unknown word: " + word, word);
      continue;
    }
    bool seen = std::any_of(resolved.begin(), resolved.end(),
                            [&](const ResolvedWord& r) { return r.id == *id; });
    if (!seen) resolved.push_back({word, *id});
  }
  return resolved;
}

std::vector<WordId> ids_of(const std::vector<ResolvedWord>& resolved) {
  std::vector<WordId> ids;
  for (const ResolvedWord& r : resolved) ids.push_back(r.id);
  return ids;
}

// Enumerates simple unit paths of one fixed length and keeps the best goal
// chain.
class ChainSearch {
 public:
  ChainSearch(const Network& net, const Question& q, std::vector<WordId> words)
      : net_(net), q_(q), words_(std::move(words)) {}

  bool run(std::size_t length) {
    length_ = length;
    found_ = false;
    for (KnowledgeId start : net_.units_of(words_.front())) {
      path_ = {start};
      extend(std::numeric_limits<std::size_t>::max());
    }
    return found_;
  }

  const std::vector<KnowledgeId>& best_path() const { return best_path_; }
  const CaseMatch& best_match() const { return best_match_; }

 private:
  const std::vector<KnowledgeId>& neighbours(KnowledgeId unit) {
    auto it = neighbour_cache_.find(unit);
    if (it != neighbour_cache_.end()) return it->second;
    std::vector<KnowledgeId> out;
    for (WordId w : net_.knowledge(unit).word_ids) {
      for (KnowledgeId other : net_.units_of(w)) {
        if (other != unit) out.push_back(other);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return neighbour_cache_.emplace(unit, std::move(out)).first->second;
  }

  void extend(std::size_t min_weight) {
    if (path_.size() == length_) {
      consider(min_weight);
      return;
    }
    const std::vector<KnowledgeId>& next = neighbours(path_.back());
    for (KnowledgeId unit : next) {
      if (std::find(path_.begin(), path_.end(), unit) != path_.end()) continue;
      std::size_t weight = hop_weight(net_, path_.back(), unit);
      path_.push_back(unit);
      extend(std::min(min_weight, weight));
      path_.pop_back();
    }
  }

  void consider(std::size_t min_weight) {
    const KnowledgeEntry& goal = net_.knowledge(path_.back());
    std::optional<CaseMatch> match = find_case_match(goal, q_.required_cases, words_);
    if (!match) return;
    for (WordId w : words_) {
      bool covered = std::any_of(path_.begin(), path_.end(),
                                 [&](KnowledgeId k) { return net_.knowledge(k).contains(w); });
      if (!covered) return;
    }
    // Smaller key wins: preference, then heavier weakest hop, then ids.
    auto key = std::make_tuple(match->preference,
                               std::numeric_limits<std::size_t>::max() - min_weight, path_);
    if (!found_ ||
        key < std::make_tuple(best_match_.preference,
                              std::numeric_limits<std::size_t>::max() - best_weight_, best_path_)) {
      found_ = true;
      best_path_ = path_;
      best_match_ = *match;
      best_weight_ = min_weight;
    }
  }

  const Network& net_;
  const Question& q_;
  std::vector<WordId> words_;
  std::size_t length_ = 0;
  std::vector<KnowledgeId> path_;
  bool found_ = false;
  std::vector<KnowledgeId> best_path_;
  CaseMatch best_match_;
  std::size_t best_weight_ = 0;
  std::map<KnowledgeId, std::vector<KnowledgeId>> neighbour_cache_;
};

}  // namespace

Question analyze_question(std::string_view text, const Resources& resources) {
  Question q;
  q.raw = trim_copy(text);
  std::vector<Token> tokens =
      analyze_sentence(RawSentence{q.raw, 0}, resources.lexicon, resources.gazetteer);

  std::optional<std::size_t> wh;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (resources.interrogatives.contains(fold_case(tokens[i].surface))) {
      wh = i;
      break;
    }
  }
  if (!wh) {
    throw Error(ErrorCode::kNoInterrogative, "no supported interrogative in: " + q.raw, q.raw);
  }
  q.interrogative = fold_case(tokens[*wh].surface);
  q.required_cases = cases_for_interrogative(q.interrogative, resources.interrogatives);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i == *wh || is_function_word(tokens[i], resources.stopwords)) continue;
    q.content_words.push_back(tokens[i].surface);
  }
  if (q.content_words.empty()) {
    throw Error(ErrorCode::kNoContentWords, "no content words in: " + q.raw, q.raw);
  }
  return q;
}

std::optional<WordId> resolve_word(const Network& net, std::string_view surface) {
  if (auto id = net.find_word(surface)) return id;
  const std::string w = fold_case(surface);
  std::vector<std::string> variants;
  if (ends_with(w, "ies") || ends_with(w, "ied"))
    variants.push_back(w.substr(0, w.size() - 3) + "y");
  if (ends_with(w, "es")) variants.push_back(w.substr(0, w.size() - 2));
  if (ends_with(w, "s")) variants.push_back(w.substr(0, w.size() - 1));
  if (ends_with(w, "ed")) variants.push_back(w.substr(0, w.size() - 2));
  if (ends_with(w, "d")) variants.push_back(w.substr(0, w.size() - 1));
  for (std::string_view suffix : {"s", "es", "ed", "d"})
    variants.push_back(w + std::string(suffix));
  if (ends_with(w, "y")) {
    variants.push_back(w.substr(0, w.size() - 1) + "ies");
    variants.push_back(w.substr(0, w.size() - 1) + "ied");
  }
  for (const std::string& v : variants) {
    if (auto id = net.find_word(v)) return id;
  }
  return std::nullopt;
}

std::optional<CaseMatch> find_case_match(const KnowledgeEntry& entry,
                                         const std::vector<DeepCase>& required_cases,
                                         const std::vector<WordId>& question_words) {
  auto asked = [&](WordId w) {
    return std::find(question_words.begin(), question_words.end(), w) != question_words.end();
  };
  for (std::size_t p = 0; p < required_cases.size(); ++p) {
    for (bool want_asked : {false, true}) {
      for (std::size_t i = 0; i < entry.word_ids.size(); ++i) {
        if (entry.cases[i] == required_cases[p] && asked(entry.word_ids[i]) == want_asked) {
          return CaseMatch{entry.word_ids[i], required_cases[p], p};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Candidate> search_direct(const Question& q, const Network& net) {
  const std::vector<WordId> ids = ids_of(resolve_all(q, net, /*strict=*/true));
  std::vector<WordId> sorted = ids;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Candidate> candidates;
  for (KnowledgeId k : net.knowledge_containing({ids.begin(), ids.end()})) {
    Candidate c;
    c.knowledge = k;
    c.matched_word_ids = sorted;
    c.case_match = find_case_match(net.knowledge(k), q.required_cases, ids);
    candidates.push_back(std::move(c));
  }
  return candidates;
}

Answer select_answer(const std::vector<Candidate>& candidates, const Question& q,
                     const Network& net) {
  const Candidate* best = nullptr;
  auto key = [](const Candidate& c) {
    return std::make_tuple(c.case_match->preference, -static_cast<long>(c.matched_word_ids.size()),
                           c.knowledge);
  };
  for (const Candidate& c : candidates) {
    if (!c.case_match) continue;
    if (best == nullptr || key(c) < key(*best)) best = &c;
  }
  if (best == nullptr) {
    std::string what = candidates.empty() ? "no unit contains all question words"
                                          : "no candidate unit answers '" + q.interrogative + "'";
    throw Error(ErrorCode::kNoCaseMatch, what, q.interrogative);
  }
  Answer a;
  a.texts = {net.knowledge(best->knowledge).text};
  a.answer_word = net.word(best->case_match->word).display;
  a.hops = 1;
  a.units = {best->knowledge};
  a.trace.question = q;
  a.trace.candidates = candidates;
  a.trace.route = "direct";
  a.trace.chain = a.units;
  return a;
}

std::size_t hop_weight(const Network& net, KnowledgeId from, KnowledgeId to) {
  const KnowledgeEntry& a = net.knowledge(from);
  const KnowledgeEntry& b = net.knowledge(to);
  std::vector<WordId> shared;
  for (WordId w : a.word_ids) {
    if (b.contains(w)) shared.push_back(w);
  }
  if (shared.size() <= 1) return shared.size();
  std::size_t best = 1;
  for (std::size_t i = 0; i < shared.size(); ++i) {
    for (std::size_t j = i + 1; j < shared.size(); ++j) {
      if (const Link* l = net.link(shared[i], shared[j])) best = std::max(best, l->weight());
    }
  }
  return best;
}

Answer answer_multi_hop(const Question& q, const Network& net, int max_hops) {
  std::vector<ResolvedWord> resolved = resolve_all(q, net, /*strict=*/false);
  if (resolved.empty()) {
    const std::string word = q.content_words.empty() ? std::string() : q.content_words.front();
    throw Error(ErrorCode::kUnknownWord, "unknown word: " + word, word);
  }
  ChainSearch search(net, q, ids_of(resolved));
  for (int length = 1; length <= max_hops; ++length) {
    if (!search.run(static_cast<std::size_t>(length))) continue;
    Answer a;
    a.units = search.best_path();
    for (KnowledgeId k : a.units) a.texts.push_back(net.knowledge(k).text);
    a.answer_word = net.word(search.best_match().word).display;
    a.hops = length;
    a.trace.question = q;
    a.trace.resolved = std::move(resolved);
    a.trace.route = "multi-hop";
    a.trace.chain = a.units;
    return a;
  }
  throw Error(ErrorCode::kNoPathFound,
              "no chain of at most " + std::to_string(max_hops) + " units answers '" +
                  q.interrogative + "'",
              q.interrogative);
}

Answer answer(std::string_view text, const Network& net, const Resources& resources, int max_hops) {
  const Question q = analyze_question(text, resources);
  const std::vector<Candidate> candidates = search_direct(q, net);
  const std::vector<ResolvedWord> resolved = resolve_all(q, net, /*strict=*/true);
  try {
    Answer a = select_answer(candidates, q, net);
    a.trace.resolved = resolved;
    return a;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoCaseMatch || max_hops < 2) throw;
    Answer a = answer_multi_hop(q, net, max_hops);
    a.trace.resolved = resolved;
    a.trace.candidates = candidates;
    a.trace.fallback_reason = e.what();
    return a;
  }
}

}  // namespace dcqa
