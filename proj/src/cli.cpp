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

#include "dcqa/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dcqa/error.h"
#include "dcqa/persistence.h"
#include "dcqa/pipeline.h"
#include "dcqa/resources.h"

namespace dcqa::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kChainSeparator = " ⇐ ";  // ⇐

struct Config {
  std::string store_path;
  ResourcePaths resource_paths;
  int max_hops = kDefaultMaxHops;
  bool trace = false;
  std::string output = "plain";

  bool structured() const { return output == "structured"; }
};

std::string word_label(WordId id) { return "ID" + std::to_string(id); }
std::string knowledge_label(KnowledgeId id) { return "K" + std::to_string(id); }

std::string render_table(const std::string& title, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(widths[c] - cells[c].size() + 2, ' ');
    }
    out << text << "\n";
  };
  out << title << "\n";
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : widths) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

// Distinct cases of a word across all units, in first-seen order.
std::vector<DeepCase> cases_seen(const Network& net, WordId id) {
  std::vector<DeepCase> cases;
  for (KnowledgeId k : net.units_of(id)) {
    DeepCase c = *net.knowledge(k).case_of(id);
    if (std::find(cases.begin(), cases.end(), c) == cases.end()) cases.push_back(c);
  }
  return cases;
}

std::vector<WordType> types_seen(const Network& net, const WordNode& w) {
  std::vector<WordType> types;
  for (DeepCase c : cases_seen(net, w.id)) {
    WordType t = word_type_for_case(c, w.entity);
    if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
  }
  return types;
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, const std::string& sep, F name) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += name(items[i]);
  }
  return out;
}

// One row per (word pair, knowledge unit) membership, by unit then pair.
std::vector<std::vector<std::string>> membership_rows(const Network& net,
                                                      const std::vector<KnowledgeId>& units,
                                                      bool with_weight) {
  std::vector<std::vector<std::string>> rows;
  for (KnowledgeId k : units) {
    std::vector<WordId> ids = net.knowledge(k).word_ids;
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        std::vector<std::string> row = {word_label(ids[i]), word_label(ids[j]), knowledge_label(k)};
        if (with_weight) row.push_back(std::to_string(net.link(ids[i], ids[j])->weight()));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string stage_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoInterrogative:
    case ErrorCode::kNoContentWords:
    case ErrorCode::kUnknownInterrogative:
      return "question analysis";
    case ErrorCode::kUnknownWord:
      return "search";
    case ErrorCode::kNoCaseMatch:
      return "case filter";
    case ErrorCode::kNoPathFound:
      return "multi-hop search";
    default:
      return "store";
  }
}

json trace_json(const Answer& a, const Network& net) {
  const Trace& t = a.trace;
  json resolved = json::array();
  for (const ResolvedWord& r : t.resolved)
    resolved.push_back({{"surface", r.surface}, {"id", r.id}});
  json candidates = json::array();
  for (const Candidate& c : t.candidates) {
    json match = nullptr;
    if (c.case_match) {
      match = {{"word", c.case_match->word},
               {"surface", net.word(c.case_match->word).display},
               {"case", case_name(c.case_match->deep_case)}};
    }
    candidates.push_back({{"knowledge", c.knowledge},
                          {"matched_word_ids", c.matched_word_ids},
                          {"case_match", match}});
  }
  json required = json::array();
  for (DeepCase c : t.question.required_cases) required.push_back(case_name(c));
  return {{"interrogative", t.question.interrogative},
          {"content_words", t.question.content_words},
          {"required_cases", required},
          {"resolved", resolved},
          {"candidates", candidates},
          {"route", t.route},
          {"fallback_reason", t.fallback_reason},
          {"chain", t.chain}};
}

class Session {
 public:
  Session(const Config& config, Network net, Resources resources)
      : config_(config),
        net_(std::move(net)),
        resources_(std::move(resources)),
        trace_(config.trace) {}

  void set_trace(bool on) { trace_ = on; }
  bool trace() const { return trace_; }

  int ask(const std::string& question, std::ostream& out, std::ostream& err) const {
    try {
      Answer a = answer(question, net_, resources_, config_.max_hops);
      std::string joined;
      for (std::size_t i = 0; i < a.texts.size(); ++i) {
        joined += (i ? kChainSeparator : "") + a.texts[i];
      }
      if (config_.structured()) {
        json record = {{"command", "ask"},
                       {"question", question},
                       {"ok", true},
                       {"answer", joined},
                       {"texts", a.texts},
                       {"answer_word", a.answer_word ? json(*a.answer_word) : json(nullptr)},
                       {"hops", a.hops},
                       {"units", a.units}};
        if (trace_) record["trace"] = trace_json(a, net_);
        out << record.dump() << "\n";
      } else {
        if (trace_) out << render_trace(a, net_) << "\n";
        out << joined << "\n";
      }
      return kExitOk;
    } catch (const Error& e) {
      if (config_.structured()) {
        json record = {{"command", "ask"},
                       {"question", question},
                       {"ok", false},
                       {"error", error_name(e.code())},
                       {"stage", stage_of(e.code())},
                       {"message", e.what()}};
        out << record.dump() << "\n";
      } else {
        err << "error: " << stage_of(e.code()) << ": " << error_name(e.code()) << ": " << e.what()
            << "\n";
      }
      return kExitNoAnswer;
    }
  }

 private:
  const Config& config_;
  Network net_;
  Resources resources_;
  bool trace_;
};

std::string read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Network load_existing(const Config& config) {
  if (!std::filesystem::exists(config.store_path)) {
    throw Error(ErrorCode::kIoError, "store not found: " + config.store_path, config.store_path);
  }
  return load(config.store_path);
}

int cmd_ingest(const Config& config, const std::vector<std::string>& files, Streams io) {
  const Resources resources = load_resources(config.resource_paths);
  Network net = std::filesystem::exists(config.store_path) ? load(config.store_path) : Network{};
  const NetworkStats before = net.stats();

  std::size_t sentences = 0;
  std::size_t parsed = 0;
  std::size_t skipped = 0;
  for (const std::string& file : files) {
    const std::string text = read_document(file);
    const std::string source = std::filesystem::path(file).filename().string();
    IngestReport report = ingest_document(net, text, source, resources);
    for (const std::string& d : report.diagnostics) io.err << "warning: " << d << "\n";
    if (report.parsed == 0) io.err << "warning: " << file << ": no parsable sentences\n";
    sentences += report.sentences;
    parsed += report.parsed;
    skipped += report.sentences - report.parsed;
  }
  if (parsed == 0) {
    io.err << "error: no parsable sentences in input\n";
    return kExitNothingIngested;
  }

  const NetworkStats after = net.stats();
  if (!(after == before)) save(net, config.store_path);
  const std::size_t words = after.words - before.words;
  const std::size_t units = after.knowledge_units - before.knowledge_units;
  const std::size_t links = after.links - before.links;
  if (config.structured()) {
    json record = {{"command", "ingest"},       {"words", words},
                   {"knowledge_units", units},  {"links", links},
                   {"sentences", sentences},    {"skipped", skipped},
                   {"store", config.store_path}};
    io.out << record.dump() << "\n";
  } else {
    io.out << words << " words, " << units << " knowledge units, " << links << " links\n";
  }
  return kExitOk;
}

int cmd_repl(Session& session, Streams io) {
  std::string line;
  while (true) {
    if (io.interactive) io.out << "dcqa> " << std::flush;
    if (!std::getline(io.in, line)) break;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line.front() != ':') {
      session.ask(line, io.out, io.err);
      continue;
    }
    if (line == ":quit" || line == ":exit") break;
    if (line == ":trace on") {
      session.set_trace(true);
    } else if (line == ":trace off") {
      session.set_trace(false);
    } else if (line == ":help") {
      io.out << "Type a question, or :trace on|off, :quit\n";
    } else {
      io.err << "error: unknown command " << line << "\n";
    }
  }
  return kExitOk;
}

int cmd_inspect(const Config& config, Streams io) {
  const Network net = load_existing(config);
  if (!config.structured()) {
    io.out << render_inspect(net);
    return kExitOk;
  }
  json words = json::array();
  for (const WordNode& w : net.words()) {
    json types = json::array();
    for (WordType t : types_seen(net, w)) types.push_back(word_type_name(t));
    json cases = json::array();
    for (DeepCase c : cases_seen(net, w.id)) cases.push_back(case_name(c));
    words.push_back({{"id", w.id}, {"word", w.display}, {"word_types", types}, {"cases", cases}});
  }
  json knowledge = json::array();
  json assignments = json::array();
  for (const KnowledgeEntry& k : net.knowledge_entries()) {
    knowledge.push_back({{"id", k.id}, {"text", k.text}});
    for (std::size_t i = 0; i < k.word_ids.size(); ++i) {
      assignments.push_back(
          {{"knowledge", k.id}, {"word", k.word_ids[i]}, {"case", case_name(k.cases[i])}});
    }
  }
  json links = json::array();
  for (const KnowledgeEntry& k : net.knowledge_entries()) {
    std::vector<WordId> ids = k.word_ids;
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        links.push_back({{"first", ids[i]},
                         {"second", ids[j]},
                         {"knowledge", k.id},
                         {"weight", net.link(ids[i], ids[j])->weight()}});
      }
    }
  }
  json record = {{"command", "inspect"},
                 {"words", words},
                 {"knowledge", knowledge},
                 {"cases", assignments},
                 {"links", links}};
  io.out << record.dump() << "\n";
  return kExitOk;
}

int cmd_export_dot(const Config& config, const std::string& out_path, Streams io) {
  const Network net = load_existing(config);
  const std::string dot = render_dot(net);
  if (out_path.empty()) {
    io.out << dot;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << dot))
    throw Error(ErrorCode::kIoError, "cannot write " + out_path, out_path);
  if (config.structured()) {
    json record = {{"command", "export-dot"},
                   {"path", out_path},
                   {"nodes", net.words().size()},
                   {"edges", net.links().size()}};
    io.out << record.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

std::string render_inspect(const Network& net) {
  std::vector<std::vector<std::string>> words;
  for (const WordNode& w : net.words()) {
    words.push_back(
        {word_label(w.id), w.display,
         join(types_seen(net, w), ",", [](WordType t) { return std::string(word_type_name(t)); }),
         join(cases_seen(net, w.id), ",", [](DeepCase c) { return std::string(case_name(c)); })});
  }
  std::vector<std::vector<std::string>> knowledge;
  std::vector<std::vector<std::string>> cases;
  std::vector<KnowledgeId> ids;
  for (const KnowledgeEntry& k : net.knowledge_entries()) {
    knowledge.push_back({knowledge_label(k.id), k.text});
    ids.push_back(k.id);
    for (std::size_t i = 0; i < k.word_ids.size(); ++i) {
      cases.push_back({knowledge_label(k.id), word_label(k.word_ids[i]),
                       net.word(k.word_ids[i]).display, std::string(case_name(k.cases[i]))});
    }
  }
  std::string out;
  out += render_table("Words", {"ID", "Word", "Word type", "Deep cases"}, words);
  out += "\n";
  out += render_table("Knowledge", {"Knowledge ID", "Knowledge"}, knowledge);
  out += "\n";
  out += render_table("Deep cases", {"Knowledge ID", "ID", "Word", "Deep case"}, cases);
  out += "\n";
  out += render_table("Links", {"First Word", "Second Word", "Knowledge ID", "Weight"},
                      membership_rows(net, ids, true));
  return out;
}

std::string render_dot(const Network& net) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph dcqa {\n";
  for (const WordNode& w : net.words()) {
    std::string label =
        w.display + " (" +
        join(cases_seen(net, w.id), ", ", [](DeepCase c) { return std::string(case_name(c)); }) +
        ")";
    out << "  w" << w.id << " [label=" << quote(label) << "];\n";
  }
  for (const auto& [pair, l] : net.links()) {
    std::string label;
    for (KnowledgeId k : l.knowledge_ids) label += (label.empty() ? "" : ",") + knowledge_label(k);
    out << "  w" << l.a << " -- w" << l.b << " [label=" << quote(label) << ", weight=" << l.weight()
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_trace(const Answer& a, const Network& net) {
  const Trace& t = a.trace;
  std::vector<std::vector<std::string>> words;
  for (const std::string& w : t.question.content_words) words.push_back({w});
  words.push_back({t.question.interrogative});

  std::vector<KnowledgeId> candidate_ids;
  for (const Candidate& c : t.candidates) candidate_ids.push_back(c.knowledge);

  std::ostringstream out;
  out << render_table("Question words", {"Words"}, words) << "\n";
  if (!t.resolved.empty()) {
    std::vector<std::vector<std::string>> resolved;
    for (const ResolvedWord& r : t.resolved) resolved.push_back({r.surface, word_label(r.id)});
    out << render_table("Resolved words", {"Word", "ID"}, resolved) << "\n";
  }
  out << render_table("Candidate knowledge", {"First Word", "Second Word", "Knowledge ID"},
                      membership_rows(net, candidate_ids, false))
      << "\n";

  out << "Case filter (required: " << join(t.question.required_cases, ", ", [](DeepCase c) {
    return std::string(case_name(c));
  }) << ")\n";
  for (const Candidate& c : t.candidates) {
    out << "  " << knowledge_label(c.knowledge) << ": ";
    if (c.case_match) {
      out << "answers " << t.question.interrogative << " (" << net.word(c.case_match->word).display
          << ": " << case_name(c.case_match->deep_case) << ")\n";
    } else {
      out << "no required case\n";
    }
  }
  if (t.candidates.empty()) out << "  no unit contains all question words\n";
  out << "Route: " << t.route;
  if (!t.fallback_reason.empty()) out << " (" << t.fallback_reason << ")";
  out << "\n";
  out << "Selected: " << join(t.chain, " -> ", [](KnowledgeId k) { return knowledge_label(k); })
      << " (" << a.hops << (a.hops == 1 ? " hop" : " hops") << ")\n";
  return out.str();
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Document-grounded question answering over a word/knowledge network", "dcqa"};
  app.set_version_flag("--version", std::string("dcqa ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--store", config.store_path,
                 "Network store (" + std::string(kStoreExtension) + ")")
      ->envname("DCQA_STORE");
  app.add_option("--lexicon", config.resource_paths.lexicon, "POS lexicon override");
  app.add_option("--gazetteer", config.resource_paths.gazetteer, "Entity gazetteer override");
  app.add_option("--stopwords", config.resource_paths.stopwords, "Stopword list override");
  app.add_option("--interrogatives", config.resource_paths.interrogatives,
                 "Interrogative to deep-case table override");
  app.add_option("--max-hops", config.max_hops, "Longest multi-hop chain")
      ->check(CLI::Range(1, 16));
  app.add_flag("--trace", config.trace, "Print the answer derivation");
  app.add_option("--output", config.output, "Output mode")
      ->check(CLI::IsMember({"plain", "structured"}));

  std::vector<std::string> files;
  auto* ingest = app.add_subcommand("ingest", "Learn documents into the store");
  ingest->add_option("files", files, "Plain UTF-8 text documents")->required();

  std::vector<std::string> question_words;
  auto* ask = app.add_subcommand("ask", "Answer one question");
  ask->add_option("question", question_words, "Question text")->required();

  auto* repl = app.add_subcommand("repl", "Answer questions read line by line");

  auto* inspect = app.add_subcommand("inspect", "Print the network as tables");

  std::string dot_path;
  auto* export_dot = app.add_subcommand("export-dot", "Write the word graph in Graphviz format");
  export_dot->add_option("--out", dot_path, "Output file (default: stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, io.out, io.err);
  }

  if (config.store_path.empty()) {
    io.err << "error: no store given (use --store or DCQA_STORE)\n";
    return kExitIo;
  }

  try {
    if (*ingest) return cmd_ingest(config, files, io);
    if (*inspect) return cmd_inspect(config, io);
    if (*export_dot) return cmd_export_dot(config, dot_path, io);

    Session session(config, load_existing(config), load_resources(config.resource_paths));
    if (*repl) return cmd_repl(session, io);
    std::string question;
    for (const std::string& w : question_words) question += (question.empty() ? "" : " ") + w;
    return session.ask(question, io.out, io.err);
  } catch (const Error& e) {
    if (config.structured()) {
      json record = {{"ok", false}, {"error", error_name(e.code())}, {"message", e.what()}};
      io.out << record.dump() << "\n";
    } else {
      io.err << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
    }
    return kExitIo;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace dcqa::cli
