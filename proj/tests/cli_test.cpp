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

#include <doctest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "dcqa/persistence.h"
#include "test_support.h"

namespace dcqa::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "dcqa");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, {in, out, err, false});
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Workspace {
  fs::path dir;
  std::string store;
  Workspace() {
    static int counter = 0;
    dir = fs::temp_directory_path() /
          ("dcqa_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir);
    store = (dir / "net.dcqa.json").string();
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const std::string path = (dir / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
  Result ingest(const std::string& fixture) const {
    return run_cli({"--store", store, "ingest", testing::fixture_path(fixture)});
  }
};

std::string golden(const std::string& name) {
  return testing::read_file(testing::fixture_path("../golden/" + name));
}

TEST_CASE("ingest reports counts and is idempotent") {
  Workspace ws;
  Result first = ws.ingest("gandhi.txt");
  CHECK(first.code == kExitOk);
  CHECK(first.out == "4 words, 2 knowledge units, 5 links\n");
  const std::string stored = testing::read_file(ws.store);

  Result second = ws.ingest("gandhi.txt");
  CHECK(second.code == kExitOk);
  CHECK(second.out == "0 words, 0 knowledge units, 0 links\n");
  CHECK(testing::read_file(ws.store) == stored);
}

TEST_CASE("ingest failures") {
  Workspace ws;
  Result empty = run_cli({"--store", ws.store, "ingest", ws.write("empty.txt", "")});
  CHECK(empty.code == kExitNothingIngested);
  CHECK_FALSE(fs::exists(ws.store));

  Result verbless = run_cli({"--store", ws.store, "ingest", ws.write("v.txt", "In Porbandar.")});
  CHECK(verbless.code == kExitNothingIngested);
  CHECK(verbless.err.find("NoVerbFound") != std::string::npos);

  Result missing = run_cli({"--store", ws.store, "ingest", ws.write("ok.txt", "") + ".nope"});
  CHECK(missing.code == kExitIo);

  Result no_store = run_cli({"ingest", testing::fixture_path("gandhi.txt")});
  CHECK(no_store.code == kExitIo);
}

TEST_CASE("ask answers and fails with stable exit codes") {
  Workspace ws;
  ws.ingest("gandhi.txt");
  Result where = run_cli({"--store", ws.store, "ask", "Where was Gandhiji born?"});
  CHECK(where.code == kExitOk);
  CHECK(where.out == "Gandhiji was born in Porbandar\n");

  // unquoted words are joined
  Result when = run_cli({"--store", ws.store, "ask", "When", "was", "Gandhiji", "born?"});
  CHECK(when.out == "Gandhiji was born on 2-Oct-1869\n");

  Result unknown = run_cli({"--store", ws.store, "ask", "Where was Einstein born?"});
  CHECK(unknown.code == kExitNoAnswer);
  CHECK(unknown.err == "error: search: UnknownWord: unknown word: Einstein\n");

  Result no_wh = run_cli({"--store", ws.store, "ask", "Gandhiji was born"});
  CHECK(no_wh.code == kExitNoAnswer);
  CHECK(no_wh.err.find("question analysis: NoInterrogative") != std::string::npos);

  Result no_store = run_cli({"--store", (ws.dir / "none.dcqa.json").string(), "ask", "Where?"});
  CHECK(no_store.code == kExitIo);
}

TEST_CASE("queries never rewrite the store") {
  Workspace ws;
  ws.ingest("gandhi.txt");
  const auto stamp = fs::last_write_time(ws.store);
  const std::string bytes = testing::read_file(ws.store);
  run_cli({"--store", ws.store, "ask", "Where was Gandhiji born?"});
  run_cli({"--store", ws.store, "inspect"});
  CHECK(fs::last_write_time(ws.store) == stamp);
  CHECK(testing::read_file(ws.store) == bytes);
}

TEST_CASE("multi-hop answers join the chain") {
  Workspace ws;
  ws.ingest("rahim.txt");
  Result r = run_cli({"--store", ws.store, "ask", "Where does Rahim live?"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Rahim is the brother of Karim \xE2\x87\x90 Karim lives in Porbandar\n");
  Result capped =
      run_cli({"--store", ws.store, "--max-hops", "1", "ask", "Where does Rahim live?"});
  CHECK(capped.code == kExitNoAnswer);
  CHECK(capped.err.find("NoCaseMatch") != std::string::npos);
}

TEST_CASE("trace and inspect match the golden tables") {
  Workspace ws;
  ws.ingest("gandhi.txt");
  CHECK(run_cli({"--store", ws.store, "inspect"}).out == golden("gandhi_inspect.txt"));
  CHECK(run_cli({"--store", ws.store, "--trace", "ask", "Where was Gandhiji born?"}).out ==
        golden("gandhi_trace_where.txt"));
  CHECK(run_cli({"--store", ws.store, "export-dot"}).out == golden("gandhi.dot"));
}

TEST_CASE("inspect and export-dot on an empty store") {
  Workspace ws;
  save(Network{}, ws.store);
  Result r = run_cli({"--store", ws.store, "inspect"});
  CHECK(r.code == kExitOk);
  for (const char* header : {"Words\n", "Knowledge\n", "Deep cases\n", "Links\n"}) {
    CHECK(r.out.find(header) != std::string::npos);
  }
  CHECK(run_cli({"--store", ws.store, "export-dot"}).out == "graph dcqa {\n}\n");
}

// Rows after the Links heading and its two header lines.
std::size_t link_rows(const std::string& inspect) {
  std::istringstream in(inspect.substr(inspect.find("\nLinks\n") + 7));
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) rows += !line.empty();
  return rows;
}

TEST_CASE("link table and DOT edges agree with the network") {
  std::mt19937 rng(83);
  for (int round = 0; round < 30; ++round) {
    Workspace ws;
    Network net = testing::random_network(rng);
    save(net, ws.store);

    std::size_t memberships = 0;
    for (const KnowledgeEntry& k : net.knowledge_entries()) {
      memberships += k.word_ids.size() * (k.word_ids.size() - 1) / 2;
    }
    CHECK(link_rows(run_cli({"--store", ws.store, "inspect"}).out) == memberships);

    const std::string dot_path = (ws.dir / "g.dot").string();
    CHECK(run_cli({"--store", ws.store, "export-dot", "--out", dot_path}).code == kExitOk);
    const std::string dot = testing::read_file(dot_path);
    std::map<std::pair<WordId, WordId>, std::set<KnowledgeId>> edges;
    const std::regex edge(R"re(  w(\d+) -- w(\d+) \[label="([^"]*)", weight=(\d+)\];)re");
    for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it) {
      std::set<KnowledgeId> ids;
      std::istringstream labels((*it)[3].str());
      for (std::string part; std::getline(labels, part, ',');)
        ids.insert(std::stoul(part.substr(1)));
      CHECK(ids.size() == std::stoul((*it)[4].str()));
      edges[{std::stoul((*it)[1].str()), std::stoul((*it)[2].str())}] = ids;
    }
    std::map<std::pair<WordId, WordId>, std::set<KnowledgeId>> expected;
    for (const auto& [key, link] : net.links()) expected[key] = link.knowledge_ids;
    CHECK(edges == expected);
  }
}

TEST_CASE("REPL answers match one-shot asks") {
  Workspace ws;
  ws.ingest("gandhi.txt");
  ws.ingest("rahim.txt");

  const std::vector<std::string> wh = {"Where", "When", "Who", "What", "How"};
  const std::vector<std::string> rest = {"was Gandhiji born?",
                                         "does Rahim live?",
                                         "is Karim?",
                                         "lives in Porbandar?",
                                         "was born on 2nd October 1869?",
                                         "is the brother of Karim?",
                                         "was Einstein born?",
                                         "Gandhiji",
                                         "is",
                                         "born in Porbandar?"};
  std::vector<std::string> questions;
  for (const std::string& r : rest) {
    for (const std::string& w : wh) questions.push_back(w + " " + r);
  }
  while (questions.size() < 98) questions.push_back(questions[questions.size() % 50]);
  questions.push_back("Gandhiji was born");
  questions.push_back("Why was Gandhiji born?");
  REQUIRE(questions.size() == 100);

  std::string script;
  std::string expected_out;
  std::string expected_err;
  for (const std::string& q : questions) {
    script += q + "\n\n";
    Result one = run_cli({"--store", ws.store, "ask", q});
    expected_out += one.out;
    expected_err += one.err;
  }
  Result session =
      run_cli({"--store", ws.store, "repl"}, script + ":quit\nWhere was Gandhiji born?\n");
  CHECK(session.code == kExitOk);
  CHECK(session.out == expected_out);
  CHECK(session.err == expected_err);
}

TEST_CASE("REPL commands") {
  Workspace ws;
  ws.ingest("gandhi.txt");
  Result r = run_cli({"--store", ws.store, "repl"},
                     ":trace on\nWhere was Gandhiji born?\n:trace off\n:bogus\n"
                     "When was Gandhiji born?\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out == golden("gandhi_trace_where.txt") + "Gandhiji was born on 2-Oct-1869\n");
  CHECK(r.err == "error: unknown command :bogus\n");
}

TEST_CASE("structured output mirrors plain output") {
  Workspace ws;
  Result ingest = run_cli({"--store", ws.store, "--output", "structured", "ingest",
                           testing::fixture_path("gandhi.txt")});
  auto record = nlohmann::json::parse(ingest.out);
  CHECK(record["words"] == 4);
  CHECK(record["knowledge_units"] == 2);
  CHECK(record["links"] == 5);

  Result ask = run_cli({"--store", ws.store, "--output", "structured", "--trace", "ask",
                        "Where was Gandhiji born?"});
  auto answer = nlohmann::json::parse(ask.out);
  CHECK(answer["ok"] == true);
  CHECK(answer["answer"] == "Gandhiji was born in Porbandar");
  CHECK(answer["answer_word"] == "Porbandar");
  CHECK(answer["trace"]["route"] == "direct");
  CHECK(answer["trace"]["required_cases"] == nlohmann::json::array({"Location"}));

  Result fail =
      run_cli({"--store", ws.store, "--output", "structured", "ask", "Where was Einstein born?"});
  CHECK(fail.code == kExitNoAnswer);
  auto error = nlohmann::json::parse(fail.out);
  CHECK(error["error"] == "UnknownWord");
  CHECK(error["stage"] == "search");

  auto inspect = nlohmann::json::parse(
      run_cli({"--store", ws.store, "--output", "structured", "inspect"}).out);
  CHECK(inspect["words"].size() == 4);
  CHECK(inspect["links"].size() == 6);
}

TEST_CASE("store path from the environment") {
  Workspace ws;
  ::setenv("DCQA_STORE", ws.store.c_str(), 1);
  Result ingest = run_cli({"ingest", testing::fixture_path("gandhi.txt")});
  Result ask = run_cli({"ask", "Where was Gandhiji born?"});
  ::unsetenv("DCQA_STORE");
  CHECK(ingest.code == kExitOk);
  CHECK(fs::exists(ws.store));
  CHECK(ask.out == "Gandhiji was born in Porbandar\n");
}

TEST_CASE("corrupt store exits with the I/O code") {
  Workspace ws;
  ws.ingest("gandhi.txt");
  const std::string text = testing::read_file(ws.store);
  ws.write("net.dcqa.json", text.substr(0, text.size() / 2));
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"ask", "Where was Gandhiji born?"},
        {"inspect"},
        {"export-dot"},
        {"ingest", testing::fixture_path("rahim.txt")}}) {
    std::vector<std::string> args = {"--store", ws.store};
    args.insert(args.end(), cmd.begin(), cmd.end());
    Result r = run_cli(args);
    CHECK(r.code == kExitIo);
    CHECK(r.err.find("CorruptStore") != std::string::npos);
  }
}

TEST_CASE("resource overrides") {
  Workspace ws;
  const std::string gaz = ws.write("gaz.tsv", "karim\tPerson\n");
  const std::string bad = ws.write("bad.tsv", "karim\tAlien\n");
  CHECK(run_cli(
            {"--store", ws.store, "--gazetteer", gaz, "ingest", testing::fixture_path("rahim.txt")})
            .code == kExitOk);
  CHECK(run_cli(
            {"--store", ws.store, "--gazetteer", bad, "ingest", testing::fixture_path("rahim.txt")})
            .code == kExitIo);
  CHECK(run_cli({"--store", ws.store, "--max-hops", "0", "ask", "Where?"}).code != kExitOk);
}

TEST_CASE("help and version") {
  Result help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("ingest") != std::string::npos);
  Result version = run_cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find(kVersion) != std::string::npos);
}

}  // namespace
}  // namespace dcqa::cli
