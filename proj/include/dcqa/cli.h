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

#ifndef DCQA_CLI_H_
#define DCQA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "dcqa/network.h"
#include "dcqa/qa_engine.h"

namespace dcqa::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitNothingIngested = 2;
inline constexpr int kExitNoAnswer = 3;

inline constexpr const char* kVersion = "1.0.0";

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  // Print the REPL prompt.
  bool interactive = false;
};

// `args[0]` is the program name.
int run(const std::vector<std::string>& args, Streams io);

// Words, knowledge, case assignments and links as aligned text tables.
std::string render_inspect(const Network& net);
// Graphviz description of the word graph.
std::string render_dot(const Network& net);
// Question words, candidate (pair, knowledge) rows and case-filter outcome.
std::string render_trace(const Answer& answer, const Network& net);

}  // namespace dcqa::cli

#endif  // DCQA_CLI_H_
