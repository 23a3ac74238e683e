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

#ifndef DCQA_ERROR_H_
#define DCQA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcqa {

enum class ErrorCode {
  kUnparseableDate,
  kNoVerbFound,
  kUnknownInterrogative,
  kEmptyUnit,
  kUnknownWord,
  kNoInterrogative,
  kNoContentWords,
  kNoCaseMatch,
  kNoPathFound,
  kIoError,
  kCorruptStore,
  kBadConfig,
};

// Stable name of an error code, e.g. "UnknownWord".
std::string_view error_name(ErrorCode code);

// All failures raised by the library. `subject()` carries the offending item
// (a word, a path, an id) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string subject = {})
      : std::runtime_error(message), code_(code), subject_(std::move(subject)) {}

  ErrorCode code() const { return code_; }
  const std::string& subject() const { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace dcqa

#endif  // DCQA_ERROR_H_
