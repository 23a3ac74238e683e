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

#include "dcqa/error.h"

namespace dcqa {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnparseableDate:
      return "UnparseableDate";
    case ErrorCode::kNoVerbFound:
      return "NoVerbFound";
    case ErrorCode::kUnknownInterrogative:
      return "UnknownInterrogative";
    case ErrorCode::kEmptyUnit:
      return "EmptyUnit";
    case ErrorCode::kUnknownWord:
      return "UnknownWord";
    case ErrorCode::kNoInterrogative:
      return "NoInterrogative";
    case ErrorCode::kNoContentWords:
      return "NoContentWords";
    case ErrorCode::kNoCaseMatch:
      return "NoCaseMatch";
    case ErrorCode::kNoPathFound:
      return "NoPathFound";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kCorruptStore:
      return "CorruptStore";
    case ErrorCode::kBadConfig:
      return "BadConfig";
  }
  return "Unknown";
}

}  // namespace dcqa
