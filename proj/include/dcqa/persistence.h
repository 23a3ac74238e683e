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

#ifndef DCQA_PERSISTENCE_H_
#define DCQA_PERSISTENCE_H_

#include <string>
#include <string_view>

#include "dcqa/network.h"

namespace dcqa {

inline constexpr std::string_view kStoreMagic = "DCQA";
inline constexpr int kStoreFormatVersion = 1;
inline constexpr std::string_view kStoreExtension = ".dcqa.json";

// Deterministic JSON rendering of the whole network (see docs/store-format.md).
std::string serialize_network(const Network& net);

// Throws Error(kCorruptStore) on malformed JSON, wrong magic or version,
// header/body count mismatch, dangling ids, or links that disagree with the
// knowledge units.
Network deserialize_network(std::string_view json_text);

// Throws Error(kIoError).
void save(const Network& net, const std::string& path);

// Throws Error(kIoError) or Error(kCorruptStore).
Network load(const std::string& path);

}  // namespace dcqa

#endif  // DCQA_PERSISTENCE_H_
