// Copyright 2026 The Affect Audit Authors.
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

#ifndef AFFECT_AUDIT_CHECKSUM_H_
#define AFFECT_AUDIT_CHECKSUM_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace affect_audit {

// 64-bit FNV-1a. Used for provenance records, not for security.
uint64_t Fnv1a64(std::string_view bytes, uint64_t seed = 0xcbf29ce484222325ULL);

// "fnv1a64:<16 hex digits>" over the raw file bytes.
absl::StatusOr<std::string> FileChecksum(const std::filesystem::path& path);
std::string BytesChecksum(std::string_view bytes);

// Reads a whole file into memory.
absl::StatusOr<std::string> ReadFileToString(const std::filesystem::path& path);
absl::Status WriteStringToFile(const std::filesystem::path& path,
                               std::string_view contents);

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_CHECKSUM_H_
