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

#include "affect_audit/checksum.h"
#include "affect_audit/str_util.h"

#include <fstream>
#include <sstream>

#include "absl/status/status.h"

namespace affect_audit {

uint64_t Fnv1a64(std::string_view bytes, uint64_t seed) {
  uint64_t hash = seed;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string BytesChecksum(std::string_view bytes) {
  return StrFormat("fnv1a64:%016x", Fnv1a64(bytes));
}

absl::StatusOr<std::string> ReadFileToString(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(StrCat("cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return absl::DataLossError(StrCat("read failed: ", path.string()));
  }
  return std::move(buffer).str();
}

absl::Status WriteStringToFile(const std::filesystem::path& path,
                               std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        StrCat("cannot write ", path.string()));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    return absl::DataLossError(StrCat("write failed: ", path.string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> FileChecksum(const std::filesystem::path& path) {
  absl::StatusOr<std::string> bytes = ReadFileToString(path);
  if (!bytes.ok()) return bytes.status();
  return BytesChecksum(*bytes);
}

}  // namespace affect_audit
