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

#ifndef AFFECT_AUDIT_CSV_H_
#define AFFECT_AUDIT_CSV_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace affect_audit {

using CsvRow = std::vector<std::string>;

// RFC 4180 style parsing: quoted fields may contain the delimiter, doubled
// quotes and newlines. A trailing newline does not produce an empty row.
absl::StatusOr<std::vector<CsvRow>> ParseCsv(std::string_view text,
                                             char delimiter = ',');

// Quotes a field only when it contains the delimiter, a quote or a newline.
std::string CsvEscape(std::string_view field, char delimiter = ',');
std::string CsvLine(const CsvRow& row, char delimiter = ',');

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_CSV_H_
