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

#ifndef AFFECT_AUDIT_LOGGING_H_
#define AFFECT_AUDIT_LOGGING_H_

#include <string_view>

namespace affect_audit {

enum class LogLevel { kError = 0, kWarning = 1, kInfo = 2, kDebug = 3 };

// Verbosity is read once from the AFFECT_AUDIT_LOG environment variable
// ("error", "warn", "info", "debug"; default "warn") unless overridden.
LogLevel GetLogLevel();
void SetLogLevel(LogLevel level);

// Thread-safe; writes one line to stderr when `level` is enabled.
void Log(LogLevel level, std::string_view message);

inline void LogWarning(std::string_view message) {
  Log(LogLevel::kWarning, message);
}
inline void LogInfo(std::string_view message) { Log(LogLevel::kInfo, message); }

}  // namespace affect_audit

#endif  // AFFECT_AUDIT_LOGGING_H_
