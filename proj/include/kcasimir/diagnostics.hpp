// Copyright (c) 2026 The kerr-casimir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kcasimir {

using WarningHandler = std::function<void(const std::string&)>;

/// Emit a non-fatal warning through the installed handler (stderr by default).
void warn(const std::string& message);

/// Install a handler; returns the previous one. Thread-safe.
WarningHandler set_warning_handler(WarningHandler handler);

/// Scoped capture of warnings, used by tests and the CLI report.
class WarningCapture {
 public:
  WarningCapture();
  ~WarningCapture();
  WarningCapture(const WarningCapture&) = delete;
  WarningCapture& operator=(const WarningCapture&) = delete;

  const std::vector<std::string>& messages() const { return messages_; }
  bool contains(const std::string& fragment) const;

 private:
  WarningHandler previous_;
  std::vector<std::string> messages_;
};

}  // namespace kcasimir
