// Copyright 2026 The schmidt-games Authors. All rights reserved.
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

// Small string helpers shared by the text formats.

#ifndef SCHMIDT_TEXT_H_
#define SCHMIDT_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schmidt {

std::vector<std::string> Split(std::string_view s, char sep);
// Splits on runs of spaces/tabs.
std::vector<std::string> Tokenize(std::string_view s);
std::string_view Trim(std::string_view s);
bool StartsWith(std::string_view s, std::string_view prefix);
// `context` names the field in the ParseError on failure.
int64_t ParseInt64(std::string_view s, const std::string& context);
// Reads lines, dropping '#' comment lines and blank lines.
std::vector<std::string> ContentLines(std::string_view text);

}  // namespace schmidt

#endif  // SCHMIDT_TEXT_H_
