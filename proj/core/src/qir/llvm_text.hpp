// Copyright 2026 The qcc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Small helpers for the restricted LLVM text subset shared by the QIR linter
// and the circuit extractor.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcc::qir::detail {

/// Drops a trailing `; comment` that is not inside a quoted string.
std::string_view strip_comment(std::string_view line);
std::string_view trim(std::string_view s);
bool starts_with_word(std::string_view s, std::string_view word);

/// Splits on `sep` at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

bool is_name_char(char c);

struct TypedValue {
  std::string type;
  std::string value;
};

struct CallInst {
  /// SSA name without `%`, empty for void calls.
  std::string result;
  std::string return_type;
  /// Without the leading `@`.
  std::string callee;
  std::vector<TypedValue> args;
};

/// nullopt when `instr` is not a call; malformed calls also yield nullopt
/// with `error` set.
std::optional<CallInst> parse_call(std::string_view instr, std::string* error = nullptr);

/// `%name = ...` assignment target without `%`, if any.
std::optional<std::string> assigned_name(std::string_view instr);

/// All `%name` tokens in `s`, in order, without the `%`.
std::vector<std::string> percent_names(std::string_view s);

}  // namespace qcc::qir::detail
