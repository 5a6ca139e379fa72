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
#include "llvm_text.hpp"

#include <cctype>

namespace qcc::qir::detail {

std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == ';' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_word(std::string_view s, std::string_view word) {
  if (!s.starts_with(word)) return false;
  return s.size() == word.size() || !is_name_char(s[word.size()]);
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '$' || c == '-';
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '}' || c == '>') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  const auto last = trim(s.substr(start));
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

std::optional<std::string> assigned_name(std::string_view instr) {
  instr = trim(instr);
  if (instr.empty() || instr.front() != '%') return std::nullopt;
  std::size_t i = 1;
  while (i < instr.size() && is_name_char(instr[i])) ++i;
  const auto rest = trim(instr.substr(i));
  if (rest.empty() || rest.front() != '=') return std::nullopt;
  return std::string(instr.substr(1, i - 1));
}

std::optional<CallInst> parse_call(std::string_view instr, std::string* error) {
  auto fail = [&](const char* why) -> std::optional<CallInst> {
    if (error != nullptr) *error = why;
    return std::nullopt;
  };
  CallInst call;
  instr = trim(instr);
  if (auto name = assigned_name(instr)) {
    call.result = *name;
    instr = trim(instr.substr(instr.find('=') + 1));
  }
  if (starts_with_word(instr, "tail")) instr = trim(instr.substr(4));
  if (!starts_with_word(instr, "call")) return std::nullopt;
  instr = trim(instr.substr(4));
  const auto at = instr.find('@');
  if (at == std::string_view::npos) return fail("call without '@' callee");
  call.return_type = std::string(trim(instr.substr(0, at)));
  std::size_t i = at + 1;
  while (i < instr.size() && is_name_char(instr[i])) ++i;
  call.callee = std::string(instr.substr(at + 1, i - at - 1));
  if (call.callee.empty()) return fail("empty callee name");
  if (i >= instr.size() || instr[i] != '(') return fail("expected '(' after callee");
  int depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t j = i; j < instr.size(); ++j) {
    if (instr[j] == '(') ++depth;
    if (instr[j] == ')' && --depth == 0) {
      close = j;
      break;
    }
  }
  if (close == std::string_view::npos) return fail("unbalanced call arguments");
  const auto inner = trim(instr.substr(i + 1, close - i - 1));
  if (!inner.empty()) {
    for (auto arg : split_top_level(inner, ',')) {
      const auto space = arg.rfind(' ');
      if (space == std::string_view::npos) return fail("argument without type");
      call.args.push_back({std::string(trim(arg.substr(0, space))),
                           std::string(trim(arg.substr(space + 1)))});
    }
  }
  return call;
}

std::vector<std::string> percent_names(std::string_view s) {
  std::vector<std::string> out;
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (quoted || s[i] != '%') continue;
    std::size_t j = i + 1;
    while (j < s.size() && is_name_char(s[j])) ++j;
    if (j > i + 1) out.emplace_back(s.substr(i + 1, j - i - 1));
    i = j - 1;
  }
  return out;
}

}  // namespace qcc::qir::detail
