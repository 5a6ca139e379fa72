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
#include "qcc/qir/verify.hpp"

#include <set>
#include <sstream>

#include "llvm_text.hpp"

namespace qcc::qir {

namespace {

using namespace detail;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string callee_of(std::string_view line) {
  const auto at = line.find('@');
  if (at == std::string_view::npos) return {};
  std::size_t j = at + 1;
  while (j < line.size() && is_name_char(line[j])) ++j;
  return std::string(line.substr(at + 1, j - at - 1));
}

bool is_label(std::string_view line) {
  return !line.empty() && line.back() == ':' && line.find(' ') == std::string_view::npos;
}

bool balanced(std::string_view line) {
  int paren = 0;
  int bracket = 0;
  for (const char c : line) {
    paren += c == '(' ? 1 : c == ')' ? -1 : 0;
    bracket += c == '[' ? 1 : c == ']' ? -1 : 0;
    if (paren < 0 || bracket < 0) return false;
  }
  return paren == 0 && bracket == 0;
}

}  // namespace

std::vector<QirDiagnostic> verify_qir_text(std::string_view text) {
  std::vector<QirDiagnostic> diags;
  const auto lines = split_lines(text);
  auto report = [&](std::size_t i, std::string message) {
    diags.push_back({static_cast<int>(i + 1), std::move(message)});
  };

  // First pass: module-level symbols and labels of every function body.
  std::set<std::string> types;
  std::set<std::string> functions;
  std::vector<std::set<std::string>> labels;
  bool in_body = false;
  for (const auto raw : lines) {
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (!in_body && line.front() == '%' && line.find("= type") != std::string_view::npos) {
      if (auto name = assigned_name(line)) types.insert(*name);
    } else if (starts_with_word(line, "declare") || starts_with_word(line, "define")) {
      functions.insert(callee_of(line));
      if (starts_with_word(line, "define") && line.back() == '{') {
        in_body = true;
        labels.emplace_back();
      }
    } else if (in_body && line == "}") {
      in_body = false;
    } else if (in_body && is_label(line)) {
      labels.back().insert(std::string(line.substr(0, line.size() - 1)));
    }
  }

  // Second pass: per-instruction checks.
  in_body = false;
  int depth = 0;
  std::size_t function_index = 0;
  std::set<std::string> values;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(strip_comment(lines[i]));
    if (line.empty()) continue;
    if (!balanced(line)) report(i, "unbalanced parentheses or brackets");
    for (const char c : line) {
      if (c == '{') ++depth;
      if (c == '}' && --depth < 0) {
        report(i, "unmatched '}'");
        depth = 0;
      }
    }
    if (starts_with_word(line, "define")) {
      if (in_body) report(i, "nested function definition");
      if (line.back() == '{') {
        in_body = true;
        values.clear();
        // function arguments are defined on entry
        const auto open = line.find('(');
        const auto close = line.rfind(')');
        if (open != std::string_view::npos && close != std::string_view::npos) {
          for (auto& n : percent_names(line.substr(open, close - open))) {
            if (!types.contains(n)) values.insert(n);
          }
        }
      }
      continue;
    }
    if (!in_body) continue;
    if (line == "}") {
      in_body = false;
      ++function_index;
      continue;
    }
    if (is_label(line)) continue;
    const auto& fn_labels = labels.at(function_index);

    std::string_view rhs = line;
    const auto assigned = assigned_name(line);
    if (assigned) rhs = trim(line.substr(line.find('=') + 1));

    // uses
    for (std::size_t pos = 0; pos < rhs.size(); ++pos) {
      if (rhs[pos] != '%') continue;
      std::size_t end = pos + 1;
      while (end < rhs.size() && is_name_char(rhs[end])) ++end;
      const std::string n(rhs.substr(pos + 1, end - pos - 1));
      const bool label_ref = rhs.substr(0, pos).ends_with("label ");
      pos = end - 1;
      if (n.empty() || types.contains(n)) continue;
      if (label_ref) {
        if (!fn_labels.contains(n)) report(i, "branch to undefined label %" + n);
        continue;
      }
      if (!values.contains(n)) report(i, "use of undefined value %" + n);
    }

    if (assigned) {
      if (values.contains(*assigned) || fn_labels.contains(*assigned)) {
        report(i, "value %" + *assigned + " defined more than once");
      }
      values.insert(*assigned);
    }

    std::string error;
    if (const auto call = parse_call(line, &error)) {
      if (!functions.contains(call->callee)) {
        report(i, "call to undeclared function @" + call->callee);
      }
      if (call->return_type == "void" && !call->result.empty()) {
        report(i, "void call result assigned to %" + call->result);
      }
    } else if (!error.empty()) {
      report(i, error);
    }
  }
  if (in_body) report(lines.empty() ? 0 : lines.size() - 1, "unterminated function body");
  if (depth != 0) report(lines.empty() ? 0 : lines.size() - 1, "unbalanced braces");
  return diags;
}

std::vector<QirDiagnostic> verify_qir_text(const QirModule& module) {
  return verify_qir_text(module.text);
}

}  // namespace qcc::qir
