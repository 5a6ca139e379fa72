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

#include <optional>
#include <stdexcept>
#include <string>

namespace qcc {

/// Position of a construct in a source file. Line and column are 1-based.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/**
 * @brief Base class of every error raised by the toolchain.
 *
 * Errors that can be attributed to a place in an input file carry a span;
 * `format()` renders them in the usual `file:line:col: error: message` shape.
 */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message,
                 std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(message), span_(span) {}

  [[nodiscard]] const std::optional<SourceSpan>& span() const noexcept {
    return span_;
  }

  [[nodiscard]] std::string format(const std::string& file) const {
    std::string out = file;
    if (span_) {
      out += ":" + std::to_string(span_->line) + ":" +
             std::to_string(span_->column);
    }
    out += ": error: ";
    out += what();
    return out;
  }

 private:
  std::optional<SourceSpan> span_;
};

#define QCC_DEFINE_ERROR(Name)   \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

// qasm_frontend
QCC_DEFINE_ERROR(SyntaxError);
QCC_DEFINE_ERROR(SemanticError);

// gate_optimizer
QCC_DEFINE_ERROR(UnknownGate);
QCC_DEFINE_ERROR(NotUnitary);
QCC_DEFINE_ERROR(NoValidBasis);
QCC_DEFINE_ERROR(UnsupportedGate);

// qir_codegen / circuit_extractor
QCC_DEFINE_ERROR(EmitError);
QCC_DEFINE_ERROR(ParseError);
QCC_DEFINE_ERROR(ExtractionError);

// layout_routing
QCC_DEFINE_ERROR(FormatError);
QCC_DEFINE_ERROR(RoutingError);
QCC_DEFINE_ERROR(CapacityError);

// sim_oracle
QCC_DEFINE_ERROR(OracleError);
QCC_DEFINE_ERROR(DimensionMismatch);
QCC_DEFINE_ERROR(InvalidPermutation);

// driver
QCC_DEFINE_ERROR(UnknownFileType);
QCC_DEFINE_ERROR(MissingFile);
QCC_DEFINE_ERROR(ConfigError);

#undef QCC_DEFINE_ERROR

}  // namespace qcc
