// Copyright 2026 The vsmgrade Authors
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

#ifndef VSMGRADE_ERROR_HPP
#define VSMGRADE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsmgrade {

enum class ErrorKind {
  MissingFile,
  MalformedCsv,
  DuplicateKey,
  EmptyId,
  NegativeWeight,
  EmptyModelAnswer,
  NegativeScore,
  MultiTokenEntry,
  UnknownQuestion,
  InvalidN,
  EmptyCorpus,
  QuestionMismatch,
  MixedStudents,
  EmptyInput,
  TooFewValues,
  ZeroMean,
  LengthMismatch,
  TooFewSubjects,
  InvalidDf,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingFile: return "MissingFile";
    case ErrorKind::MalformedCsv: return "MalformedCsv";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::EmptyId: return "EmptyId";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::EmptyModelAnswer: return "EmptyModelAnswer";
    case ErrorKind::NegativeScore: return "NegativeScore";
    case ErrorKind::MultiTokenEntry: return "MultiTokenEntry";
    case ErrorKind::UnknownQuestion: return "UnknownQuestion";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::QuestionMismatch: return "QuestionMismatch";
    case ErrorKind::MixedStudents: return "MixedStudents";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::TooFewValues: return "TooFewValues";
    case ErrorKind::ZeroMean: return "ZeroMean";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooFewSubjects: return "TooFewSubjects";
    case ErrorKind::InvalidDf: return "InvalidDf";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vsmgrade

#endif  // VSMGRADE_ERROR_HPP
