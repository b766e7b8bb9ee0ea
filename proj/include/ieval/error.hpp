#pragma once

#include <stdexcept>
#include <string>

namespace ieval {

// Failure categories surfaced by parsers, scorers and transforms.
enum class ErrorCode {
  MalformedLine,
  UnknownTagPrefix,
  EmptyInput,
  SchemaViolation,
  IndexOutOfRange,
  DuplicateSentId,
  IllFormedSequence,
  OverlappingSpans,
  SentenceMismatch,
  UnknownCriterion,
  IneligibleSentence,
  EmptyEvalCorpus,
  UnsupportedFormat,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ieval
