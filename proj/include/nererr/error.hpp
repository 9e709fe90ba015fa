#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nererr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be turned into a valid Corpus.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class MalformedLine : public ParseError {
 public:
  MalformedLine(std::string source, std::size_t line, const std::string& reason)
      : ParseError(std::move(source), line, "malformed line: " + reason) {}
};

/// An I-X label with no legal predecessor under the Strict policy.
class InvalidTransition : public ParseError {
 public:
  InvalidTransition(std::string source, std::size_t line, std::size_t sentence, std::size_t position,
                    std::string label)
      : ParseError(std::move(source), line,
                   "invalid transition to '" + label + "' at sentence " + std::to_string(sentence) +
                       ", token " + std::to_string(position)),
        sentence_(sentence),
        position_(position),
        label_(std::move(label)) {}

  std::size_t sentence() const noexcept { return sentence_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::size_t sentence_;
  std::size_t position_;
  std::string label_;
};

class EmptyInput : public ParseError {
 public:
  explicit EmptyInput(std::string source) : ParseError(std::move(source), 0, "no sentences found") {}
};

/// Gold and predicted corpora do not share a tokenization.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Spans handed to spans_to_labels overlap each other.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// Spans that the requested tag scheme cannot encode without losing a boundary.
class SchemeError : public Error {
 public:
  using Error::Error;
};

}  // namespace nererr
