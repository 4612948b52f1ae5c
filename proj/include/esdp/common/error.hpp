// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <stdexcept>
#include <string>

namespace esdp {

/// Base for every failure the toolkit reports. Callers that only need a
/// message can catch this; the subclasses let the CLI pick exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SourceUnavailableError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class ClockSkewError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class RecordFormatError : public Error {
 public:
  using Error::Error;
};

class XmlParseError : public Error {
 public:
  XmlParseError(const std::string& what, long line, long column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  long line() const noexcept { return line_; }
  long column() const noexcept { return column_; }

 private:
  long line_;
  long column_;
};

class SchemaVersionError : public Error {
 public:
  using Error::Error;
};

/// Structural violation of a known schema version: unknown element or
/// attribute, missing attribute, malformed number.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class CorruptRepositoryError : public Error {
 public:
  CorruptRepositoryError(const std::string& what, long rank)
      : Error(what + " (pattern rank " + std::to_string(rank) + ")"), rank_(rank) {}

  long rank() const noexcept { return rank_; }

 private:
  long rank_;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class EmptyQueryError : public Error {
 public:
  using Error::Error;
};

}  // namespace esdp
