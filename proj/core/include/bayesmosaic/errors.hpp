#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bayesmosaic {

// One broken invariant of a candidate model. `where` names the component
// ("prior", "conditional", "labels"), `index` the offending row/entry.
struct Violation {
  std::string where;
  std::optional<std::size_t> index;
  std::optional<double> value;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model failed validate_model(); the full report travels with the error.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// Event index or label outside its partition.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an outcome whose marginal probability is zero.
class NullConditioningError : public Error {
 public:
  NullConditioningError(std::size_t outcome, std::string label);
  std::size_t outcome() const noexcept { return outcome_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::size_t outcome_;
  std::string label_;
};

// Malformed model/style input. Line and column are 1-based when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Invalid rendering configuration (degenerate canvas, bad colour, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

std::string to_string(const Violation& v);

}  // namespace bayesmosaic
