#pragma once

#include <stdexcept>
#include <string>

namespace strictmodal {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}

  // For line-based file formats where a column makes no sense.
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line(line), column(0) {}

  std::size_t line;
  std::size_t column;
};

struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strictmodal
