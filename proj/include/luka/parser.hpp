#pragma once

#include <stdexcept>
#include <string>

#include "luka/formula.hpp"

namespace luka {

/// Syntax error in surface text; `offset` is the byte position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the ASCII surface grammar:
///   0 = bottom, identifiers = propositions, ! & (+) /\ \/ -> <->,
///   parentheses for grouping. Sugar is expanded; the result contains only
///   the five primitive constructors.
Formula parse(const std::string& text);

}  // namespace luka
