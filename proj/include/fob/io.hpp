#pragma once

#include <map>
#include <string>

#include "fob/openbook.hpp"

namespace fob {

struct ParseError {
  std::string location;
  std::string kind;  // syntax | schema | semantic
  std::string message;
};

struct ParseResult {
  std::optional<FoliatedOpenBook> book;
  std::map<std::string, std::string> expected;  // expected-results block, flattened
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

ParseResult parse_book(const std::string& text);

// Canonical serialization; parse(serialize(b)) == b and serializing a parsed
// canonical document reproduces it byte for byte.
std::string serialize_book(const FoliatedOpenBook& book,
                           const std::map<std::string, std::string>& expected = {});

}  // namespace fob
