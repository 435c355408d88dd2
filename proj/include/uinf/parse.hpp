#pragma once

#include "uinf/fock.hpp"
#include "uinf/uelement.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace uinf {

/// Parse failure with source position and an expected-token message.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Element grammar (whitespace-insensitive):
///   vector  = "0" / term *(("+" / "-") term)
///   term    = [rational "*"] 1*osc "|0>" / rational "*" "|0>" / "|0>"
///   osc     = "a(-" int ")"
///   uelem   = "0" / group *(("+" / "-") group)
///   group   = "[" vector "]" "{" nat "," nat "}"
///   rational= ["-"] int ["/" int]
/// Printing a computed element and re-parsing it yields an equal element.
FockVector parse_fock(const std::string& text);
UElement parse_uelement(const std::string& text);

using Element = std::variant<FockVector, UElement>;

/// Dispatches on the leading token: '[' opens a UElement literal.
Element parse_element(const std::string& text);

}  // namespace uinf
