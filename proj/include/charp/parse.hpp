#pragma once

#include <stdexcept>
#include <string>

#include "charp/multipoly.hpp"

namespace charp {

/// Syntax error with the offending position in the input text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the polynomial grammar
///   polynomial ::= term (('+'|'-') term)*
///   term       ::= [sign] [integer '*'] factor ('*' factor)*
///   factor     ::= 'x' index ['^' integer]
/// Whitespace is ignored; integers are decimal and reduced mod p on ingest.
MultiPoly poly_parse(const std::string& text, std::uint32_t p, std::size_t nvars);

}  // namespace charp
