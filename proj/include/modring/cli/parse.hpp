#ifndef MODRING_CLI_PARSE_HPP
#define MODRING_CLI_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "modring/polynomial.hpp"

namespace modring::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the polynomial grammar
///   poly    := [sign] term { sign term }
///   term    := coeff [ "*" factors ] | factors
///   factors := factor { "*" factor }
///   factor  := var [ "^" uint ]
///   coeff   := uint [ "/" uint ]
///   var     := "a" | "b" | "c" | "alpha" | "beta" | "gamma"
/// Whitespace between tokens is ignored. Throws ParseError.
Polynomial parse_poly(std::string_view text);

/// A single monomial with coefficient 1, e.g. "a^2*b". Throws ParseError.
Monomial parse_monomial(std::string_view text);

}  // namespace modring::cli

#endif  // MODRING_CLI_PARSE_HPP
