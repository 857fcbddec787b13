#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "powerhom/polynomial.hpp"

namespace powerhom {

/// Parse failure with a 1-based position. `line` is 0 when the text was not
/// part of a larger document.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& bare_message() const { return bare_; }

 private:
  std::string bare_;
  int line_, column_;
};

/// Parses expressions such as "x^2*y - 3/2*z + (x+y)^3". Juxtaposition of
/// factors ("2x", "x y") is accepted as multiplication.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line = 0);

/// Convenience: parses each string in turn.
std::vector<Polynomial> parse_polynomials(const RingPtr& ring, const std::vector<std::string>& texts);

}  // namespace powerhom
