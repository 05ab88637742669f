#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reticular/poly.hpp"

namespace reticular {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar: sums and differences of products of factors, where a factor is
// a number (integer or a/b), a variable name or a parenthesized expression,
// optionally raised to a nonnegative integer power. Juxtaposition is an
// error: write 2*x1, not 2x1.
CornerPoly parse_poly(std::string_view text, const VarLayout& layout);
CornerPoly parse_poly(std::string_view text, int r, int k, std::vector<std::string> params = {});

}  // namespace reticular
