#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hdeg/error.hpp"
#include "hdeg/polynomial.hpp"

namespace hdeg {

/// Syntax error at a byte offset of the parsed text.
class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& msg) : InputError(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses a polynomial expression starting at `pos` and advances `pos` past
/// it.  Grammar: sums and differences of products of powers of variables,
/// integer constants and parenthesized expressions; `/` only by a nonzero
/// constant.  Stops at the first character that cannot continue the
/// expression.
Polynomial parse_polynomial_at(const RingPtr& ring, std::string_view text, std::size_t& pos);

/// Whole-string variant; trailing input is an error.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace hdeg
