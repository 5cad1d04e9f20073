#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plogic/free_formula.hpp"
#include "plogic/linear_formula.hpp"
#include "plogic/temporal_formula.hpp"

namespace plogic {

// First syntax error found in an input. Offsets are in bytes; line and column
// are 1-based, column counted in bytes.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t byteOffset, std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  // Locates byteOffset inside input to fill in line and column.
  static ParseError at(std::string_view input, std::size_t byteOffset, std::string message,
                       std::vector<std::string> expected = {});

  std::size_t byteOffset() const noexcept { return byteOffset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t byteOffset_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Γ |- goal, with Γ an ordered multiset: multiplicity matters.
struct Sequent {
  std::vector<LinearFormula> context;
  LinearFormula goal;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string render(const Sequent& s);

// Largest k accepted in []<=k and <><=k.
inline constexpr int kMaxModalBound = 4096;
// Deepest parenthesis/operator nesting accepted before giving up.
inline constexpr int kMaxNestingDepth = 256;

LinearFormula parseLinear(std::string_view input);
TemporalFormula parseTemporal(std::string_view input);
FreeFormula parseFree(std::string_view input);
FreeTerm parseFreeTerm(std::string_view input);
Sequent parseSequent(std::string_view input);

// Blanks out `#` comments (to end of line) so that offsets into the result
// still point at the same bytes of the original file.
std::string maskComments(std::string_view text);

} // namespace plogic
