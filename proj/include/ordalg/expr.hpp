#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ordalg/structure.hpp"
#include "ordalg/value.hpp"

namespace ordalg {

/// Result of an expression: an element together with the structure it lives
/// in (level() and residue() move to the component structures), or an
/// ordering for cmp().
struct EvalResult {
  StructDesc desc;
  std::optional<Value> value;
  std::optional<std::strong_ordering> order;

  /// Canonical literal, or LT / EQ / GT.
  std::string str() const;
};

/// Evaluates an expression over element literals of d:
///
///   expr    := term ('+' term)*
///   term    := primary ('*' primary)*
///   primary := literal | '(' expr ')' | name '(' args ')'
///   name    := inv | cmp | sum | sup | level | residue
///
/// sum() and sup() take element arguments and may end with one infinite tail:
/// repeat(x), levelramp(start, step, residue) or residueramp(level, start, step).
EvalResult evaluate(const StructDesc& d, std::string_view text);

}  // namespace ordalg
