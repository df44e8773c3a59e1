#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "goodstein/hereditary.hpp"

namespace goodstein {

// Text form of hereditary representations:
//
//   rep   := "0" | term ("+" term)*
//   term  := coeff "*" base "^(" rep ")"
//
// Inside "^( )" a constant exponent c*b^(0) may also be written as the bare
// decimal c; format() always uses that short spelling. Whitespace between
// tokens is ignored. Every term and every nested exponent must use the same
// base. 19 in base 2 reads
//   1*2^(1*2^(1*2^(1))) + 1*2^(1) + 1*2^(0)
enum class Notation {
  kCompact,
  // Appends the zero constant term ("+ 0*b^(0)") when the rep has none,
  // and prints zero as "0*b^(0)". Display only; parse() rejects it.
  kPadded,
};

std::string format(const HereditaryRep& r, Notation style = Notation::kCompact);

// Throws SyntaxError or NonCanonical. "0" carries no base, so the zero rep
// takes `base` (or 2 when absent); for any other input a given `base` must
// match the text.
HereditaryRep parse(std::string_view text,
                    std::optional<Base> base = std::nullopt);

}  // namespace goodstein
