#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "hnc/errors.hpp"

namespace hnc {

// Exact arbitrary-precision rational. Every quantity that feeds a sign test
// or comparison is a Rat; floating point appears only at SVG emission.
using Rat = mpq_class;

/// Rational from numerator/denominator, canonicalized (gcd 1, positive den).
Rat make_rat(long num, long den = 1);

/// Sign of r as -1, 0, +1.
int sgn(const Rat& r);

/// True iff r has denominator 1.
bool is_integer(const Rat& r);

/// Canonical string form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// Strict parser for the wire format: "p" or "p/q" with q > 0, gcd(p,q) = 1,
// no leading zeros, no '+', no whitespace. Anything else is rejected.
std::optional<Rat> try_parse_rat(const std::string& text);

/// Parsing that throws ParseError instead of returning nullopt.
Rat parse_rat(const std::string& text);

// Fixed-point decimal rendering with `digits` places, round half to even.
// Used for SVG coordinates; byte-stable because it works on exact values.
std::string rat_to_fixed(const Rat& r, int digits);

// The unique rational of smallest denominator in the open interval (lo, hi),
// found by Stern-Brocot mediant descent. Requires 0 <= lo < hi.
Rat smallest_denominator_between(const Rat& lo, const Rat& hi);

} // namespace hnc
