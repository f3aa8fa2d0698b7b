// rational.hpp — exact rational arithmetic used throughout the library.
//
// Thin layer over boost::multiprecision::cpp_rational (header-only, so no
// external link dependency): exact floor/ceil, canonical "p/q" parsing and
// formatting, and a decimal renderer for human-readable diagnostics. All
// bound and ratio computations in this project are exact; decimal output is
// formatting only.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace vca {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor of p/q for q > 0 (cpp_int division truncates toward zero).
inline Int floor_div(const Int& p, const Int& q) {
  Int d = p / q;
  if (p < 0 && d * q != p) --d;
  return d;
}

inline Int floor_rat(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline Int ceil_rat(const Rational& r) {
  Int f = floor_rat(r);
  if (Rational(f) != r) ++f;
  return f;
}

// Parses a canonical rational literal: an optional sign, an integer part,
// and an optional "/denominator". Decimal notation is rejected on purpose:
// values such as alpha must be exact.
inline Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Rational {
    throw FormatError("bad rational literal \"" + text + "\": " + why);
  };
  auto read_int = [&](bool allow_sign) -> Int {
    bool negative = false;
    if (allow_sign && pos < text.size() &&
        (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail("expected digits");
    Int value(text.substr(start, pos - start));
    return negative ? Int(-value) : value;
  };

  Int num = read_int(/*allow_sign=*/true);
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int(/*allow_sign=*/false);
    if (den == 0) fail("zero denominator");
  }
  if (pos != text.size()) fail("trailing characters (decimals not accepted)");
  return Rational(num, den);
}

// Canonical "p/q" rendering in lowest terms with q >= 1 (e.g. "3/4", "2/1").
inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Fixed-point decimal rendering, rounded to nearest (ties upward). For
// diagnostics and logs only; never used in comparisons.
inline std::string format_decimal(const Rational& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = r * scale;
  Int twice = floor_rat(scaled * 2);
  Int units = floor_div(twice + 1, Int(2));
  bool negative = units < 0;
  if (negative) units = -units;
  Int whole = units / scale;
  Int frac = units % scale;
  std::string frac_str = frac.str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = negative ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

}  // namespace vca
