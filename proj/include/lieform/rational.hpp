#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lieform {

// Exact rational scalar. GMP keeps values canonical (denominator > 0,
// gcd(num, den) = 1) after every arithmetic operation; the helpers below
// canonicalize explicitly where GMP does not (construction, parsing).
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Base of every error thrown by this library; `kind` is the stable
// machine-readable name used in CLI error payloads.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg)
      : std::runtime_error(msg), kind(std::move(k)) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

Rat rat(long num, long den = 1);

// Parses "p" or "p/q" (q > 0 after canonicalization). Strict: digits with an
// optional leading '-' on the numerator only.
Rat parse_rat(const std::string& text);

// Canonical wire form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);

}  // namespace lieform
