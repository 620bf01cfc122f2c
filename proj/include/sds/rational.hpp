#pragma once

#include <gmpxx.h>

#include <string>

namespace sds {

using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// std::invalid_argument on anything else.
Rat parse_rational(const std::string& s);

/// Canonical text: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& r);

/// lcm(1, 2, ..., n); the integer scale that clears the denominators of
/// the averaging matrix of size n.
Int lcm_upto(int n);

}  // namespace sds
