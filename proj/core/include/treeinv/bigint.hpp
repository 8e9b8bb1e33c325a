#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace treeinv {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Comma-separated decimal terms, e.g. "1,2,6,22".
std::string join_terms(std::span<const BigInt> terms, const char* sep = ",");

/// Parses "1,2,6,22" (spaces allowed). Throws ParseError.
std::vector<BigInt> parse_terms(const std::string& text);

} // namespace treeinv
