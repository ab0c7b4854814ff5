#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpa {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational parse_rational(std::string_view text);

}  // namespace qpa
