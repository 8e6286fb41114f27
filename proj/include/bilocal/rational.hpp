#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace bilocal {

/// Exact arbitrary-precision rational. Every coefficient in the engine is one.
using Rational = mpq_class;
using Integer = mpz_class;

/// a/b in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so every fraction built from integers goes through here.
Rational ratio(long a, long b);

/// "p" for integers, "p/q" otherwise; always canonical (lowest terms, q > 0).
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

bool is_integer(const Rational& r);

/// Integers that fit in int64 become bare JSON numbers, everything else a
/// "p/q" string. This is stable under parse/re-serialize.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace bilocal
