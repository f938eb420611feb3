#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace riskodds {

// All engagement and small-battle probabilities are kept as arbitrary-precision
// rationals; conversion to double happens only at module boundaries.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

/// base^exp for small nonnegative exponents.
BigInt ipow(const BigInt& base, int exp);

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

/// True iff x lies in [0, 1].
bool is_probability(const Rat& x);

/// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string frac_str(const Rat& x);

/// Parses "n/d", a plain integer, or a decimal like "0.25" into an exact rational.
Rat parse_rational(const std::string& text);

}  // namespace riskodds
