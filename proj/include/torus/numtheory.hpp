#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torus {

/// Exact non-negative count. Orbit counts pass 128 bits by n = 12.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, for sub-terms of the closed forms that are only
/// integral once summed (b1(1,1) = 1/2, for instance).
using BigRational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigCount& value);

/// Parses a plain decimal string (digits only, no sign). Throws
/// std::invalid_argument on anything else.
BigCount parse_decimal(std::string_view text);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t n);

/// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

BigCount pow2(std::uint64_t k);

/// 2^k for a possibly negative k.
BigRational pow2_signed(std::int64_t k);

/// Converts an exact rational to an integer, throwing std::logic_error if
/// it has a non-unit denominator or is negative.
BigCount require_count(const BigRational& value);

/// numerator / denominator, throwing std::logic_error if the division
/// leaves a remainder. Every Burnside average and every exponent in the
/// closed forms is an integer, so a remainder means a bug upstream.
std::uint64_t exact_div(std::uint64_t numerator, std::uint64_t denominator);
BigCount exact_div(const BigCount& numerator, const BigCount& denominator);

}  // namespace torus
