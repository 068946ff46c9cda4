#include "torus/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace torus {

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigCount value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a decimal digit string: " + std::string(text));
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm: arguments must be positive");
  return a / gcd(a, b) * b;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t result = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

BigCount pow2(std::uint64_t k) {
  BigCount value = 1;
  value <<= k;
  return value;
}

BigRational pow2_signed(std::int64_t k) {
  if (k >= 0) return BigRational(pow2(static_cast<std::uint64_t>(k)));
  return BigRational(BigCount(1), pow2(static_cast<std::uint64_t>(-k)));
}

BigCount require_count(const BigRational& value) {
  if (boost::multiprecision::denominator(value) != 1 || value < 0) {
    throw std::logic_error("expected a non-negative integer, got " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

std::uint64_t exact_div(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  if (numerator % denominator != 0) {
    throw std::logic_error("exact_div: " + std::to_string(numerator) + " is not divisible by " +
                           std::to_string(denominator));
  }
  return numerator / denominator;
}

BigCount exact_div(const BigCount& numerator, const BigCount& denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: " + numerator.str() + " is not divisible by " +
                           denominator.str());
  }
  return quotient;
}

}  // namespace torus
