#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "torus/numtheory.hpp"

using namespace torus;

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == oracle::phi_by_count(12));
  CHECK(euler_phi(12) == 4);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("euler_phi agrees with counting up to 2000") {
  for (std::uint64_t n = 1; n <= 2000; ++n) REQUIRE(euler_phi(n) == oracle::phi_by_count(n));
}

TEST_CASE("phi summed over divisors gives n") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += euler_phi(d);
    REQUIRE(sum == n);
  }
}

TEST_CASE("phi is multiplicative on coprime pairs") {
  for (std::uint64_t a = 1; a <= 100; ++a) {
    for (std::uint64_t b = 1; b <= 100; ++b) {
      if (gcd(a, b) != 1) continue;
      REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    }
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
  CHECK(divisors(12) == oracle::divisors_by_trial(12));
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);

  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto ds = divisors(n);
    REQUIRE(ds == oracle::divisors_by_trial(n));
    for (std::uint64_t d : ds) REQUIRE(std::binary_search(ds.begin(), ds.end(), n / d));
  }
}

TEST_CASE("lcm") {
  CHECK(lcm(1, 9) == 9);
  CHECK(lcm(4, 6) == oracle::lcm_by_scan(4, 6));
  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(3, 3) == 3);
  CHECK_THROWS_AS(lcm(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(lcm(3, 0), std::invalid_argument);
  for (std::uint64_t a = 1; a <= 60; ++a) {
    for (std::uint64_t b = 1; b <= 60; ++b) {
      REQUIRE(lcm(a, b) == oracle::lcm_by_scan(a, b));
      REQUIRE(lcm(a, b) * gcd(a, b) == a * b);
    }
  }
}

TEST_CASE("pow2") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(9) == 512);
  const std::string big = to_decimal(pow2(144));
  CHECK(big.size() == 44);
  CHECK(big == oracle::pow2_by_doubling(144));
  for (std::uint64_t a = 0; a <= 200; a += 7) {
    for (std::uint64_t b = 0; b <= 200; b += 11) REQUIRE(pow2(a + b) == pow2(a) * pow2(b));
  }
}

TEST_CASE("pow2_signed and require_count") {
  CHECK(pow2_signed(3) == 8);
  CHECK(pow2_signed(-2) == BigRational(1, 4));
  CHECK(require_count(BigRational(12, 4)) == 3);
  CHECK_THROWS_AS(require_count(BigRational(1, 2)), std::logic_error);
  CHECK_THROWS_AS(require_count(BigRational(-3)), std::logic_error);
}

TEST_CASE("exact_div rejects remainders") {
  CHECK(exact_div(std::uint64_t{12}, std::uint64_t{4}) == 3);
  CHECK_THROWS_AS(exact_div(std::uint64_t{13}, std::uint64_t{4}), std::logic_error);
  CHECK_THROWS_AS(exact_div(std::uint64_t{1}, std::uint64_t{0}), std::logic_error);
  CHECK(exact_div(pow2(100), pow2(98)) == 4);
  CHECK_THROWS_AS(exact_div(pow2(100) + 1, BigCount(2)), std::logic_error);
}

TEST_CASE("decimal round trip") {
  for (unsigned k : {0u, 1u, 63u, 64u, 65u, 144u, 300u}) {
    const BigCount v = pow2(k) - 1;
    REQUIRE(parse_decimal(to_decimal(v)) == v);
  }
  CHECK(parse_decimal("19358285762613388352671214587818634041520") ==
        BigCount("19358285762613388352671214587818634041520"));
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("-5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("12a"), std::invalid_argument);
}
