#include "torus/formulas.hpp"

#include <stdexcept>
#include <string>

namespace torus::formulas {
namespace {

// Sum over c | m, d | n of phi(c) phi(d) 2^(mn / lcm(c,d)).
BigCount rotation_divisor_sum(const GridShape& shape) {
  const std::uint64_t cells = shape.cells();
  BigCount sum = 0;
  for (std::uint64_t c : divisors(shape.m)) {
    for (std::uint64_t d : divisors(shape.n)) {
      sum += euler_phi(c) * euler_phi(d) * pow2(exact_div(cells, lcm(c, d)));
    }
  }
  return sum;
}

// n(n + d - 2 floor(d/2)) / (2d): n(n+1)/(2d) for odd d, n^2/(2d) for even d.
std::uint64_t transpose_exponent(std::uint64_t n, std::uint64_t d) {
  return exact_div(n * (n + d - 2 * (d / 2)), 2 * d);
}

// Sum over d | n of phi(d) 2^(n(n + d - 2 floor(d/2)) / (2d)).
BigCount transpose_divisor_sum(std::uint32_t n) {
  BigCount sum = 0;
  for (std::uint64_t d : divisors(n)) sum += euler_phi(d) * pow2(transpose_exponent(n, d));
  return sum;
}

void require_positive(std::uint32_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

void require_at_least_three(std::uint32_t n, const char* what) {
  if (n < 3) {
    throw std::invalid_argument(std::string(what) + ": requires n >= 3, got " +
                                std::to_string(n));
  }
}

void require_residues(std::uint32_t n, std::uint32_t i, std::uint32_t j, const char* what) {
  if (i >= n || j >= n) {
    throw std::out_of_range(std::string(what) + ": i and j must lie in [0, n)");
  }
}

// Structure shared by sigma^i tau^j zeta and the i != j case of
// sigma^i tau^j rho theta zeta: order 2d, and for odd d a fixed block of
// n cells folding into d-cycles.
CycleStructurePrediction order_two_d(std::uint64_t n, std::uint64_t d) {
  CycleStructurePrediction out;
  out.element_order = 2 * d;
  if (d % 2 == 1) {
    out.cycles[d] += exact_div(n, d);
    const std::uint64_t long_cycles = exact_div(n * (n - 1), 2 * d);
    if (long_cycles > 0) out.cycles[2 * d] += long_cycles;
  } else {
    out.cycles[2 * d] = exact_div(n * n, 2 * d);
  }
  return out;
}

// n fixed points and C(n,2) transpositions.
CycleStructurePrediction involution_with_diagonal(std::uint64_t n) {
  CycleStructurePrediction out;
  out.cycles[1] = n;
  if (n > 1) {
    out.cycles[2] = n * (n - 1) / 2;
    out.element_order = 2;
  }
  return out;
}

}  // namespace

BigCount count_rot(const GridShape& shape) {
  return exact_div(rotation_divisor_sum(shape), BigCount(shape.cells()));
}

BigRational b1(const GridShape& shape) {
  return BigRational(rotation_divisor_sum(shape), BigCount(4 * shape.cells()));
}

BigRational b2(const GridShape& shape) {
  const std::uint64_t m = shape.m;
  const std::uint64_t n = shape.n;

  BigCount full = 0;
  for (std::uint64_t d : divisors(n)) full += euler_phi(d) * pow2(m * n / d);
  BigRational value(full, BigCount(4 * n));

  // Primed sum over the odd divisors of n.
  BigCount primed = 0;
  for (std::uint64_t d : divisors(n)) {
    if (d % 2 == 0) continue;
    const BigCount phi = euler_phi(d);
    const BigCount base = pow2(m * n / d);
    if (m % 2 == 1) {
      primed += phi * (pow2(exact_div((m + 1) * n, 2 * d)) - base);
    } else {
      primed += phi * (pow2(exact_div(m * n, 2 * d)) + pow2(exact_div((m + 2) * n, 2 * d)) -
                       2 * base);
    }
  }
  value += BigRational(primed, BigCount((m % 2 == 1 ? 4 : 8) * n));
  return value;
}

BigRational b3(const GridShape& shape) { return b2(GridShape(shape.n, shape.m)); }

BigRational b4(const GridShape& shape) {
  const std::int64_t cells = static_cast<std::int64_t>(shape.cells());
  const bool m_odd = shape.m % 2 == 1;
  const bool n_odd = shape.n % 2 == 1;
  if (m_odd && n_odd) return pow2_signed(static_cast<std::int64_t>(exact_div(cells - 1, 2)) - 1);
  if (m_odd != n_odd) return 3 * pow2_signed(cells / 2 - 3);
  return 7 * pow2_signed(cells / 2 - 4);
}

BigCount count_rotref(const GridShape& shape) {
  return require_count(b1(shape) + b2(shape) + b3(shape) + b4(shape));
}

BigCount transpose_cycle_sum(std::uint32_t n) {
  require_positive(n, "transpose_cycle_sum");
  return BigCount(n) * transpose_divisor_sum(n);
}

BigCount count_rot_transpose(std::uint32_t n) {
  require_positive(n, "count_rot_transpose");
  // alpha = a/2 + S/(2n), computed as (n a + S) / (2n).
  const BigCount a = count_rot(GridShape::square(n));
  return exact_div(BigCount(n) * a + transpose_divisor_sum(n), BigCount(2 * std::uint64_t{n}));
}

BigCount count_rotref_transpose(std::uint32_t n) {
  require_positive(n, "count_rotref_transpose");
  const std::uint64_t side = n;
  const GridShape shape = GridShape::square(n);
  const BigRational b = b1(shape) + b2(shape) + b3(shape) + b4(shape);

  BigRational value = b / 2 + BigRational(transpose_divisor_sum(n), BigCount(4 * side));
  if (side % 2 == 1) {
    // n^2 = 1 mod 8 for odd n, so (n^2 - 5)/4 is an integer (-1 at n = 1).
    value += pow2_signed(static_cast<std::int64_t>(exact_div(side * side + 3, 4)) - 2);
  } else {
    value += 5 * pow2_signed(static_cast<std::int64_t>(exact_div(side * side, 4)) - 3);
  }
  return require_count(value);
}

BigCount rho_zeta_sum(std::uint32_t n) {
  require_at_least_three(n, "rho_zeta_sum");
  const std::uint64_t side = n;
  const BigCount n_squared = side * side;
  if (side % 2 == 1) return n_squared * pow2(exact_div(side * side + 3, 4));
  return 5 * n_squared * pow2(exact_div(side * side, 4) - 1);
}

CycleStructurePrediction predict_transpose_cycles(std::uint32_t n, std::uint32_t i,
                                                  std::uint32_t j) {
  require_positive(n, "predict_transpose_cycles");
  require_residues(n, i, j, "predict_transpose_cycles");
  if (i == 0 && j == 0) return involution_with_diagonal(n);
  const std::uint64_t d = n / gcd((std::uint64_t{i} + j) % n, n);
  return order_two_d(n, d);
}

CycleStructurePrediction predict_rho_zeta_cycles(std::uint32_t n, std::uint32_t i,
                                                 std::uint32_t j) {
  require_at_least_three(n, "predict_rho_zeta_cycles");
  require_residues(n, i, j, "predict_rho_zeta_cycles");
  const std::uint64_t side = n;
  CycleStructurePrediction out;
  out.element_order = 4;
  if (side % 2 == 1) {
    out.cycles[1] = 1;
    out.cycles[4] = exact_div(side * side - 1, 4);
  } else if ((i + j) % 2 == 1) {
    out.cycles[1] = 2;
    out.cycles[2] = 1;
    out.cycles[4] = exact_div(side * side - 4, 4);
  } else {
    out.cycles[4] = exact_div(side * side, 4);
  }
  return out;
}

CycleStructurePrediction predict_rho_theta_zeta_cycles(std::uint32_t n, std::uint32_t i,
                                                       std::uint32_t j) {
  require_at_least_three(n, "predict_rho_theta_zeta_cycles");
  require_residues(n, i, j, "predict_rho_theta_zeta_cycles");
  if (i == j) return involution_with_diagonal(n);
  const std::uint64_t diff = i > j ? i - j : j - i;
  return order_two_d(n, n / gcd(diff, n));
}

}  // namespace torus::formulas
