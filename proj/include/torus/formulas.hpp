#pragma once

// Closed-form orbit counts for toroidal binary arrays and the cycle
// structures predicted for the group elements that enter them.
//
//   a(m,n)   rows and columns rotate
//   b(m,n)   rows and columns rotate and reflect   (b = b1 + b2 + b3 + b4)
//   alpha(n) rotation plus transposition, square arrays only
//   beta(n)  rotation, reflection and transposition, square arrays only

#include <cstdint>

#include "torus/numtheory.hpp"
#include "torus/shape.hpp"

namespace torus::formulas {

BigCount count_rot(const GridShape& shape);

// The four parts of b(m,n). Individually they can be fractional for small
// shapes; only their sum is an orbit count.
BigRational b1(const GridShape& shape);
BigRational b2(const GridShape& shape);
BigRational b3(const GridShape& shape);
BigRational b4(const GridShape& shape);
BigCount count_rotref(const GridShape& shape);

/// Sum over all (i, j) of 2^(cycles of sigma^i tau^j zeta) on the n x n grid.
BigCount transpose_cycle_sum(std::uint32_t n);

BigCount count_rot_transpose(std::uint32_t n);
BigCount count_rotref_transpose(std::uint32_t n);

/// Sum over all (i, j) of 2^(cycles of sigma^i tau^j rho zeta). Needs n >= 3.
BigCount rho_zeta_sum(std::uint32_t n);

struct CycleStructurePrediction {
  std::uint64_t element_order = 1;
  CycleStructure cycles;

  friend bool operator==(const CycleStructurePrediction&,
                         const CycleStructurePrediction&) = default;
};

/// Predicted cycles of sigma^i tau^j zeta on the n x n grid. Any n >= 1;
/// (0, 0) is the bare transposition.
CycleStructurePrediction predict_transpose_cycles(std::uint32_t n, std::uint32_t i,
                                                  std::uint32_t j);

/// Predicted cycles of sigma^i tau^j rho zeta. Only for n >= 3, where the
/// full group of order 8n^2 acts.
CycleStructurePrediction predict_rho_zeta_cycles(std::uint32_t n, std::uint32_t i,
                                                 std::uint32_t j);

/// Predicted cycles of sigma^i tau^j rho theta zeta. Only for n >= 3.
CycleStructurePrediction predict_rho_theta_zeta_cycles(std::uint32_t n, std::uint32_t i,
                                                       std::uint32_t j);

}  // namespace torus::formulas
