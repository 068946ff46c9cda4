#pragma once

// Concrete permutations of the cells of an m x n grid.
//
// Cell (k, l) has index k * n + l. A permutation maps each cell index to
// the index the cell's content moves to.
//
// Composition convention: compose(a, b) applies b first, then a, so that
// compose(a, b) is the product "ab" read as function composition. Under
// this convention sigma zeta == zeta tau, and the other product rules
// hold as written.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torus/shape.hpp"

namespace torus {

enum class GeneratorKind {
  RowRotate,   // sigma: row r -> row r+1 (mod m)
  ColRotate,   // tau:   column c -> column c+1 (mod n)
  RowReflect,  // rho:   row r -> row m-1-r
  ColReflect,  // theta: column c -> column n-1-c
  Transpose,   // zeta:  (k, l) -> (l, k), square only
};

enum class SymmetryRegime {
  Rot,      // sigma, tau
  RotRef,   // sigma, tau, rho, theta
  RotT,     // sigma, tau, zeta
  RotRefT,  // sigma, tau, rho, theta, zeta
};

std::string_view to_string(SymmetryRegime regime);

/// Parses "rot", "rotref", "rott" or "rotreft".
SymmetryRegime parse_regime(std::string_view name);

bool regime_has_transpose(SymmetryRegime regime);
std::vector<GeneratorKind> regime_generators(SymmetryRegime regime);

/// Throws std::invalid_argument if the regime needs a square grid and
/// the shape is not square.
void check_regime_shape(SymmetryRegime regime, const GridShape& shape);

class CellPermutation {
 public:
  static CellPermutation identity(const GridShape& shape);
  static CellPermutation generator(GeneratorKind kind, const GridShape& shape);

  /// Validates that `mapping` is a bijection on the shape's cells.
  CellPermutation(const GridShape& shape, std::vector<std::uint32_t> mapping);

  const GridShape& shape() const { return shape_; }
  std::span<const std::uint32_t> mapping() const { return mapping_; }
  std::uint32_t image(std::uint64_t cell) const { return mapping_[cell]; }
  std::size_t size() const { return mapping_.size(); }

  bool is_identity() const;
  CellPermutation inverse() const;
  CellPermutation power(std::int64_t exponent) const;

  /// Length-prefixed byte encoding of the mapping; equal keys iff equal
  /// permutations on equal shapes.
  std::string key() const;

  friend bool operator==(const CellPermutation&, const CellPermutation&) = default;

 private:
  CellPermutation(const GridShape& shape, std::vector<std::uint32_t> mapping, bool);

  GridShape shape_;
  std::vector<std::uint32_t> mapping_;
};

CellPermutation make_generator(GeneratorKind kind, const GridShape& shape);

/// a after b. Throws std::invalid_argument on shape mismatch.
CellPermutation compose(const CellPermutation& a, const CellPermutation& b);

/// sigma^i tau^j; negative exponents give inverses.
CellPermutation rotation_product(const GridShape& shape, std::int64_t i, std::int64_t j);

/// Composes left to right as a product: compose_all({a, b, c}) == a b c.
CellPermutation compose_all(std::span<const CellPermutation> factors);

std::uint64_t cycle_count(const CellPermutation& p);
CycleStructure cycle_structure(const CellPermutation& p);
std::uint64_t element_order(const CellPermutation& p);

/// Closure of the regime's generators under composition, in breadth-first
/// discovery order starting from the identity.
std::vector<CellPermutation> generate_group(SymmetryRegime regime, const GridShape& shape);

}  // namespace torus
