#pragma once

// Burnside counting and exhaustive orbit enumeration over m x n binary
// arrays.
//
// Arrays are bit-packed row-major with cell (0,0) in the most significant
// position, so a 3x3 array with a single 1 in its bottom-right cell has
// value 1. Canonical representatives are orbit minima under that value.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/group.hpp"
#include "torus/numtheory.hpp"
#include "torus/shape.hpp"

namespace torus {

inline constexpr std::uint64_t kMaxPackedCells = 64;
inline constexpr std::uint64_t kDefaultEnumerationCap = 25;

class TorArray {
 public:
  /// Throws std::invalid_argument if the shape exceeds 64 cells or `bits`
  /// has anything set above the top cell.
  TorArray(const GridShape& shape, std::uint64_t bits);

  static TorArray zeros(const GridShape& shape) { return {shape, 0}; }
  static TorArray ones(const GridShape& shape);
  /// Parses a row-major string of '0'/'1', optionally with '/' between rows.
  static TorArray parse(const GridShape& shape, std::string_view text);

  const GridShape& shape() const { return shape_; }
  std::uint64_t value() const { return bits_; }

  bool cell(std::uint64_t index) const;
  bool at(std::uint32_t row, std::uint32_t col) const { return cell(shape_.index(row, col)); }
  TorArray with_cell(std::uint64_t index, bool on) const;

  int popcount() const;
  /// m*n characters, row-major.
  std::string bit_string() const;
  /// Rows joined with '/', e.g. "000/000/001".
  std::string matrix_string() const;

  friend bool operator==(const TorArray&, const TorArray&) = default;

 private:
  GridShape shape_;
  std::uint64_t bits_ = 0;
};

struct Orbit {
  TorArray representative;
  std::uint64_t size = 0;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const GridShape& shape, std::uint64_t cap);
};

/// Result bit at p(c) is the input bit at c. Throws on shape mismatch.
TorArray apply(const CellPermutation& p, const TorArray& a);

/// Average over the group of 2^(cycles on the cells).
BigCount burnside_count(SymmetryRegime regime, const GridShape& shape);

TorArray canonical_form(const TorArray& a, SymmetryRegime regime);
Orbit orbit_of(const TorArray& a, SymmetryRegime regime);

struct EnumerationOptions {
  std::uint64_t max_cells = kDefaultEnumerationCap;
  unsigned jobs = 1;
};

/// Every orbit of the regime on 2^(mn) arrays, ordered by (popcount of the
/// representative, representative value).
std::vector<Orbit> enumerate_orbits(SymmetryRegime regime, const GridShape& shape,
                                    const EnumerationOptions& options = {});

/// Group of permutations compiled to byte lookup tables, for applying the
/// whole group to packed arrays quickly.
class PackedGroup {
 public:
  PackedGroup(SymmetryRegime regime, const GridShape& shape);

  const GridShape& shape() const { return shape_; }
  std::size_t order() const { return order_; }

  std::uint64_t apply(std::size_t element, std::uint64_t bits) const;

  /// True iff no group element maps `bits` to a smaller value.
  bool is_canonical(std::uint64_t bits) const;
  std::uint64_t canonical(std::uint64_t bits) const;
  /// Distinct images of `bits`, ascending.
  std::vector<std::uint64_t> orbit(std::uint64_t bits) const;

 private:
  GridShape shape_;
  std::size_t order_ = 0;
  std::size_t chunks_ = 0;
  // tables_[(element * chunks_ + chunk) * 256 + byte]
  std::vector<std::uint64_t> tables_;
};

}  // namespace torus
