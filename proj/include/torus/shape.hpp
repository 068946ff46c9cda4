#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace torus {

/// Rows and columns of a toroidal array.
struct GridShape {
  std::uint32_t m = 1;
  std::uint32_t n = 1;

  GridShape() = default;
  GridShape(std::uint32_t rows, std::uint32_t cols) : m(rows), n(cols) {
    if (m == 0 || n == 0) {
      throw std::invalid_argument("grid shape must have m >= 1 and n >= 1");
    }
  }

  static GridShape square(std::uint32_t side) { return {side, side}; }

  std::uint64_t cells() const { return std::uint64_t{m} * n; }
  bool is_square() const { return m == n; }
  std::uint64_t index(std::uint32_t row, std::uint32_t col) const {
    return std::uint64_t{row} * n + col;
  }

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

inline std::string to_string(const GridShape& shape) {
  return std::to_string(shape.m) + "x" + std::to_string(shape.n);
}

/// Cycle length -> number of cycles of that length.
using CycleStructure = std::map<std::uint64_t, std::uint64_t>;

}  // namespace torus
