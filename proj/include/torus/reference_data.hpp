#pragma once

// Published reference values for toroidal binary arrays: the alpha/beta
// sequences for n = 1..12 and the full 3x3 orbit listings (minimal
// representative in 9-bit row-major form, orbit size).

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace torus::reference {

struct SequenceValue {
  std::uint32_t n;
  std::string_view alpha;  // rotation + transposition
  std::string_view beta;   // rotation + reflection + transposition
};

struct OrbitEntry {
  std::uint64_t representative;
  std::uint64_t size;
};

std::span<const SequenceValue> alpha_beta_table();

/// The 44 orbits of 3x3 arrays under rotation and transposition.
std::span<const OrbitEntry> rott_3x3_orbits();

/// The 26 orbits of 3x3 arrays under rotation, reflection and transposition.
std::span<const OrbitEntry> rotreft_3x3_orbits();

}  // namespace torus::reference
