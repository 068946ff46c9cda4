#include "torus/reference_data.hpp"

namespace torus::reference {
namespace {

constexpr std::array<SequenceValue, 12> kAlphaBeta{{
    {1, "2", "2"},
    {2, "6", "6"},
    {3, "44", "26"},
    {4, "2209", "805"},
    {5, "674384", "172112"},
    {6, "954623404", "239123150"},
    {7, "5744406453840", "1436120190288"},
    {8, "144115192471496836", "36028817512382026"},
    {9, "14925010120653819583840", "3731252531904348833632"},
    {10, "6338253001142965335834871200", "1584563250300891724601560272"},
    {11, "10985355337065423791175013899922368", "2746338834266358751489231123956672"},
    {12, "77433143050453552587418968170813573149024",
     "19358285762613388352671214587818634041520"},
}};

// Grouped by number of ones. Values are the 3x3 matrices read row-major,
// top-left cell most significant.
constexpr std::array<OrbitEntry, 44> kRotT3x3{{
    {0b000'000'000, 1},
    {0b000'000'001, 9},
    {0b000'000'011, 18}, {0b000'001'010, 9}, {0b000'001'100, 9},
    {0b000'000'111, 6}, {0b000'001'011, 9}, {0b000'001'101, 18}, {0b000'001'110, 18},
    {0b000'011'010, 9}, {0b000'011'100, 18}, {0b001'010'100, 3}, {0b001'100'010, 3},
    {0b000'001'111, 18}, {0b000'011'011, 9}, {0b000'011'101, 18}, {0b000'011'110, 18},
    {0b000'111'001, 18}, {0b001'001'110, 9}, {0b001'010'101, 9}, {0b001'010'110, 9},
    {0b001'100'011, 18},
    {0b000'011'111, 18}, {0b000'111'011, 18}, {0b001'001'111, 9}, {0b001'010'111, 18},
    {0b001'011'110, 9}, {0b001'100'111, 18}, {0b001'101'110, 18}, {0b001'110'101, 9},
    {0b001'110'110, 9},
    {0b000'111'111, 6}, {0b001'011'111, 9}, {0b001'101'111, 18}, {0b001'110'111, 18},
    {0b001'111'101, 9}, {0b001'111'110, 18}, {0b011'101'110, 3}, {0b011'110'101, 3},
    {0b001'111'111, 18}, {0b011'101'111, 9}, {0b011'110'111, 9},
    {0b011'111'111, 9},
    {0b111'111'111, 1},
}};

constexpr std::array<OrbitEntry, 26> kRotRefT3x3{{
    {0b000'000'000, 1},
    {0b000'000'001, 9},
    {0b000'000'011, 18}, {0b000'001'010, 18},
    {0b000'000'111, 6}, {0b000'001'011, 36}, {0b000'001'110, 36}, {0b001'010'100, 6},
    {0b000'001'111, 36}, {0b000'011'011, 9}, {0b000'011'101, 36}, {0b001'001'110, 9},
    {0b001'010'101, 36},
    {0b000'011'111, 36}, {0b001'001'111, 9}, {0b001'010'111, 36}, {0b001'011'110, 36},
    {0b001'110'110, 9},
    {0b000'111'111, 6}, {0b001'011'111, 36}, {0b001'110'111, 36}, {0b011'101'110, 6},
    {0b001'111'111, 18}, {0b011'101'111, 18},
    {0b011'111'111, 9},
    {0b111'111'111, 1},
}};

}  // namespace

std::span<const SequenceValue> alpha_beta_table() { return kAlphaBeta; }
std::span<const OrbitEntry> rott_3x3_orbits() { return kRotT3x3; }
std::span<const OrbitEntry> rotreft_3x3_orbits() { return kRotRefT3x3; }

}  // namespace torus::reference
