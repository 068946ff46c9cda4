#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "torus/counting.hpp"
#include "torus/formulas.hpp"
#include "torus/reference_data.hpp"

using namespace torus;

namespace {

constexpr SymmetryRegime kAllRegimes[] = {SymmetryRegime::Rot, SymmetryRegime::RotRef,
                                          SymmetryRegime::RotT, SymmetryRegime::RotRefT};

std::vector<oracle::NaiveOrbit> as_naive(const std::vector<Orbit>& orbits) {
  std::vector<oracle::NaiveOrbit> out;
  for (const auto& o : orbits) out.push_back({o.representative.value(), o.size});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("TorArray packing") {
  const GridShape s = GridShape::square(3);
  const TorArray a = TorArray::parse(s, "000/000/001");
  CHECK(a.value() == 1);
  CHECK(a.at(2, 2));
  CHECK(a.bit_string() == "000000001");
  CHECK(a.matrix_string() == "000/000/001");
  CHECK(TorArray::parse(s, "100000000").value() == 256);
  CHECK(TorArray::ones(s).value() == 511);
  CHECK(TorArray::ones(s).popcount() == 9);
  CHECK(a.with_cell(0, true).value() == 257);
  CHECK_THROWS_AS(TorArray(s, 512), std::invalid_argument);
  CHECK_THROWS_AS(TorArray::parse(s, "0000"), std::invalid_argument);
  CHECK_THROWS_AS(TorArray::parse(s, "00000000x"), std::invalid_argument);
  CHECK_THROWS_AS(TorArray(GridShape(9, 9), 0), std::invalid_argument);
}

TEST_CASE("apply") {
  const GridShape s = GridShape::square(3);
  const TorArray a = TorArray::parse(s, "010/000/000");
  CHECK(apply(CellPermutation::identity(s), a) == a);
  CHECK(apply(make_generator(GeneratorKind::Transpose, s), a) == TorArray::parse(s, "000/100/000"));
  CHECK(apply(make_generator(GeneratorKind::RowRotate, s), TorArray::ones(s)) == TorArray::ones(s));
  CHECK(apply(make_generator(GeneratorKind::RowRotate, s), a) == TorArray::parse(s, "000/010/000"));
  CHECK_THROWS_AS(apply(CellPermutation::identity(GridShape(2, 2)), a), std::invalid_argument);
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937_64 rng(7);
  const GridShape s = GridShape::square(4);
  const auto group = generate_group(SymmetryRegime::RotRefT, s);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const TorArray x(s, rng() & 0xffff);
    const auto& a = group[pick(rng)];
    const auto& b = group[pick(rng)];
    REQUIRE(apply(compose(a, b), x) == apply(a, apply(b, x)));
  }
}

TEST_CASE("PackedGroup agrees with the slow action") {
  for (SymmetryRegime regime : kAllRegimes) {
    const GridShape s = GridShape::square(5);
    const PackedGroup packed(regime, s);
    const auto group = generate_group(regime, s);
    REQUIRE(packed.order() == group.size());
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const TorArray x(s, rng() & ((std::uint64_t{1} << 25) - 1));
      for (std::size_t e = 0; e < group.size(); e += 7) {
        REQUIRE(packed.apply(e, x.value()) == apply(group[e], x).value());
      }
    }
  }
}

TEST_CASE("burnside_count") {
  CHECK(burnside_count(SymmetryRegime::Rot, GridShape::square(3)) == 64);
  CHECK(burnside_count(SymmetryRegime::RotRefT, GridShape::square(3)) == 26);
  CHECK(burnside_count(SymmetryRegime::RotT, GridShape::square(2)) == 6);
  CHECK_THROWS_AS(burnside_count(SymmetryRegime::RotRefT, GridShape(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("burnside_count matches the closed forms") {
  for (std::uint32_t m = 1; m <= 6; ++m) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(burnside_count(SymmetryRegime::Rot, {m, n}) == formulas::count_rot({m, n}));
      REQUIRE(burnside_count(SymmetryRegime::RotRef, {m, n}) == formulas::count_rotref({m, n}));
    }
  }
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const GridShape s = GridShape::square(n);
    CAPTURE(n);
    REQUIRE(burnside_count(SymmetryRegime::RotT, s) == formulas::count_rot_transpose(n));
    REQUIRE(burnside_count(SymmetryRegime::RotRefT, s) == formulas::count_rotref_transpose(n));
  }
}

TEST_CASE("enumerate_orbits matches flood fill") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const GridShape s(m, n);
      REQUIRE(as_naive(enumerate_orbits(SymmetryRegime::Rot, s)) ==
              oracle::flood_fill_orbits(m, n, false, false));
      REQUIRE(as_naive(enumerate_orbits(SymmetryRegime::RotRef, s)) ==
              oracle::flood_fill_orbits(m, n, true, false));
      if (m != n) continue;
      REQUIRE(as_naive(enumerate_orbits(SymmetryRegime::RotT, s)) ==
              oracle::flood_fill_orbits(m, n, false, true));
      REQUIRE(as_naive(enumerate_orbits(SymmetryRegime::RotRefT, s)) ==
              oracle::flood_fill_orbits(m, n, true, true));
    }
  }
}

TEST_CASE("enumerate_orbits small cases") {
  const auto one = enumerate_orbits(SymmetryRegime::RotRefT, GridShape::square(1));
  REQUIRE(one.size() == 2);
  CHECK(one[0].size == 1);
  CHECK(one[1].size == 1);

  const auto rott = enumerate_orbits(SymmetryRegime::RotT, GridShape::square(3));
  CHECK(rott.size() == 44);
  const auto rotreft = enumerate_orbits(SymmetryRegime::RotRefT, GridShape::square(3));
  REQUIRE(rotreft.size() == 26);
  CHECK(rotreft.front().size == 1);
  CHECK(rotreft.back().size == 1);
  CHECK(rotreft.back().representative == TorArray::ones(GridShape::square(3)));
}

TEST_CASE("enumerate_orbits ordering and partition") {
  for (SymmetryRegime regime : kAllRegimes) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const GridShape s = GridShape::square(n);
      const auto orbits = enumerate_orbits(regime, s);
      const std::uint64_t order = generate_group(regime, s).size();
      std::uint64_t total = 0;
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        total += orbits[k].size;
        REQUIRE(order % orbits[k].size == 0);
        REQUIRE(canonical_form(orbits[k].representative, regime) == orbits[k].representative);
        if (k == 0) continue;
        const auto& prev = orbits[k - 1].representative;
        const auto& cur = orbits[k].representative;
        REQUIRE((prev.popcount() < cur.popcount() ||
                 (prev.popcount() == cur.popcount() && prev.value() < cur.value())));
      }
      REQUIRE(total == (std::uint64_t{1} << s.cells()));
    }
  }
}

TEST_CASE("representatives are exactly the canonical fixed points") {
  const GridShape s = GridShape::square(3);
  for (SymmetryRegime regime : kAllRegimes) {
    std::set<std::uint64_t> reps;
    for (const auto& o : enumerate_orbits(regime, s)) reps.insert(o.representative.value());
    for (std::uint64_t v = 0; v < 512; ++v) {
      const bool fixed = canonical_form(TorArray(s, v), regime).value() == v;
      REQUIRE(fixed == (reps.count(v) == 1));
    }
  }
}

TEST_CASE("3x3 orbit listings match the published tables") {
  const GridShape s = GridShape::square(3);
  auto check_table = [&](SymmetryRegime regime, std::span<const reference::OrbitEntry> table) {
    std::vector<oracle::NaiveOrbit> want;
    std::uint64_t total = 0;
    for (const auto& e : table) {
      want.push_back({e.representative, e.size});
      total += e.size;
    }
    std::sort(want.begin(), want.end());
    CHECK(total == 512);
    CHECK(as_naive(enumerate_orbits(regime, s)) == want);
  };
  check_table(SymmetryRegime::RotT, reference::rott_3x3_orbits());
  check_table(SymmetryRegime::RotRefT, reference::rotreft_3x3_orbits());
}

TEST_CASE("parallel enumeration is identical to serial") {
  const GridShape s = GridShape::square(4);
  for (SymmetryRegime regime : kAllRegimes) {
    const auto serial = enumerate_orbits(regime, s, {25, 1});
    for (unsigned jobs : {2u, 3u, 8u}) REQUIRE(enumerate_orbits(regime, s, {25, jobs}) == serial);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_orbits(SymmetryRegime::Rot, GridShape::square(6)),
                  EnumerationCapExceeded);
  CHECK_THROWS_AS(enumerate_orbits(SymmetryRegime::Rot, GridShape::square(3), {8, 1}),
                  EnumerationCapExceeded);
  try {
    enumerate_orbits(SymmetryRegime::Rot, GridShape::square(6));
  } catch (const EnumerationCapExceeded& e) {
    CHECK(std::string(e.what()).find("--max-cells") != std::string::npos);
  }
}

TEST_CASE("canonical_form") {
  const GridShape s = GridShape::square(3);
  for (SymmetryRegime regime : kAllRegimes) {
    CHECK(canonical_form(TorArray::zeros(s), regime) == TorArray::zeros(s));
  }
  CHECK(canonical_form(TorArray::parse(s, "000/010/000"), SymmetryRegime::RotT).value() == 1);
  CHECK_THROWS_AS(canonical_form(TorArray::zeros(GridShape(2, 3)), SymmetryRegime::RotT),
                  std::invalid_argument);
}

TEST_CASE("canonical_form is idempotent and constant on orbits") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t n : {3u, 4u}) {
    const GridShape s = GridShape::square(n);
    const std::uint64_t mask = (std::uint64_t{1} << s.cells()) - 1;
    for (SymmetryRegime regime : kAllRegimes) {
      const auto group = generate_group(regime, s);
      std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
      for (int trial = 0; trial < 1000; ++trial) {
        const TorArray a(s, rng() & mask);
        const TorArray c = canonical_form(a, regime);
        REQUIRE(c.value() <= a.value());
        REQUIRE(canonical_form(c, regime) == c);
        REQUIRE(canonical_form(apply(group[pick(rng)], a), regime) == c);
      }
    }
  }
}

TEST_CASE("orbit_of") {
  const GridShape s = GridShape::square(3);
  CHECK(orbit_of(TorArray::ones(s), SymmetryRegime::RotRefT).size == 1);
  const Orbit diagonal = orbit_of(TorArray::parse(s, "001/010/100"), SymmetryRegime::RotT);
  CHECK(diagonal.size == 3);
  CHECK(diagonal.representative.value() == 0b001'010'100);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const GridShape sq = GridShape::square(n);
    const Orbit single = orbit_of(TorArray(sq, 1), SymmetryRegime::RotT);
    CHECK(single.size == n * n);
    CHECK(single.representative.value() == 1);
  }
}

TEST_CASE("rotreft orbits are unions of rott orbits") {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    const GridShape s = GridShape::square(n);
    const PackedGroup coarse(SymmetryRegime::RotRefT, s);
    const auto fine = enumerate_orbits(SymmetryRegime::RotT, s);
    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& o : fine) merged[coarse.canonical(o.representative.value())] += o.size;
    const auto coarse_orbits = enumerate_orbits(SymmetryRegime::RotRefT, s);
    REQUIRE(merged.size() == coarse_orbits.size());
    for (const auto& o : coarse_orbits) REQUIRE(merged.at(o.representative.value()) == o.size);
  }
}
