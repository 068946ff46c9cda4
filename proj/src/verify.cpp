#include "torus/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "torus/counting.hpp"
#include "torus/formulas.hpp"
#include "torus/group.hpp"
#include "torus/reference_data.hpp"

namespace torus {
namespace {

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    if (ok) {
      ++report_.passed;
      out_ << name << " ok\n";
      return;
    }
    ++report_.failed;
    const std::string line = name + " FAIL" + (detail.empty() ? "" : ": " + detail);
    if (!report_.first_failure) report_.first_failure = line;
    out_ << line << "\n";
  }

  VerifyReport report() const { return report_; }

 private:
  std::ostream& out_;
  VerifyReport report_;
};

std::string shape_label(std::uint32_t m, std::uint32_t n) {
  return std::to_string(m) + "x" + std::to_string(n);
}

BigCount formula_count(SymmetryRegime regime, const GridShape& shape) {
  switch (regime) {
    case SymmetryRegime::Rot: return formulas::count_rot(shape);
    case SymmetryRegime::RotRef: return formulas::count_rotref(shape);
    case SymmetryRegime::RotT: return formulas::count_rot_transpose(shape.n);
    case SymmetryRegime::RotRefT: return formulas::count_rotref_transpose(shape.n);
  }
  return 0;
}

void check_reference_table(const VerifyOptions& options, Checker& checker) {
  std::map<std::uint32_t, std::pair<BigCount, BigCount>> expected;
  for (const auto& row : reference::alpha_beta_table()) {
    expected[row.n] = {parse_decimal(row.alpha), parse_decimal(row.beta)};
  }
  for (std::uint32_t n = 1; n <= options.max_n; ++n) {
    std::optional<BigCount> alpha;
    std::optional<BigCount> beta;
    if (auto it = expected.find(n); it != expected.end()) {
      alpha = it->second.first;
      beta = it->second.second;
    }
    if (auto it = options.alpha_override.find(n); it != options.alpha_override.end()) {
      alpha = it->second;
    }
    if (auto it = options.beta_override.find(n); it != options.beta_override.end()) {
      beta = it->second;
    }
    const std::string arg = "(" + std::to_string(n) + ")";
    if (alpha) {
      const BigCount got = formulas::count_rot_transpose(n);
      checker.check("alpha" + arg + "=" + to_decimal(got), got == *alpha,
                    "expected " + to_decimal(*alpha));
    }
    if (beta) {
      const BigCount got = formulas::count_rotref_transpose(n);
      checker.check("beta" + arg + "=" + to_decimal(got), got == *beta,
                    "expected " + to_decimal(*beta));
    }
  }
}

void check_group_orders(const VerifyOptions& options, Checker& checker) {
  for (std::uint32_t n = 1; n <= options.max_n; ++n) {
    const GridShape shape = GridShape::square(n);
    const std::uint64_t sq = std::uint64_t{n} * n;
    const std::uint64_t rott_expected = n == 1 ? 1 : 2 * sq;
    const std::uint64_t rotreft_expected = n == 1 ? 1 : n == 2 ? 8 : 8 * sq;
    const std::size_t rott = generate_group(SymmetryRegime::RotT, shape).size();
    const std::size_t rotreft = generate_group(SymmetryRegime::RotRefT, shape).size();
    checker.check("order rott " + shape_label(n, n) + "=" + std::to_string(rott),
                  rott == rott_expected, "expected " + std::to_string(rott_expected));
    checker.check("order rotreft " + shape_label(n, n) + "=" + std::to_string(rotreft),
                  rotreft == rotreft_expected, "expected " + std::to_string(rotreft_expected));
  }
}

void check_burnside(const VerifyOptions& options, Checker& checker) {
  const std::uint32_t rect_limit = std::min<std::uint32_t>(options.max_n, 6);
  for (SymmetryRegime regime : {SymmetryRegime::Rot, SymmetryRegime::RotRef}) {
    for (std::uint32_t m = 1; m <= rect_limit; ++m) {
      for (std::uint32_t n = 1; n <= rect_limit; ++n) {
        const GridShape shape(m, n);
        const BigCount formula = formula_count(regime, shape);
        const BigCount burnside = burnside_count(regime, shape);
        checker.check("burnside " + std::string(to_string(regime)) + " " + shape_label(m, n) +
                          "=" + to_decimal(burnside),
                      formula == burnside, "formula gives " + to_decimal(formula));
      }
    }
  }
  const std::uint32_t square_limit = std::min<std::uint32_t>(options.max_n, 12);
  for (SymmetryRegime regime : {SymmetryRegime::RotT, SymmetryRegime::RotRefT}) {
    for (std::uint32_t n = 1; n <= square_limit; ++n) {
      const GridShape shape = GridShape::square(n);
      const BigCount formula = formula_count(regime, shape);
      const BigCount burnside = burnside_count(regime, shape);
      checker.check("burnside " + std::string(to_string(regime)) + " " + shape_label(n, n) + "=" +
                        to_decimal(burnside),
                    formula == burnside, "formula gives " + to_decimal(formula));
    }
  }
}

void check_enumeration(const VerifyOptions& options, Checker& checker) {
  const EnumerationOptions enum_options{options.max_cells, options.jobs};
  for (SymmetryRegime regime : {SymmetryRegime::Rot, SymmetryRegime::RotRef, SymmetryRegime::RotT,
                                SymmetryRegime::RotRefT}) {
    for (std::uint32_t m = 1; m <= options.max_n; ++m) {
      for (std::uint32_t n = 1; n <= options.max_n; ++n) {
        if (regime_has_transpose(regime) && m != n) continue;
        const GridShape shape(m, n);
        if (shape.cells() > options.max_cells) continue;
        const std::vector<Orbit> orbits = enumerate_orbits(regime, shape, enum_options);
        const std::uint64_t group_order = generate_group(regime, shape).size();
        BigCount total = 0;
        bool sizes_divide = true;
        for (const Orbit& orbit : orbits) {
          total += orbit.size;
          sizes_divide = sizes_divide && group_order % orbit.size == 0;
        }
        const BigCount formula = formula_count(regime, shape);
        const std::string label =
            "enumerate " + std::string(to_string(regime)) + " " + shape_label(m, n);
        checker.check(label + "=" + std::to_string(orbits.size()), formula == orbits.size(),
                      "formula gives " + to_decimal(formula));
        checker.check(label + " partition", total == pow2(shape.cells()) && sizes_divide,
                      "orbit sizes sum to " + to_decimal(total));
      }
    }
  }
}

void check_orbit_tables(const VerifyOptions& options, Checker& checker) {
  if (options.max_n < 3 || options.max_cells < 9) return;
  const GridShape shape = GridShape::square(3);
  auto compare = [&](SymmetryRegime regime, std::span<const reference::OrbitEntry> table) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> want;
    for (const auto& e : table) want.emplace_back(e.representative, e.size);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
    for (const Orbit& o : enumerate_orbits(regime, shape, {options.max_cells, options.jobs})) {
      got.emplace_back(o.representative.value(), o.size);
    }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    std::string detail;
    if (got.size() != want.size()) {
      detail = std::to_string(got.size()) + " orbits, expected " + std::to_string(want.size());
    } else {
      for (std::size_t k = 0; k < got.size(); ++k) {
        if (got[k] == want[k]) continue;
        detail = "orbit " + TorArray(shape, got[k].first).matrix_string() + " size " +
                 std::to_string(got[k].second) + ", expected " +
                 TorArray(shape, want[k].first).matrix_string() + " size " +
                 std::to_string(want[k].second);
        break;
      }
    }
    checker.check("table " + std::string(to_string(regime)) + " 3x3 (" +
                      std::to_string(want.size()) + " orbits)",
                  detail.empty(), detail);
  };
  compare(SymmetryRegime::RotT, reference::rott_3x3_orbits());
  compare(SymmetryRegime::RotRefT, reference::rotreft_3x3_orbits());
}

std::string describe(const CycleStructure& cycles) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [length, count] : cycles) {
    os << (first ? "" : ", ") << length << ": " << count;
    first = false;
  }
  os << "}";
  return os.str();
}

void check_cycle_structure(const VerifyOptions& options, Checker& checker) {
  for (std::uint32_t n = 1; n <= options.max_n; ++n) {
    const GridShape shape = GridShape::square(n);
    const CellPermutation zeta = make_generator(GeneratorKind::Transpose, shape);
    const CellPermutation rho = make_generator(GeneratorKind::RowReflect, shape);
    const CellPermutation theta = make_generator(GeneratorKind::ColReflect, shape);
    const CellPermutation rho_zeta = compose(rho, zeta);
    const CellPermutation theta_zeta = compose(theta, zeta);
    const CellPermutation rho_theta_zeta = compose(rho, theta_zeta);

    std::string transpose_fail;
    std::string rho_zeta_fail;
    std::string rho_theta_zeta_fail;
    BigCount sum_e = 0, sum_f = 0, sum_g = 0, sum_h = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        const CellPermutation rot = rotation_product(shape, i, j);
        const std::string at = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";

        const CellPermutation e = compose(rot, zeta);
        sum_e += pow2(cycle_count(e));
        const auto pe = formulas::predict_transpose_cycles(n, i, j);
        if (transpose_fail.empty() &&
            (pe.cycles != cycle_structure(e) || pe.element_order != element_order(e))) {
          transpose_fail = at + " actual " + describe(cycle_structure(e)) + " predicted " +
                           describe(pe.cycles);
        }
        if (n < 3) continue;

        const CellPermutation f = compose(rot, rho_zeta);
        const CellPermutation g = compose(rot, theta_zeta);
        const CellPermutation h = compose(rot, rho_theta_zeta);
        sum_f += pow2(cycle_count(f));
        sum_g += pow2(cycle_count(g));
        sum_h += pow2(cycle_count(h));
        const auto pf = formulas::predict_rho_zeta_cycles(n, i, j);
        if (rho_zeta_fail.empty() &&
            (pf.cycles != cycle_structure(f) || pf.element_order != element_order(f))) {
          rho_zeta_fail = at + " actual " + describe(cycle_structure(f)) + " predicted " +
                          describe(pf.cycles);
        }
        const auto ph = formulas::predict_rho_theta_zeta_cycles(n, i, j);
        if (rho_theta_zeta_fail.empty() &&
            (ph.cycles != cycle_structure(h) || ph.element_order != element_order(h))) {
          rho_theta_zeta_fail = at + " actual " + describe(cycle_structure(h)) + " predicted " +
                                describe(ph.cycles);
        }
      }
    }
    const std::string suffix = " n=" + std::to_string(n);
    checker.check("cycles sigma^i tau^j zeta" + suffix, transpose_fail.empty(), transpose_fail);
    const BigCount closed_e = formulas::transpose_cycle_sum(n);
    checker.check("sum 2^E" + suffix + "=" + to_decimal(sum_e), sum_e == closed_e,
                  "closed form gives " + to_decimal(closed_e));
    if (n < 3) continue;
    checker.check("cycles sigma^i tau^j rho zeta" + suffix, rho_zeta_fail.empty(), rho_zeta_fail);
    checker.check("cycles sigma^i tau^j rho theta zeta" + suffix, rho_theta_zeta_fail.empty(),
                  rho_theta_zeta_fail);
    const BigCount closed_f = formulas::rho_zeta_sum(n);
    checker.check("sum 2^F" + suffix + "=" + to_decimal(sum_f), sum_f == closed_f,
                  "closed form gives " + to_decimal(closed_f));
    checker.check("sum 2^G = sum 2^F" + suffix, sum_g == sum_f,
                  to_decimal(sum_g) + " vs " + to_decimal(sum_f));
    checker.check("sum 2^H = sum 2^E" + suffix, sum_h == sum_e,
                  to_decimal(sum_h) + " vs " + to_decimal(sum_e));
  }
}

void check_product_rules(const VerifyOptions& options, Checker& checker) {
  for (std::uint32_t n = 1; n <= options.max_n; ++n) {
    const GridShape shape = GridShape::square(n);
    const auto s = make_generator(GeneratorKind::RowRotate, shape);
    const auto t = make_generator(GeneratorKind::ColRotate, shape);
    const auto r = make_generator(GeneratorKind::RowReflect, shape);
    const auto th = make_generator(GeneratorKind::ColReflect, shape);
    const auto z = make_generator(GeneratorKind::Transpose, shape);
    const std::array<std::pair<const char*, bool>, 7> rules{{
        {"sigma tau = tau sigma", compose(s, t) == compose(t, s)},
        {"sigma rho = rho sigma^-1", compose(s, r) == compose(r, s.inverse())},
        {"tau theta = theta tau^-1", compose(t, th) == compose(th, t.inverse())},
        {"sigma zeta = zeta tau", compose(s, z) == compose(z, t)},
        {"tau zeta = zeta sigma", compose(t, z) == compose(z, s)},
        {"rho zeta = zeta theta", compose(r, z) == compose(z, th)},
        {"theta zeta = zeta rho", compose(th, z) == compose(z, r)},
    }};
    std::string failed;
    for (const auto& [name, ok] : rules) {
      if (!ok && failed.empty()) failed = name;
    }
    const auto rtz = compose(r, compose(th, z));
    for (std::uint32_t i = 0; i < n && failed.empty(); ++i) {
      for (std::uint32_t j = 0; j < n && failed.empty(); ++j) {
        const auto rot = rotation_product(shape, i, j);
        const auto e = compose(rot, z);
        if (compose(e, e) != rotation_product(shape, i + j, i + j)) {
          failed = "(sigma^i tau^j zeta)^2 at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        const auto h = compose(rot, rtz);
        const std::int64_t diff = std::int64_t{i} - std::int64_t{j};
        if (compose(h, h) != rotation_product(shape, diff, -diff)) {
          failed =
              "(sigma^i tau^j rho theta zeta)^2 at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    checker.check("product rules n=" + std::to_string(n), failed.empty(), failed);
  }
}

void check_correction_identities(const VerifyOptions& options, Checker& checker) {
  using formulas::b1, formulas::b2, formulas::b3, formulas::b4;
  for (std::uint32_t k = 1; k <= options.max_n; ++k) {
    std::string failed;
    for (std::uint32_t small : {1u, 2u}) {
      const GridShape rows(small, k);
      const GridShape cols(k, small);
      if (b1(rows) != b2(rows)) failed = "b1(" + shape_label(small, k) + ") != b2";
      if (b3(rows) != b4(rows)) failed = "b3(" + shape_label(small, k) + ") != b4";
      if (b1(cols) != b3(cols)) failed = "b1(" + shape_label(k, small) + ") != b3";
      if (b2(cols) != b4(cols)) failed = "b2(" + shape_label(k, small) + ") != b4";
    }
    checker.check("b identities at size " + std::to_string(k), failed.empty(), failed);
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options, std::ostream& out) {
  Checker checker(out);
  check_reference_table(options, checker);
  check_group_orders(options, checker);
  check_product_rules(options, checker);
  check_cycle_structure(options, checker);
  check_correction_identities(options, checker);
  check_burnside(options, checker);
  check_enumeration(options, checker);
  check_orbit_tables(options, checker);
  out << checker.report().passed << " passed, " << checker.report().failed << " failed\n";
  return checker.report();
}

}  // namespace torus
