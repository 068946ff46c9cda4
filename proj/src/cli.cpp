#include "torus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "torus/counting.hpp"
#include "torus/formulas.hpp"
#include "torus/group.hpp"
#include "torus/verify.hpp"

namespace torus::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeArgs {
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> n;

  GridShape resolve(SymmetryRegime regime) const {
    if (!m && !n) throw UsageError("give the grid size with --n (and --m for rectangles)");
    const GridShape shape(m.value_or(*n), n.value_or(*m));
    if (regime_has_transpose(regime) && !shape.is_square()) {
      throw UsageError("regime " + std::string(to_string(regime)) +
                       " needs a square grid; got --m " + std::to_string(shape.m) + " --n " +
                       std::to_string(shape.n));
    }
    return shape;
  }
};

void add_shape_options(CLI::App& cmd, ShapeArgs& shape) {
  cmd.add_option("--m", shape.m, "Number of rows (defaults to --n)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--n", shape.n, "Number of columns (defaults to --m)")
      ->check(CLI::PositiveNumber);
}

const std::vector<std::string> kRegimes{"rot", "rotref", "rott", "rotreft"};

BigCount formula_count(SymmetryRegime regime, const GridShape& shape) {
  switch (regime) {
    case SymmetryRegime::Rot: return formulas::count_rot(shape);
    case SymmetryRegime::RotRef: return formulas::count_rotref(shape);
    case SymmetryRegime::RotT: return formulas::count_rot_transpose(shape.n);
    case SymmetryRegime::RotRefT: return formulas::count_rotref_transpose(shape.n);
  }
  return 0;
}

int cmd_count(const std::string& regime_name, const ShapeArgs& shape_args,
              const std::string& method, const std::string& format, std::uint64_t max_cells,
              unsigned jobs, std::ostream& out) {
  const SymmetryRegime regime = parse_regime(regime_name);
  const GridShape shape = shape_args.resolve(regime);
  if (format == "bfile") throw UsageError("--format bfile is only valid for the bfile command");

  BigCount count;
  if (method == "formula") {
    count = formula_count(regime, shape);
  } else if (method == "burnside") {
    count = burnside_count(regime, shape);
  } else {
    count = enumerate_orbits(regime, shape, {max_cells, jobs}).size();
  }

  if (format == "table") {
    out << to_decimal(count) << "\n";
  } else if (format == "csv") {
    out << "regime,m,n,method,count\n"
        << regime_name << "," << shape.m << "," << shape.n << "," << method << ","
        << to_decimal(count) << "\n";
  } else {
    ordered_json doc;
    doc["regime"] = regime_name;
    doc["m"] = shape.m;
    doc["n"] = shape.n;
    doc["method"] = method;
    doc["count"] = to_decimal(count);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_orbits(const std::string& regime_name, const ShapeArgs& shape_args,
               const std::string& format, std::uint64_t max_cells, unsigned jobs,
               std::ostream& out) {
  const SymmetryRegime regime = parse_regime(regime_name);
  const GridShape shape = shape_args.resolve(regime);
  if (format == "bfile") throw UsageError("--format bfile is only valid for the bfile command");
  const std::vector<Orbit> orbits = enumerate_orbits(regime, shape, {max_cells, jobs});

  if (format == "table") {
    out << "# " << regime_name << " " << to_string(shape) << ": " << orbits.size()
        << " orbits\n";
    out << "# ones size bits matrix\n";
    for (const Orbit& o : orbits) {
      out << o.representative.popcount() << " " << o.size << " " << o.representative.bit_string()
          << " " << o.representative.matrix_string() << "\n";
    }
  } else if (format == "csv") {
    out << "ones,size,value,bits,matrix\n";
    for (const Orbit& o : orbits) {
      out << o.representative.popcount() << "," << o.size << "," << o.representative.value() << ","
          << o.representative.bit_string() << "," << o.representative.matrix_string() << "\n";
    }
  } else {
    ordered_json doc;
    doc["regime"] = regime_name;
    doc["m"] = shape.m;
    doc["n"] = shape.n;
    doc["count"] = orbits.size();
    ordered_json list = ordered_json::array();
    for (const Orbit& o : orbits) {
      ordered_json rec;
      rec["ones"] = o.representative.popcount();
      rec["size"] = o.size;
      rec["value"] = o.representative.value();
      rec["bits"] = o.representative.bit_string();
      ordered_json rows = ordered_json::array();
      std::istringstream matrix(o.representative.matrix_string());
      for (std::string row; std::getline(matrix, row, '/');) rows.push_back(row);
      rec["matrix"] = rows;
      list.push_back(std::move(rec));
    }
    doc["orbits"] = std::move(list);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

std::map<std::uint32_t, BigCount> load_override(const std::string& path) {
  std::map<std::uint32_t, BigCount> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read b-file " + path);
  for (auto& [index, value] : parse_bfile(in)) out[static_cast<std::uint32_t>(index)] = value;
  return out;
}

int cmd_bfile(const std::string& sequence, std::uint64_t count, const std::string& format,
              std::ostream& out) {
  const std::vector<BigCount> terms = sequence_terms(sequence, count);
  if (format == "bfile" || format == "table") {
    for (std::size_t k = 0; k < terms.size(); ++k) out << k + 1 << " " << to_decimal(terms[k]) << "\n";
  } else if (format == "csv") {
    out << "index,value\n";
    for (std::size_t k = 0; k < terms.size(); ++k) out << k + 1 << "," << to_decimal(terms[k]) << "\n";
  } else {
    ordered_json doc;
    doc["sequence"] = sequence;
    ordered_json values = ordered_json::array();
    for (const BigCount& t : terms) values.push_back(to_decimal(t));
    doc["values"] = std::move(values);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

std::vector<BigCount> sequence_terms(std::string_view name, std::uint64_t count) {
  std::vector<BigCount> terms;
  terms.reserve(count);
  auto diagonal = [&](auto&& f) {
    for (std::uint64_t k = 1; k <= count; ++k) terms.push_back(f(static_cast<std::uint32_t>(k)));
  };
  // a(1,1), a(1,2), a(2,1), a(1,3), a(2,2), a(3,1), ...
  auto antidiagonals = [&](auto&& f) {
    for (std::uint32_t sum = 2; terms.size() < count; ++sum) {
      for (std::uint32_t m = 1; m < sum && terms.size() < count; ++m) {
        terms.push_back(f(GridShape(m, sum - m)));
      }
    }
  };
  if (name == "a-diagonal") {
    diagonal([](std::uint32_t n) { return formulas::count_rot(GridShape::square(n)); });
  } else if (name == "b-diagonal") {
    diagonal([](std::uint32_t n) { return formulas::count_rotref(GridShape::square(n)); });
  } else if (name == "alpha") {
    diagonal([](std::uint32_t n) { return formulas::count_rot_transpose(n); });
  } else if (name == "beta") {
    diagonal([](std::uint32_t n) { return formulas::count_rotref_transpose(n); });
  } else if (name == "a") {
    antidiagonals([](const GridShape& s) { return formulas::count_rot(s); });
  } else if (name == "b") {
    antidiagonals([](const GridShape& s) { return formulas::count_rotref(s); });
  } else {
    throw std::invalid_argument("unknown sequence '" + std::string(name) +
                                "' (expected a-diagonal, b-diagonal, alpha, beta, a or b)");
  }
  return terms;
}

std::map<std::uint64_t, BigCount> parse_bfile(std::istream& in) {
  std::map<std::uint64_t, BigCount> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string index;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                  ": expected 'index value'");
    }
    out[static_cast<std::uint64_t>(parse_decimal(index))] = parse_decimal(value);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and list toroidal binary arrays up to symmetry"};
  app.name("toroidal");
  app.require_subcommand(1);

  std::string regime;
  ShapeArgs shape;
  std::string method = "formula";
  std::string format = "table";
  std::uint64_t max_cells = kDefaultEnumerationCap;
  unsigned jobs = 1;

  CLI::App* count = app.add_subcommand("count", "Print the number of orbits");
  count->add_option("--regime", regime, "Symmetry regime")
      ->required()
      ->check(CLI::IsMember(kRegimes));
  add_shape_options(*count, shape);
  count->add_option("--method", method, "formula, burnside or enumerate")
      ->check(CLI::IsMember({"formula", "burnside", "enumerate"}));
  count->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
  count->add_option("--max-cells", max_cells, "Largest grid --method enumerate will sweep");
  count->add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);

  CLI::App* orbits = app.add_subcommand("orbits", "List every orbit with its minimal element");
  orbits->add_option("--regime", regime, "Symmetry regime")
      ->required()
      ->check(CLI::IsMember(kRegimes));
  add_shape_options(*orbits, shape);
  orbits->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
  orbits->add_option("--max-cells", max_cells, "Largest grid that will be enumerated");
  orbits->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyOptions verify_options;
  std::string alpha_bfile;
  std::string beta_bfile;
  CLI::App* verify = app.add_subcommand("verify", "Cross-check formulas, Burnside and enumeration");
  verify->add_option("--max-n", verify_options.max_n, "Largest side length to check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-cells", verify_options.max_cells, "Largest grid to enumerate");
  verify->add_option("--jobs", verify_options.jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  verify->add_option("--alpha-bfile", alpha_bfile, "Expected alpha values as a b-file");
  verify->add_option("--beta-bfile", beta_bfile, "Expected beta values as a b-file");

  std::string sequence;
  std::uint64_t terms = 0;
  std::string bfile_format = "bfile";
  CLI::App* bfile = app.add_subcommand("bfile", "Emit a sequence in b-file format");
  bfile->add_option("--sequence", sequence, "a-diagonal, b-diagonal, alpha, beta, a or b")
      ->required();
  bfile->add_option("--count", terms, "Number of terms")->required()->check(CLI::PositiveNumber);
  bfile->add_option("--format", bfile_format, "bfile, table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(regime, shape, method, format, max_cells, jobs, out);
    if (orbits->parsed()) return cmd_orbits(regime, shape, format, max_cells, jobs, out);
    if (bfile->parsed()) return cmd_bfile(sequence, terms, bfile_format, out);
    if (verify->parsed()) {
      verify_options.alpha_override = load_override(alpha_bfile);
      verify_options.beta_override = load_override(beta_bfile);
      const VerifyReport report = run_verification(verify_options, out);
      if (!report.ok()) {
        err << "verification failed: " << *report.first_failure << "\n";
        return kExitVerifyFailed;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace torus::cli
