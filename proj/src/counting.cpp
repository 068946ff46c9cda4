#include "torus/counting.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace torus {
namespace {

std::uint64_t cell_mask(const GridShape& shape) {
  return shape.cells() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << shape.cells()) - 1;
}

std::uint64_t bit_of(const GridShape& shape, std::uint64_t cell) {
  return std::uint64_t{1} << (shape.cells() - 1 - cell);
}

bool orbit_order(const Orbit& a, const Orbit& b) {
  const int pa = a.representative.popcount();
  const int pb = b.representative.popcount();
  if (pa != pb) return pa < pb;
  return a.representative.value() < b.representative.value();
}

}  // namespace

TorArray::TorArray(const GridShape& shape, std::uint64_t bits) : shape_(shape), bits_(bits) {
  if (shape.cells() > kMaxPackedCells) {
    throw std::invalid_argument("packed arrays hold at most 64 cells, got " + to_string(shape));
  }
  if ((bits & ~cell_mask(shape)) != 0) {
    throw std::invalid_argument("value does not fit in " + std::to_string(shape.cells()) +
                                " cells");
  }
}

TorArray TorArray::ones(const GridShape& shape) {
  if (shape.cells() > kMaxPackedCells) {
    throw std::invalid_argument("packed arrays hold at most 64 cells, got " + to_string(shape));
  }
  return {shape, cell_mask(shape)};
}

TorArray TorArray::parse(const GridShape& shape, std::string_view text) {
  std::uint64_t bits = 0;
  std::uint64_t seen = 0;
  for (char ch : text) {
    if (ch == '/') continue;
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("array text may only contain 0, 1 and /");
    }
    if (seen == shape.cells()) throw std::invalid_argument("too many cells in array text");
    bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
    ++seen;
  }
  if (seen != shape.cells()) {
    throw std::invalid_argument("array text has " + std::to_string(seen) + " cells, expected " +
                                std::to_string(shape.cells()));
  }
  return {shape, bits};
}

bool TorArray::cell(std::uint64_t index) const {
  if (index >= shape_.cells()) throw std::out_of_range("cell index out of range");
  return (bits_ & bit_of(shape_, index)) != 0;
}

TorArray TorArray::with_cell(std::uint64_t index, bool on) const {
  if (index >= shape_.cells()) throw std::out_of_range("cell index out of range");
  const std::uint64_t bit = bit_of(shape_, index);
  return {shape_, on ? (bits_ | bit) : (bits_ & ~bit)};
}

int TorArray::popcount() const { return std::popcount(bits_); }

std::string TorArray::bit_string() const {
  std::string out;
  out.reserve(shape_.cells());
  for (std::uint64_t c = 0; c < shape_.cells(); ++c) out.push_back(cell(c) ? '1' : '0');
  return out;
}

std::string TorArray::matrix_string() const {
  const std::string flat = bit_string();
  std::string out;
  for (std::uint32_t row = 0; row < shape_.m; ++row) {
    if (row > 0) out.push_back('/');
    out.append(flat, std::size_t{row} * shape_.n, shape_.n);
  }
  return out;
}

EnumerationCapExceeded::EnumerationCapExceeded(const GridShape& shape, std::uint64_t cap)
    : std::runtime_error("enumeration of " + to_string(shape) + " needs " +
                         std::to_string(shape.cells()) + " cells, above the cap of " +
                         std::to_string(cap) + " (raise it with --max-cells)") {}

TorArray apply(const CellPermutation& p, const TorArray& a) {
  if (p.shape() != a.shape()) {
    throw std::invalid_argument("apply: permutation is for " + to_string(p.shape()) +
                                ", array is " + to_string(a.shape()));
  }
  const GridShape& shape = a.shape();
  std::uint64_t out = 0;
  for (std::uint64_t c = 0; c < shape.cells(); ++c) {
    if (a.value() & bit_of(shape, c)) out |= bit_of(shape, p.image(c));
  }
  return {shape, out};
}

BigCount burnside_count(SymmetryRegime regime, const GridShape& shape) {
  const std::vector<CellPermutation> group = generate_group(regime, shape);
  BigCount fixed = 0;
  for (const CellPermutation& g : group) fixed += pow2(cycle_count(g));
  return exact_div(fixed, BigCount(group.size()));
}

PackedGroup::PackedGroup(SymmetryRegime regime, const GridShape& shape) : shape_(shape) {
  if (shape.cells() > kMaxPackedCells) {
    throw std::invalid_argument("packed arrays hold at most 64 cells, got " + to_string(shape));
  }
  const std::vector<CellPermutation> group = generate_group(regime, shape);
  order_ = group.size();
  chunks_ = (shape.cells() + 7) / 8;
  tables_.assign(order_ * chunks_ * 256, 0);
  const std::uint64_t cells = shape.cells();
  for (std::size_t e = 0; e < order_; ++e) {
    for (std::size_t chunk = 0; chunk < chunks_; ++chunk) {
      std::uint64_t* table = &tables_[(e * chunks_ + chunk) * 256];
      for (std::uint64_t t = 0; t < 8; ++t) {
        const std::uint64_t source_bit = chunk * 8 + t;
        if (source_bit >= cells) break;
        const std::uint64_t target = bit_of(shape, group[e].image(cells - 1 - source_bit));
        for (std::size_t byte = 0; byte < 256; ++byte) {
          if (byte & (std::size_t{1} << t)) table[byte] |= target;
        }
      }
    }
  }
}

std::uint64_t PackedGroup::apply(std::size_t element, std::uint64_t bits) const {
  const std::uint64_t* table = &tables_[element * chunks_ * 256];
  std::uint64_t out = 0;
  for (std::size_t chunk = 0; chunk < chunks_; ++chunk, table += 256) {
    out |= table[(bits >> (8 * chunk)) & 0xff];
  }
  return out;
}

bool PackedGroup::is_canonical(std::uint64_t bits) const {
  for (std::size_t e = 0; e < order_; ++e) {
    if (apply(e, bits) < bits) return false;
  }
  return true;
}

std::uint64_t PackedGroup::canonical(std::uint64_t bits) const {
  std::uint64_t best = bits;
  for (std::size_t e = 0; e < order_; ++e) best = std::min(best, apply(e, bits));
  return best;
}

std::vector<std::uint64_t> PackedGroup::orbit(std::uint64_t bits) const {
  std::vector<std::uint64_t> images(order_);
  for (std::size_t e = 0; e < order_; ++e) images[e] = apply(e, bits);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

TorArray canonical_form(const TorArray& a, SymmetryRegime regime) {
  const PackedGroup group(regime, a.shape());
  return {a.shape(), group.canonical(a.value())};
}

Orbit orbit_of(const TorArray& a, SymmetryRegime regime) {
  const PackedGroup group(regime, a.shape());
  const std::vector<std::uint64_t> images = group.orbit(a.value());
  return {TorArray(a.shape(), images.front()), images.size()};
}

std::vector<Orbit> enumerate_orbits(SymmetryRegime regime, const GridShape& shape,
                                    const EnumerationOptions& options) {
  check_regime_shape(regime, shape);
  if (shape.cells() > options.max_cells || shape.cells() >= kMaxPackedCells) {
    throw EnumerationCapExceeded(shape, options.max_cells);
  }
  const PackedGroup group(regime, shape);
  const std::uint64_t total = std::uint64_t{1} << shape.cells();
  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.jobs == 0 ? 1 : options.jobs, 1, total));

  // Each worker owns a contiguous value range and reports the orbits whose
  // minimum falls in it, so every orbit is reported exactly once.
  std::vector<std::vector<Orbit>> found(jobs);
  auto sweep = [&](unsigned worker) {
    const std::uint64_t begin = total / jobs * worker;
    const std::uint64_t end = worker + 1 == jobs ? total : total / jobs * (worker + 1);
    for (std::uint64_t v = begin; v < end; ++v) {
      if (!group.is_canonical(v)) continue;
      found[worker].push_back({TorArray(shape, v), group.orbit(v).size()});
    }
  };
  if (jobs == 1) {
    sweep(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(sweep, w);
  }

  std::vector<Orbit> orbits;
  for (auto& part : found) orbits.insert(orbits.end(), part.begin(), part.end());
  std::sort(orbits.begin(), orbits.end(), orbit_order);
  return orbits;
}

}  // namespace torus
