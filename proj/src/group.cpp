#include "torus/group.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "torus/numtheory.hpp"

namespace torus {

std::string_view to_string(SymmetryRegime regime) {
  switch (regime) {
    case SymmetryRegime::Rot: return "rot";
    case SymmetryRegime::RotRef: return "rotref";
    case SymmetryRegime::RotT: return "rott";
    case SymmetryRegime::RotRefT: return "rotreft";
  }
  return "?";
}

SymmetryRegime parse_regime(std::string_view name) {
  if (name == "rot") return SymmetryRegime::Rot;
  if (name == "rotref") return SymmetryRegime::RotRef;
  if (name == "rott") return SymmetryRegime::RotT;
  if (name == "rotreft") return SymmetryRegime::RotRefT;
  throw std::invalid_argument("unknown regime '" + std::string(name) +
                              "' (expected rot, rotref, rott or rotreft)");
}

bool regime_has_transpose(SymmetryRegime regime) {
  return regime == SymmetryRegime::RotT || regime == SymmetryRegime::RotRefT;
}

std::vector<GeneratorKind> regime_generators(SymmetryRegime regime) {
  using G = GeneratorKind;
  switch (regime) {
    case SymmetryRegime::Rot: return {G::RowRotate, G::ColRotate};
    case SymmetryRegime::RotRef: return {G::RowRotate, G::ColRotate, G::RowReflect, G::ColReflect};
    case SymmetryRegime::RotT: return {G::RowRotate, G::ColRotate, G::Transpose};
    case SymmetryRegime::RotRefT:
      return {G::RowRotate, G::ColRotate, G::RowReflect, G::ColReflect, G::Transpose};
  }
  return {};
}

void check_regime_shape(SymmetryRegime regime, const GridShape& shape) {
  if (regime_has_transpose(regime) && !shape.is_square()) {
    throw std::invalid_argument("regime " + std::string(to_string(regime)) +
                                " needs a square grid, got " + to_string(shape));
  }
}

CellPermutation::CellPermutation(const GridShape& shape, std::vector<std::uint32_t> mapping,
                                 bool)
    : shape_(shape), mapping_(std::move(mapping)) {}

CellPermutation::CellPermutation(const GridShape& shape, std::vector<std::uint32_t> mapping)
    : shape_(shape), mapping_(std::move(mapping)) {
  if (mapping_.size() != shape_.cells()) {
    throw std::invalid_argument("permutation size does not match grid " + to_string(shape_));
  }
  std::vector<bool> hit(mapping_.size(), false);
  for (std::uint32_t target : mapping_) {
    if (target >= mapping_.size() || hit[target]) {
      throw std::invalid_argument("mapping is not a bijection");
    }
    hit[target] = true;
  }
}

CellPermutation CellPermutation::identity(const GridShape& shape) {
  std::vector<std::uint32_t> mapping(shape.cells());
  std::iota(mapping.begin(), mapping.end(), 0u);
  return {shape, std::move(mapping), true};
}

CellPermutation CellPermutation::generator(GeneratorKind kind, const GridShape& shape) {
  if (kind == GeneratorKind::Transpose && !shape.is_square()) {
    throw std::invalid_argument("transpose needs a square grid, got " + to_string(shape));
  }
  const std::uint32_t m = shape.m;
  const std::uint32_t n = shape.n;
  std::vector<std::uint32_t> mapping(shape.cells());
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t l = 0; l < n; ++l) {
      std::uint32_t row = k;
      std::uint32_t col = l;
      switch (kind) {
        case GeneratorKind::RowRotate: row = (k + 1) % m; break;
        case GeneratorKind::ColRotate: col = (l + 1) % n; break;
        case GeneratorKind::RowReflect: row = m - 1 - k; break;
        case GeneratorKind::ColReflect: col = n - 1 - l; break;
        case GeneratorKind::Transpose:
          row = l;
          col = k;
          break;
      }
      mapping[shape.index(k, l)] = static_cast<std::uint32_t>(shape.index(row, col));
    }
  }
  return {shape, std::move(mapping), true};
}

bool CellPermutation::is_identity() const {
  for (std::size_t c = 0; c < mapping_.size(); ++c) {
    if (mapping_[c] != c) return false;
  }
  return true;
}

CellPermutation CellPermutation::inverse() const {
  std::vector<std::uint32_t> inv(mapping_.size());
  for (std::size_t c = 0; c < mapping_.size(); ++c) {
    inv[mapping_[c]] = static_cast<std::uint32_t>(c);
  }
  return {shape_, std::move(inv), true};
}

CellPermutation CellPermutation::power(std::int64_t exponent) const {
  CellPermutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  CellPermutation result = identity(shape_);
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::string CellPermutation::key() const {
  std::string out;
  out.reserve(8 + 4 * mapping_.size());
  auto put = [&out](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  put(shape_.m);
  put(shape_.n);
  for (std::uint32_t v : mapping_) put(v);
  return out;
}

CellPermutation make_generator(GeneratorKind kind, const GridShape& shape) {
  return CellPermutation::generator(kind, shape);
}

CellPermutation compose(const CellPermutation& a, const CellPermutation& b) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument("compose: shape mismatch " + to_string(a.shape()) + " vs " +
                                to_string(b.shape()));
  }
  std::vector<std::uint32_t> mapping(a.size());
  for (std::size_t c = 0; c < mapping.size(); ++c) mapping[c] = a.image(b.image(c));
  return CellPermutation(a.shape(), std::move(mapping));
}

CellPermutation rotation_product(const GridShape& shape, std::int64_t i, std::int64_t j) {
  return compose(make_generator(GeneratorKind::RowRotate, shape).power(i),
                 make_generator(GeneratorKind::ColRotate, shape).power(j));
}

CellPermutation compose_all(std::span<const CellPermutation> factors) {
  if (factors.empty()) throw std::invalid_argument("compose_all: no factors");
  CellPermutation result = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) result = compose(factors[i], result);
  return result;
}

CycleStructure cycle_structure(const CellPermutation& p) {
  CycleStructure out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (std::size_t c = start; !seen[c]; c = p.image(c)) {
      seen[c] = true;
      ++length;
    }
    ++out[length];
  }
  return out;
}

std::uint64_t cycle_count(const CellPermutation& p) {
  std::uint64_t total = 0;
  for (const auto& [length, count] : cycle_structure(p)) total += count;
  return total;
}

std::uint64_t element_order(const CellPermutation& p) {
  std::uint64_t order = 1;
  for (const auto& [length, count] : cycle_structure(p)) order = lcm(order, length);
  return order;
}

std::vector<CellPermutation> generate_group(SymmetryRegime regime, const GridShape& shape) {
  check_regime_shape(regime, shape);
  std::vector<CellPermutation> gens;
  for (GeneratorKind kind : regime_generators(regime)) gens.push_back(make_generator(kind, shape));

  std::vector<CellPermutation> elements{CellPermutation::identity(shape)};
  std::unordered_set<std::string> seen{elements.front().key()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const CellPermutation& g : gens) {
      CellPermutation product = compose(g, elements[next]);
      if (seen.insert(product.key()).second) elements.push_back(std::move(product));
    }
  }
  return elements;
}

}  // namespace torus
