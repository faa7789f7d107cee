#include "augcube/boolean_group.hpp"

#include <algorithm>
#include <numeric>

#include "augcube/error.hpp"

namespace augcube {

namespace {

void require_width(int width) {
  if (width < 1 || width > kMaxDimension) {
    throw Error(ErrorKind::InvalidDimension,
                "width " + std::to_string(width) + " outside [1, " +
                    std::to_string(kMaxDimension) + "]");
  }
}

void require_dimension(int n) {
  if (n < 2 || n > kMaxDimension) {
    throw Error(ErrorKind::InvalidDimension,
                "n = " + std::to_string(n) + " outside [2, " + std::to_string(kMaxDimension) + "]");
  }
}

}  // namespace

GroupElement::GroupElement(int width, Vertex bits) : width_(width), bits_(bits) {
  require_width(width);
  if (width < 32 && (bits >> width) != 0) {
    throw Error(ErrorKind::InvalidInput, "bits exceed width " + std::to_string(width));
  }
}

GroupElement GroupElement::parse(std::string_view text) {
  const int width = static_cast<int>(text.size());
  return GroupElement(width, parse_label(text, width));
}

GroupElement GroupElement::unit(int width, int i) {
  require_width(width);
  if (i < 1 || i > width) {
    throw Error(ErrorKind::InvalidInput, "unit index " + std::to_string(i) + " out of range");
  }
  return GroupElement(width, Vertex{1} << (i - 1));
}

GroupElement GroupElement::prefix(int width, int j) {
  require_width(width);
  if (j < 1 || j > width) {
    throw Error(ErrorKind::InvalidInput, "prefix length " + std::to_string(j) + " out of range");
  }
  return GroupElement(width, (Vertex{1} << j) - 1);
}

std::string GroupElement::to_string() const { return label(bits_, width_); }

GroupElement GroupElement::operator^(const GroupElement& other) const {
  if (other.width_ != width_) {
    throw Error(ErrorKind::InvalidInput, "width mismatch in group operation");
  }
  return GroupElement(width_, bits_ ^ other.bits_);
}

std::string label(Vertex v, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k) {
    if ((v >> k) & 1U) out[static_cast<std::size_t>(width - 1 - k)] = '1';
  }
  return out;
}

Vertex parse_label(std::string_view text, int width) {
  if (static_cast<int>(text.size()) != width || width < 1 || width > kMaxDimension) {
    throw Error(ErrorKind::InvalidInput,
                "label '" + std::string(text) + "' is not " + std::to_string(width) + " bits");
  }
  Vertex v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidInput, "label '" + std::string(text) + "' is not binary");
    }
    v = (v << 1) | static_cast<Vertex>(c - '0');
  }
  return v;
}

GeneratorSet::GeneratorSet(int ambient_n, std::vector<GroupElement> elements)
    : ambient_n_(ambient_n), elements_(std::move(elements)) {
  require_width(ambient_n);
  std::vector<Vertex> seen;
  seen.reserve(elements_.size());
  for (const auto& g : elements_) {
    if (g.width() != ambient_n) {
      throw Error(ErrorKind::InvalidInput, "generator " + g.to_string() + " has wrong width");
    }
    if (g.is_identity()) {
      throw Error(ErrorKind::InvalidInput, "identity is not a valid generator");
    }
    seen.push_back(g.bits());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorKind::InvalidInput, "duplicate generator");
  }
}

bool GeneratorSet::contains(Vertex bits) const noexcept {
  return std::any_of(elements_.begin(), elements_.end(),
                     [bits](const GroupElement& g) { return g.bits() == bits; });
}

std::vector<Vertex> GeneratorSet::bits() const {
  std::vector<Vertex> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.bits());
  return out;
}

std::vector<std::string> GeneratorSet::labels() const {
  std::vector<std::string> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.to_string());
  return out;
}

GeneratorSet standard_generators(int n) {
  require_dimension(n);
  std::vector<GroupElement> gens;
  gens.reserve(static_cast<std::size_t>(2 * n - 1));
  for (int i = 1; i <= n; ++i) gens.push_back(GroupElement::unit(n, i));
  for (int j = 2; j <= n; ++j) gens.push_back(GroupElement::prefix(n, j));
  return GeneratorSet(n, std::move(gens));
}

int rank_gf2(std::span<const Vertex> vectors) {
  // basis[b] holds a reduced vector whose highest set bit is b.
  Vertex basis[32] = {};
  int rank = 0;
  for (Vertex v : vectors) {
    for (int b = 31; b >= 0 && v != 0; --b) {
      if (((v >> b) & 1U) == 0) continue;
      if (basis[b] == 0) {
        basis[b] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return rank;
}

int rank_gf2(std::span<const GroupElement> vectors) {
  std::vector<Vertex> raw;
  raw.reserve(vectors.size());
  for (const auto& g : vectors) {
    if (g.width() != vectors.front().width()) {
      throw Error(ErrorKind::InvalidInput, "mixed widths in rank computation");
    }
    raw.push_back(g.bits());
  }
  return rank_gf2(std::span<const Vertex>(raw));
}

bool is_minimal_generating(std::span<const GroupElement> subset, int n) {
  for (const auto& g : subset) {
    if (g.width() != n) throw Error(ErrorKind::InvalidInput, "element width differs from n");
  }
  return static_cast<int>(subset.size()) == n && rank_gf2(subset) == n;
}

BigInt f_lower_bound(int n) {
  require_dimension(n);
  // ending[j]: sum of the products over subsets whose largest element is j.
  std::vector<BigInt> ending(static_cast<std::size_t>(n) + 1, 0);
  BigInt total = 1;
  for (int j = 2; j <= n; ++j) {
    BigInt sum = j;
    for (int i = 2; i < j; ++i) sum += ending[i] * (j - i);
    ending[j] = sum;
    total += sum;
  }
  return total;
}

std::vector<std::vector<int>> enumerate_cayley_index_subsets(int n) {
  const GeneratorSet all = standard_generators(n);
  const std::vector<Vertex> bits = all.bits();
  const int m = static_cast<int>(bits.size());

  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Vertex> chosen(static_cast<std::size_t>(n));
  while (true) {
    for (int k = 0; k < n; ++k) chosen[k] = bits[pick[k]];
    if (rank_gf2(std::span<const Vertex>(chosen)) == n) out.push_back(pick);
    // Advance to the next combination in lexicographic order.
    int k = n - 1;
    while (k >= 0 && pick[k] == m - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int t = k + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

std::vector<GeneratorSet> enumerate_cayley_generator_subsets(int n) {
  const GeneratorSet all = standard_generators(n);
  std::vector<GeneratorSet> out;
  for (const auto& idx : enumerate_cayley_index_subsets(n)) {
    std::vector<GroupElement> elems;
    elems.reserve(idx.size());
    for (int i : idx) elems.push_back(all[static_cast<std::size_t>(i)]);
    out.emplace_back(n, std::move(elems));
  }
  return out;
}

}  // namespace augcube
