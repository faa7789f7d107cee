#pragma once

// Linear algebra over the elementary abelian 2-group Z_2^n.
//
// Group elements are n-bit vectors; bit k (0-based) carries the exponent of
// generator a_{k+1}, so the text form "011" denotes a_2 a_1. The group
// operation is XOR and every element is its own inverse.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace augcube {

using Vertex = std::uint32_t;

inline constexpr int kMaxDimension = 30;

class GroupElement {
 public:
  GroupElement(int width, Vertex bits);

  /// Parses the highest-bit-first text form ("011" is a_2 a_1).
  static GroupElement parse(std::string_view text);
  /// e_i, the i-th unit vector (1-based).
  static GroupElement unit(int width, int i);
  /// a_j a_{j-1} ... a_1: the low j bits set.
  static GroupElement prefix(int width, int j);

  int width() const noexcept { return width_; }
  Vertex bits() const noexcept { return bits_; }
  bool bit(int i) const noexcept { return ((bits_ >> (i - 1)) & 1U) != 0; }
  bool is_identity() const noexcept { return bits_ == 0; }

  std::string to_string() const;

  GroupElement operator^(const GroupElement& other) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  int width_;
  Vertex bits_;
};

std::string label(Vertex v, int width);
Vertex parse_label(std::string_view text, int width);

/// An ordered, duplicate-free list of non-identity elements of Z_2^n.
class GeneratorSet {
 public:
  GeneratorSet(int ambient_n, std::vector<GroupElement> elements);

  int ambient_n() const noexcept { return ambient_n_; }
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(Vertex bits) const noexcept;
  std::vector<Vertex> bits() const;
  std::vector<std::string> labels() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  int ambient_n_;
  std::vector<GroupElement> elements_;
};

/// e_1..e_n followed by the prefixes of length 2..n. This canonical order is
/// what matching ids and subset enumeration key off.
GeneratorSet standard_generators(int n);

int rank_gf2(std::span<const GroupElement> vectors);
int rank_gf2(std::span<const Vertex> vectors);

/// For Z_2^n a minimal generating set is exactly a GF(2) basis.
bool is_minimal_generating(std::span<const GroupElement> subset, int n);

using BigInt = boost::multiprecision::cpp_int;

/// 1 + sum over nonempty J = {j_1 < ... < j_k} of {2..n} of
/// (j_k - j_{k-1}) ... (j_2 - j_1) j_1, summed by largest element.
BigInt f_lower_bound(int n);

/// Every n-subset of standard_generators(n) with rank n, in lexicographic
/// order of generator indices.
std::vector<GeneratorSet> enumerate_cayley_generator_subsets(int n);

/// Indices (into standard_generators) of each subset, same order as above.
std::vector<std::vector<int>> enumerate_cayley_index_subsets(int n);

}  // namespace augcube
