#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubelab/ordering.hpp"

namespace cubelab {

/// Vertex address in {0,1}^n. Bit k is the truth value of starting predicate
/// Q_k and, for ternary vertices, marks a nonzero coordinate on axis k.
class BitAddress {
 public:
  static constexpr int kMaxBits = 62;

  BitAddress(int n, std::uint64_t word);

  int size() const { return n_; }
  std::uint64_t word() const { return word_; }
  bool operator[](int k) const { return (word_ >> k) & 1U; }
  int weight() const;

  /// Most significant bit (axis n-1) first, e.g. "011".
  std::string str() const;

  friend bool operator==(const BitAddress&, const BitAddress&) = default;

 private:
  int n_;
  std::uint64_t word_;
};

int hamming(const BitAddress& a, const BitAddress& b);

std::uint64_t gray_code(std::uint64_t i);

/// Natural binary index at each position for Binary, Gray or Custom orderings.
std::vector<std::uint64_t> binary_positions(int n, const Ordering& scheme);

/// 2^n addresses in the order given by `scheme` (Binary or Gray).
std::vector<BitAddress> enumerate_addresses(int n, const Ordering& scheme);

/// Vertex of the 3^n-vertex families.
struct TernaryVertex {
  std::size_t index = 0;
  std::vector<int> digits;  // d_k in {0,1,2}, k = axis
  std::vector<int> coords;  // d_k - 1
  BitAddress address{1, 0};

  int norm() const { return address.weight(); }
};

std::size_t pow3(int n);

TernaryVertex ternary_vertex(int n, std::size_t index);

/// Base-3 index at each position (TernaryNatural, TernaryGray or Custom).
std::vector<std::size_t> ternary_ordering(int n, const Ordering& scheme);

}  // namespace cubelab
