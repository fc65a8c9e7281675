#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cubelab {

enum class OrderingKind { Binary, Gray, TernaryNatural, TernaryGray, Custom };

/// Vertex ordering scheme. `permutation[i]` is the natural (binary or base-3)
/// index of the vertex placed at position i; only used for Custom.
struct Ordering {
  OrderingKind kind = OrderingKind::Binary;
  std::vector<std::size_t> permutation;

  static Ordering binary() { return {OrderingKind::Binary, {}}; }
  static Ordering gray() { return {OrderingKind::Gray, {}}; }
  static Ordering ternary_natural() { return {OrderingKind::TernaryNatural, {}}; }
  static Ordering ternary_gray() { return {OrderingKind::TernaryGray, {}}; }
  static Ordering custom(std::vector<std::size_t> perm) {
    return {OrderingKind::Custom, std::move(perm)};
  }

  bool is_ternary() const {
    return kind == OrderingKind::TernaryNatural || kind == OrderingKind::TernaryGray;
  }

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

std::string to_string(const Ordering& ordering);

/// Accepts "binary", "gray", "ternary", "ternary-gray" (case-sensitive).
Ordering parse_ordering(std::string_view name);

/// Throws PreconditionError unless `perm` is a bijection on [0, size).
void check_permutation(const std::vector<std::size_t>& perm, std::size_t size);

}  // namespace cubelab
