#include "cubelab/bitspace.hpp"

#include <bit>
#include <numeric>

#include "cubelab/error.hpp"

namespace cubelab {

namespace {

void check_binary_dim(int n) {
  if (n < 1 || n > BitAddress::kMaxBits)
    throw PreconditionError("dimension must be in [1, 62], got " + std::to_string(n));
}

void check_ternary_dim(int n) {
  if (n < 1 || n > 20)
    throw PreconditionError("ternary dimension must be in [1, 20], got " + std::to_string(n));
}

}  // namespace

std::string to_string(const Ordering& ordering) {
  switch (ordering.kind) {
    case OrderingKind::Binary: return "binary";
    case OrderingKind::Gray: return "gray";
    case OrderingKind::TernaryNatural: return "ternary";
    case OrderingKind::TernaryGray: return "ternary-gray";
    case OrderingKind::Custom: return "custom";
  }
  return "unknown";
}

Ordering parse_ordering(std::string_view name) {
  if (name == "binary") return Ordering::binary();
  if (name == "gray") return Ordering::gray();
  if (name == "ternary" || name == "ternary-natural") return Ordering::ternary_natural();
  if (name == "ternary-gray") return Ordering::ternary_gray();
  throw PreconditionError("unknown ordering '" + std::string(name) + "'");
}

void check_permutation(const std::vector<std::size_t>& perm, std::size_t size) {
  if (perm.size() != size)
    throw PreconditionError("custom permutation has " + std::to_string(perm.size()) +
                            " entries, expected " + std::to_string(size));
  std::vector<bool> seen(size, false);
  for (std::size_t p : perm) {
    if (p >= size || seen[p]) throw PreconditionError("custom ordering is not a permutation");
    seen[p] = true;
  }
}

BitAddress::BitAddress(int n, std::uint64_t word) : n_(n), word_(word) {
  check_binary_dim(n);
  if (word >> n) throw PreconditionError("address word has bits beyond length " + std::to_string(n));
}

int BitAddress::weight() const { return std::popcount(word_); }

std::string BitAddress::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int k = 0; k < n_; ++k)
    if ((*this)[k]) s[static_cast<std::size_t>(n_ - 1 - k)] = '1';
  return s;
}

int hamming(const BitAddress& a, const BitAddress& b) {
  if (a.size() != b.size())
    throw PreconditionError("hamming: address lengths differ (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  return std::popcount(a.word() ^ b.word());
}

std::uint64_t gray_code(std::uint64_t i) { return i ^ (i >> 1); }

std::vector<std::uint64_t> binary_positions(int n, const Ordering& scheme) {
  check_binary_dim(n);
  if (n > 30) throw PreconditionError("enumerating 2^n positions requires n <= 30");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> out(count);
  switch (scheme.kind) {
    case OrderingKind::Binary:
      std::iota(out.begin(), out.end(), std::uint64_t{0});
      break;
    case OrderingKind::Gray:
      for (std::uint64_t i = 0; i < count; ++i) out[i] = gray_code(i);
      break;
    case OrderingKind::Custom:
      check_permutation(scheme.permutation, count);
      for (std::uint64_t i = 0; i < count; ++i) out[i] = scheme.permutation[i];
      break;
    default:
      throw PreconditionError("ordering '" + to_string(scheme) +
                              "' is not defined for a 2^n-vertex family");
  }
  return out;
}

std::vector<BitAddress> enumerate_addresses(int n, const Ordering& scheme) {
  std::vector<BitAddress> out;
  for (std::uint64_t w : binary_positions(n, scheme)) out.emplace_back(n, w);
  return out;
}

std::size_t pow3(int n) {
  std::size_t p = 1;
  for (int k = 0; k < n; ++k) p *= 3;
  return p;
}

TernaryVertex ternary_vertex(int n, std::size_t index) {
  check_ternary_dim(n);
  if (index >= pow3(n))
    throw PreconditionError("ternary index " + std::to_string(index) + " out of range [0, 3^" +
                            std::to_string(n) + ")");
  TernaryVertex v;
  v.index = index;
  v.digits.resize(static_cast<std::size_t>(n));
  v.coords.resize(static_cast<std::size_t>(n));
  std::uint64_t word = 0;
  std::size_t rest = index;
  for (int k = 0; k < n; ++k) {
    const int d = static_cast<int>(rest % 3);
    rest /= 3;
    v.digits[static_cast<std::size_t>(k)] = d;
    v.coords[static_cast<std::size_t>(k)] = d - 1;
    if (d != 1) word |= std::uint64_t{1} << k;
  }
  v.address = BitAddress(n, word);
  return v;
}

std::vector<std::size_t> ternary_ordering(int n, const Ordering& scheme) {
  check_ternary_dim(n);
  const std::size_t count = pow3(n);
  std::vector<std::size_t> out(count);
  switch (scheme.kind) {
    case OrderingKind::TernaryNatural:
      std::iota(out.begin(), out.end(), std::size_t{0});
      break;
    case OrderingKind::TernaryGray:
      // Reflected ternary Gray: scanning from the most significant digit, a
      // digit is reflected (d -> 2 - d) when the digits above it sum to odd.
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<int> t(static_cast<std::size_t>(n));
        std::size_t rest = i;
        for (int k = 0; k < n; ++k) {
          t[static_cast<std::size_t>(k)] = static_cast<int>(rest % 3);
          rest /= 3;
        }
        int prefix = 0;
        std::size_t g = 0;
        for (int k = n - 1; k >= 0; --k) {
          const int d = t[static_cast<std::size_t>(k)];
          const int gd = (prefix % 2 == 0) ? d : 2 - d;
          g = g * 3 + static_cast<std::size_t>(gd);
          prefix += d;
        }
        out[i] = g;
      }
      break;
    case OrderingKind::Custom:
      check_permutation(scheme.permutation, count);
      out = scheme.permutation;
      break;
    default:
      throw PreconditionError("ordering '" + to_string(scheme) +
                              "' is not defined for a 3^n-vertex family");
  }
  return out;
}

}  // namespace cubelab
