#include <bit>

#include "perscert/simd/f2_kernels.hpp"

namespace perscert::simd {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

bool is_zero(const std::uint64_t* words, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (words[i]) return false;
  return true;
}

std::size_t last_nonzero(const std::uint64_t* words, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (words[i]) return i;
  return n;
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const F2Kernels& scalar_kernels() {
  static const F2Kernels table{"scalar", &xor_into, &popcount, &is_zero, &last_nonzero, &equal};
  return table;
}

}  // namespace perscert::simd
