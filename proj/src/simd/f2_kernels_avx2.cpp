// Compiled with -mavx2 on x86-64; only reached after a runtime CPU check.

#include <bit>

#include <immintrin.h>

#include "perscert/simd/f2_kernels.hpp"

namespace perscert::simd {

namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 * kLanes <= n; i += 2 * kLanes) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    const __m256i a0 = _mm256_loadu_si256(d);
    const __m256i a1 = _mm256_loadu_si256(d + 1);
    _mm256_storeu_si256(d, _mm256_xor_si256(a0, _mm256_loadu_si256(s)));
    _mm256_storeu_si256(d + 1, _mm256_xor_si256(a1, _mm256_loadu_si256(s + 1)));
  }
  for (; i + kLanes <= n; i += kLanes) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

// Nibble lookup popcount (Mula): per-byte counts via pshufb, summed with sad.
std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

bool is_zero(const std::uint64_t* words, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < n; ++i)
    if (words[i]) return false;
  return true;
}

std::size_t last_nonzero(const std::uint64_t* words, std::size_t n) {
  std::size_t i = n;
  while (i % kLanes != 0) {
    --i;
    if (words[i]) return i;
  }
  while (i >= kLanes) {
    i -= kLanes;
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    if (!_mm256_testz_si256(v, v)) {
      for (std::size_t j = i + kLanes; j-- > i;)
        if (words[j]) return j;
    }
  }
  return n;
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i d = _mm256_xor_si256(x, y);
    if (!_mm256_testz_si256(d, d)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const F2Kernels& avx2_kernel_table() {
  static const F2Kernels table{"avx2", &xor_into, &popcount, &is_zero, &last_nonzero, &equal};
  return table;
}

}  // namespace perscert::simd
