#pragma once

// Word-level kernels behind every F2 bit-vector operation (matrix products,
// kernel bases, boundary-matrix reduction). A scalar reference table always
// exists; an AVX2 table is selected at runtime when the CPU supports it.
//
// Setting PERSCERT_SIMD=scalar in the environment pins the scalar table.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace perscert::simd {

struct F2Kernels {
  std::string_view name;
  // dst[i] ^= src[i] for i < n
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  // total number of set bits
  std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);
  bool (*is_zero)(const std::uint64_t* words, std::size_t n);
  // index of the last nonzero word, or n when all words are zero
  std::size_t (*last_nonzero)(const std::uint64_t* words, std::size_t n);
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const F2Kernels& scalar_kernels();

// nullptr when the binary was built without AVX2 support or the running CPU
// lacks it.
const F2Kernels* avx2_kernels();

// The table used by BitVector. Resolved once.
const F2Kernels& active_kernels();

}  // namespace perscert::simd
