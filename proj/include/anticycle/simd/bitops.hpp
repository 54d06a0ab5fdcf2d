#pragma once

// Word-array kernels behind VertexSet. Every kernel has a scalar reference
// and, where the CPU supports it, a vectorized variant picked once at startup.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace anticycle::simd {

using Word = std::uint64_t;

struct Kernels {
  std::string_view name;
  bool (*any_common)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*popcount_and)(const Word* a, const Word* b, std::size_t n);
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  void (*and_into)(Word* dst, const Word* src, std::size_t n);
  void (*andnot_into)(Word* dst, const Word* src, std::size_t n);
};

const Kernels& scalar_kernels();

/// nullptr when the build or the running CPU lacks AVX2.
const Kernels* avx2_kernels();

/// nullptr unless built for AArch64.
const Kernels* neon_kernels();

/// The dispatched table. Resolved once; `ANTICYCLE_SIMD=scalar` forces the
/// reference path.
const Kernels& active_kernels();

}  // namespace anticycle::simd
