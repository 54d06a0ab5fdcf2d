#include "anticycle/simd/bitops.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace anticycle::simd {

namespace {

bool any_common_scalar(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

std::size_t popcount_scalar(const Word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

std::size_t popcount_and_scalar(const Word* a, const Word* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

void or_into_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_into_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void andnot_into_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

const Kernels kScalar{"scalar",           any_common_scalar, popcount_scalar,
                      popcount_and_scalar, or_into_scalar,    and_into_scalar,
                      andnot_into_scalar};

const Kernels& resolve() {
  if (const char* env = std::getenv("ANTICYCLE_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return kScalar;
    if (want == "neon" && neon_kernels()) return *neon_kernels();
    if (want == "avx2" && avx2_kernels()) return *avx2_kernels();
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  if (const Kernels* k = neon_kernels()) return *k;
  return kScalar;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active_kernels() {
  static const Kernels& chosen = resolve();
  return chosen;
}

}  // namespace anticycle::simd
