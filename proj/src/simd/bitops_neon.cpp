#include "anticycle/simd/bitops.hpp"

#include <bit>

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace anticycle::simd {

#if defined(__aarch64__) && defined(__ARM_NEON)

namespace {

bool any_common_neon(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

std::size_t popcount_neon(const Word* a, std::size_t n) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    c += vaddvq_u8(bytes);
  }
  for (; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

std::size_t popcount_and_neon(const Word* a, const Word* b, std::size_t n) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    c += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
  }
  for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

void or_into_neon(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_into_neon(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_into_neon(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

const Kernels kNeon{"neon",       any_common_neon, popcount_neon,   popcount_and_neon,
                    or_into_neon, and_into_neon,   andnot_into_neon};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

#else

const Kernels* neon_kernels() { return nullptr; }

#endif

}  // namespace anticycle::simd
