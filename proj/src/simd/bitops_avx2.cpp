#include "anticycle/simd/bitops.hpp"

#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ANTICYCLE_HAVE_X86 1
#endif

namespace anticycle::simd {

#ifdef ANTICYCLE_HAVE_X86

namespace {

// Functions carry their own target attribute so the rest of the translation
// unit (and any inline code it instantiates) stays baseline x86-64.
#define AVX2_FN __attribute__((target("avx2")))

AVX2_FN bool any_common_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

// Nibble-lookup popcount (Mula); AVX2 has no vector popcnt.
AVX2_FN inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

AVX2_FN std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

AVX2_FN std::size_t popcount_avx2(const Word* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  std::size_t c = horizontal_sum(acc);
  for (; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

AVX2_FN std::size_t popcount_and_avx2(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(
        acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(va, vb)), _mm256_setzero_si256()));
  }
  std::size_t c = horizontal_sum(acc);
  for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

AVX2_FN void or_into_avx2(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

AVX2_FN void and_into_avx2(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), s));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

AVX2_FN void andnot_into_avx2(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // andnot(s, d) computes ~s & d
    _mm256_storeu_si256(d, _mm256_andnot_si256(s, _mm256_loadu_si256(d)));
  }
  for (; i < n; ++i) dst[i] &= ~src[i];
}

#undef AVX2_FN

const Kernels kAvx2{"avx2",           any_common_avx2, popcount_avx2, popcount_and_avx2,
                    or_into_avx2,     and_into_avx2,   andnot_into_avx2};

}  // namespace

const Kernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace anticycle::simd
