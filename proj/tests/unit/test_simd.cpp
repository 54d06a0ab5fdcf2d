#include "doctest.h"

#include <cstdlib>
#include <string>
#include <vector>

#include "anticycle/harness.hpp"
#include "anticycle/simd/bitops.hpp"
#include "anticycle/vertex_set.hpp"

using namespace anticycle;
using simd::Kernels;
using simd::Word;

namespace {

std::vector<Word> random_words(Rng& rng, std::size_t n) {
  std::vector<Word> w(n);
  for (Word& x : w) {
    const auto kind = rng.below(4);
    x = kind == 0 ? 0 : kind == 1 ? ~Word{0} : rng.bits() & rng.bits();
  }
  return w;
}

void check_equivalent(const Kernels& ref, const Kernels& k) {
  Rng rng(11);
  for (std::size_t n = 0; n < 40; ++n) {
    for (int t = 0; t < 20; ++t) {
      const std::vector<Word> a = random_words(rng, n);
      const std::vector<Word> b = random_words(rng, n);
      CHECK(ref.any_common(a.data(), b.data(), n) == k.any_common(a.data(), b.data(), n));
      CHECK(ref.popcount(a.data(), n) == k.popcount(a.data(), n));
      CHECK(ref.popcount_and(a.data(), b.data(), n) == k.popcount_and(a.data(), b.data(), n));
      std::vector<Word> r1 = a, r2 = a;
      ref.or_into(r1.data(), b.data(), n);
      k.or_into(r2.data(), b.data(), n);
      CHECK(r1 == r2);
      r1 = a;
      r2 = a;
      ref.and_into(r1.data(), b.data(), n);
      k.and_into(r2.data(), b.data(), n);
      CHECK(r1 == r2);
      r1 = a;
      r2 = a;
      ref.andnot_into(r1.data(), b.data(), n);
      k.andnot_into(r2.data(), b.data(), n);
      CHECK(r1 == r2);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match a plain loop") {
  const Kernels& s = simd::scalar_kernels();
  const std::vector<Word> a{0b1011, 0, ~Word{0}};
  const std::vector<Word> b{0b0100, 1, 1};
  CHECK(s.popcount(a.data(), 3) == 3 + 64);
  CHECK(s.popcount_and(a.data(), b.data(), 3) == 1);
  CHECK(s.any_common(a.data(), b.data(), 3));
  CHECK_FALSE(s.any_common(a.data(), b.data(), 2));
}

TEST_CASE("avx2 kernels agree with scalar") {
  const Kernels* k = simd::avx2_kernels();
  if (k == nullptr) {
    MESSAGE("AVX2 not available; skipped");
    return;
  }
  check_equivalent(simd::scalar_kernels(), *k);
}

TEST_CASE("neon kernels agree with scalar") {
  const Kernels* k = simd::neon_kernels();
  if (k == nullptr) {
    MESSAGE("NEON not available; skipped");
    return;
  }
  check_equivalent(simd::scalar_kernels(), *k);
}

TEST_CASE("dispatch honours the override") {
  const char* env = std::getenv("ANTICYCLE_SIMD");
  if (env != nullptr && std::string(env) == "scalar") CHECK(simd::active_kernels().name == simd::scalar_kernels().name);
  check_equivalent(simd::scalar_kernels(), simd::active_kernels());
}

TEST_CASE("vertex set algebra on odd universes") {
  Rng rng(5);
  for (int u : {1, 63, 64, 65, 200, 257}) {
    VertexSet a(u), b(u);
    std::vector<bool> ra(u), rb(u);
    for (int v = 0; v < u; ++v) {
      if (rng.chance(0.4)) {
        a.insert(v);
        ra[v] = true;
      }
      if (rng.chance(0.4)) {
        b.insert(v);
        rb[v] = true;
      }
    }
    std::size_t both = 0, either = 0, only = 0;
    for (int v = 0; v < u; ++v) {
      both += ra[v] && rb[v];
      either += ra[v] || rb[v];
      only += ra[v] && !rb[v];
    }
    CHECK((a & b).size() == both);
    CHECK((a | b).size() == either);
    CHECK((a - b).size() == only);
    CHECK(a.intersection_size(b) == both);
    CHECK(a.intersects(b) == (both > 0));
    CHECK(a.complement().size() == static_cast<std::size_t>(u) - a.size());
    CHECK(VertexSet::full(u).size() == static_cast<std::size_t>(u));
  }
}
