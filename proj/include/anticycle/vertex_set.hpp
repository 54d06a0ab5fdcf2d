#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "anticycle/simd/bitops.hpp"

namespace anticycle {

/// Subset of the dense vertex range {0..universe-1}, stored as a bitset.
///
/// Binary operations require both operands to share the same universe.
class VertexSet {
 public:
  using Word = simd::Word;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  template <class Range>
  static VertexSet from(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }

  bool contains(int v) const {
    assert(v >= 0 && v < universe_);
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) {
    assert(v >= 0 && v < universe_);
    words_[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63);
  }
  void erase(int v) {
    assert(v >= 0 && v < universe_);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(Word{1} << (v & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const { return simd::active_kernels().popcount(words_.data(), words_.size()); }
  bool empty() const {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    return simd::active_kernels().any_common(words_.data(), o.words_.data(), words_.size());
  }
  std::size_t intersection_size(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    return simd::active_kernels().popcount_and(words_.data(), o.words_.data(), words_.size());
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    simd::active_kernels().or_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    simd::active_kernels().and_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    simd::active_kernels().andnot_into(words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  /// Lowest member, or -1.
  int first() const { return next(0); }
  /// Lowest member >= from, or -1.
  int next(int from) const {
    if (from >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(from) >> 6;
    Word w = words_[i] & (~Word{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<int>(i * 64 + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (Word{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace anticycle
