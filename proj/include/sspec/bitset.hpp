#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace sspec {

/**
 * Dense membership set over element indices 0..size-1.
 *
 * Every subset in the library (ideal members, multiplicative sets, point
 * sets of a topology) is one of these, so set algebra is exact bit
 * arithmetic.  The canonical order used throughout for deterministic
 * output is (cardinality, then lexicographic on the membership vector).
 */
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(int size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset of(int size, std::initializer_list<int> indices) {
    Bitset b(size);
    for (int i : indices) b.set(i);
    return b;
  }

  int size() const { return size_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  /// true iff this is a subset of other (sizes must match).
  bool is_subset_of(const Bitset& other) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r = *this;
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
    return r;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int i = 0; i < size_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  /// "{0,2,4}" rendering used by reports and DOT labels.
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < size_; ++i) {
      if (!test(i)) continue;
      if (!first) os << ',';
      os << i;
      first = false;
    }
    os << '}';
    return os.str();
  }

  /// Lexicographic order on the membership vector b_0 b_1 ... (absent < present).
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (size_t k = 0; k < a.words_.size(); ++k) {
      uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        int bit = std::countr_zero(diff);
        return !((a.words_[k] >> bit) & 1u);
      }
    }
    return false;
  }

  /// Canonical order: cardinality first, then lexicographic.
  static bool canonical_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
  }

 private:
  void trim() {
    int rem = size_ & 63;
    if (rem != 0 && !words_.empty()) {
      words_.back() &= (uint64_t{1} << rem) - 1;
    }
  }

  int size_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetLexLess {
  bool operator()(const Bitset& a, const Bitset& b) const { return Bitset::lex_less(a, b); }
};

struct BitsetCanonicalLess {
  bool operator()(const Bitset& a, const Bitset& b) const {
    return Bitset::canonical_less(a, b);
  }
};

}  // namespace sspec
