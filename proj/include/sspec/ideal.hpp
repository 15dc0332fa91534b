#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "sspec/bitset.hpp"
#include "sspec/errors.hpp"
#include "sspec/ring.hpp"

namespace sspec {

/// An ideal of a finite ring as a dense membership set.  The ring is
/// referenced, not owned; it must outlive the ideal.
struct Ideal {
  const FiniteRing* ring = nullptr;
  Bitset members;

  bool contains(int a) const { return members.test(a); }
  bool is_whole_ring() const { return members.count() == ring->size; }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring == b.ring && a.members == b.members;
  }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }
};

/// A multiplicatively closed subset: contains one, avoids zero, closed
/// under products.
struct MultSet {
  const FiniteRing* ring = nullptr;
  Bitset members;

  bool contains(int a) const { return members.test(a); }

  friend bool operator==(const MultSet& a, const MultSet& b) {
    return a.ring == b.ring && a.members == b.members;
  }
};

namespace detail {

inline void require_same_ring(const FiniteRing* a, const FiniteRing* b) {
  if (a != b) throw invalid_parameter_error("operands belong to different rings");
}

/// Closes a subset under addition.  A union of sets already closed under
/// outer multiplication stays so, which is why ideal sum/product/generation
/// all reduce to this.
inline Bitset close_under_addition(const FiniteRing& ring, Bitset start) {
  std::vector<int> elems = start.to_indices();
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      int c = ring.add(elems[i], elems[j]);
      if (!start.test(c)) {
        start.set(c);
        elems.push_back(c);
      }
    }
  }
  return start;
}

}  // namespace detail

/// {s*a : a in A}, the elementwise product set.
inline Bitset scale_set(const FiniteRing& ring, int s, const Bitset& set) {
  Bitset out(ring.size);
  for (int a = 0; a < ring.size; ++a) {
    if (set.test(a)) out.set(ring.mul(s, a));
  }
  return out;
}

/// Direct-definition ideal predicate for an arbitrary subset.
inline bool is_ideal_subset(const FiniteRing& ring, const Bitset& subset) {
  if (!subset.test(0)) return false;
  const auto elems = subset.to_indices();
  for (int a : elems) {
    for (int b : elems) {
      if (!subset.test(ring.add(a, b))) return false;
    }
    for (int r = 0; r < ring.size; ++r) {
      if (!subset.test(ring.mul(r, a))) return false;
    }
  }
  return true;
}

inline Ideal zero_ideal(const FiniteRing& ring) {
  Bitset m(ring.size);
  m.set(0);
  return {&ring, m};
}

inline Ideal unit_ideal(const FiniteRing& ring) {
  return {&ring, Bitset::full(ring.size)};
}

/// Least ideal containing the generators: closure of {r*g} under addition.
inline Ideal ideal_generated(const FiniteRing& ring, const std::vector<int>& gens) {
  Bitset start(ring.size);
  start.set(0);
  for (int g : gens) {
    if (!ring.in_range(g)) {
      throw invalid_parameter_error("generator index " + std::to_string(g) +
                                    " out of range");
    }
    for (int r = 0; r < ring.size; ++r) start.set(ring.mul(r, g));
  }
  return {&ring, detail::close_under_addition(ring, start)};
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a.ring, b.ring);
  return {a.ring, detail::close_under_addition(*a.ring, a.members | b.members)};
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a.ring, b.ring);
  const FiniteRing& ring = *a.ring;
  Bitset prods(ring.size);
  for (int x : a.members.to_indices()) {
    for (int y : b.members.to_indices()) prods.set(ring.mul(x, y));
  }
  return {a.ring, detail::close_under_addition(ring, prods)};
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  detail::require_same_ring(a.ring, b.ring);
  return {a.ring, a.members & b.members};
}

/// (I : s) = {a : s*a in I}; always an ideal.
inline Ideal colon(const Ideal& ideal, int s) {
  const FiniteRing& ring = *ideal.ring;
  if (!ring.in_range(s)) throw invalid_parameter_error("colon element out of range");
  Bitset out(ring.size);
  for (int a = 0; a < ring.size; ++a) {
    if (ideal.contains(ring.mul(s, a))) out.set(a);
  }
  return {&ring, out};
}

/**
 * Every ideal of the ring, canonically ordered (cardinality, then
 * lexicographic on membership).  Computed by closing the principal ideals
 * under pairwise ideal sum; every ideal is a finite join of principal
 * sub-ideals, so the closure is complete.
 */
inline std::vector<Ideal> all_ideals(const FiniteRing& ring,
                                     int size_cap = kDefaultSizeCap) {
  if (ring.size > size_cap) {
    throw capacity_error("ideal enumeration over " + std::to_string(ring.size) +
                         " elements exceeds the cap of " + std::to_string(size_cap));
  }
  std::set<Bitset, BitsetLexLess> seen;
  std::vector<Bitset> work;
  auto push = [&](const Bitset& b) {
    if (seen.insert(b).second) work.push_back(b);
  };
  Bitset zero(ring.size);
  zero.set(0);
  push(zero);
  for (int a = 0; a < ring.size; ++a) {
    push(ideal_generated(ring, {a}).members);
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      push(detail::close_under_addition(ring, work[i] | work[j]));
    }
  }
  std::sort(work.begin(), work.end(), Bitset::canonical_less);
  std::vector<Ideal> out;
  out.reserve(work.size());
  for (auto& m : work) out.push_back({&ring, std::move(m)});
  return out;
}

/**
 * Least multiplicatively closed set containing the generators and one.
 * Errors out if zero enters the closure: such generators are not
 * admissible and silently repairing them would change the input's meaning.
 */
inline MultSet mult_closure(const FiniteRing& ring, const std::vector<int>& gens) {
  Bitset members(ring.size);
  std::vector<int> elems;
  auto push = [&](int a) {
    if (!members.test(a)) {
      members.set(a);
      elems.push_back(a);
    }
  };
  for (int g : gens) {
    if (!ring.in_range(g)) {
      throw invalid_parameter_error("generator index " + std::to_string(g) +
                                    " out of range");
    }
    push(g);
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      push(ring.mul(elems[i], elems[j]));
    }
  }
  if (members.test(0)) {
    throw invalid_multset_error(
        "generators are not admissible: zero lies in the multiplicative closure");
  }
  members.set(ring.one);
  return {&ring, members};
}

/**
 * S-radical of I: all a with s*a^n in I for some s in S and n >= 1.  The
 * exponent search stops once the power sequence of a revisits a value;
 * past that point no new products s*a^n arise.
 */
inline Ideal s_radical(const MultSet& mults, const Ideal& ideal) {
  detail::require_same_ring(mults.ring, ideal.ring);
  const FiniteRing& ring = *ideal.ring;
  const auto s_elems = mults.members.to_indices();
  Bitset out(ring.size);
  for (int a = 0; a < ring.size; ++a) {
    Bitset visited(ring.size);
    int p = a;
    while (!visited.test(p)) {
      visited.set(p);
      bool hit = false;
      for (int s : s_elems) {
        if (ideal.contains(ring.mul(s, p))) {
          hit = true;
          break;
        }
      }
      if (hit) {
        out.set(a);
        break;
      }
      p = ring.mul(p, a);
    }
  }
  return {&ring, out};
}

inline bool is_s_radical_ideal(const MultSet& mults, const Ideal& ideal) {
  return s_radical(mults, ideal) == ideal;
}

}  // namespace sspec
