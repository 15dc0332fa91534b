#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sspec/bitset.hpp"
#include "sspec/errors.hpp"
#include "sspec/ideal.hpp"
#include "sspec/ring.hpp"

namespace sspec {

/// Classical primality: P proper and ab in P implies a in P or b in P.
inline bool is_prime(const Ideal& p) {
  const FiniteRing& ring = *p.ring;
  if (p.is_whole_ring()) return false;
  for (int a = 0; a < ring.size; ++a) {
    if (p.contains(a)) continue;
    for (int b = 0; b < ring.size; ++b) {
      if (p.contains(b)) continue;
      if (p.contains(ring.mul(a, b))) return false;
    }
  }
  return true;
}

/**
 * S-primality test.  P is S-prime when P avoids S and one fixed s in S
 * satisfies: ab in P implies sa in P or sb in P, for all pairs.  Returns
 * the verdict together with every s that works, so the colon uniqueness
 * of the witness map is directly checkable.
 */
inline std::pair<bool, std::vector<int>> is_s_prime(const MultSet& mults,
                                                    const Ideal& p) {
  detail::require_same_ring(mults.ring, p.ring);
  const FiniteRing& ring = *p.ring;
  std::vector<int> witnesses;
  if (p.members.intersects(mults.members) || p.is_whole_ring()) {
    return {false, witnesses};
  }
  for (int s : mults.members.to_indices()) {
    bool ok = true;
    for (int a = 0; a < ring.size && ok; ++a) {
      for (int b = 0; b <= a && ok; ++b) {
        if (!p.contains(ring.mul(a, b))) continue;
        if (!p.contains(ring.mul(s, a)) && !p.contains(ring.mul(s, b))) ok = false;
      }
    }
    if (ok) witnesses.push_back(s);
  }
  return {!witnesses.empty(), witnesses};
}

/**
 * One S-prime ideal with its witness data: all admissible s, classical
 * primality, and the common prime value of (P:s) over s in S when one
 * exists (it always does for an S-prime; absence would falsify the witness
 * colon remark and is reported by the verifier, not thrown here).
 */
struct SpectrumPoint {
  Ideal ideal;
  std::vector<int> witnesses;
  bool prime = false;
  std::optional<Ideal> colon_prime;
  bool colon_primes_agree = true;
};

/// Spec_S R: the canonical list of S-prime ideals plus the full ideal
/// lattice they were filtered from.
struct SpectrumSpace {
  const FiniteRing* ring = nullptr;
  MultSet mults;
  std::vector<Ideal> ideals;  // full lattice, canonical order
  std::vector<SpectrumPoint> points;

  int point_index(const Bitset& members) const {
    for (size_t i = 0; i < points.size(); ++i) {
      if (points[i].ideal.members == members) return static_cast<int>(i);
    }
    return -1;
  }
  int ideal_index(const Bitset& members) const {
    for (size_t i = 0; i < ideals.size(); ++i) {
      if (ideals[i].members == members) return static_cast<int>(i);
    }
    return -1;
  }
};

inline SpectrumSpace spec_s(const FiniteRing& ring, const MultSet& mults) {
  detail::require_same_ring(&ring, mults.ring);
  SpectrumSpace space;
  space.ring = &ring;
  space.mults = mults;
  space.ideals = all_ideals(ring);
  for (const Ideal& candidate : space.ideals) {
    auto [ok, wits] = is_s_prime(mults, candidate);
    if (!ok) continue;
    SpectrumPoint pt;
    pt.ideal = candidate;
    pt.witnesses = std::move(wits);
    pt.prime = is_prime(candidate);
    for (int s : mults.members.to_indices()) {
      Ideal c = colon(candidate, s);
      if (!is_prime(c)) continue;
      if (!pt.colon_prime) {
        pt.colon_prime = c;
      } else if (*pt.colon_prime != c) {
        pt.colon_primes_agree = false;
      }
    }
    space.points.push_back(std::move(pt));
  }
  return space;
}

/// V_S(I) = {P : sI subset of P for some s in S}, as a set of point indices.
inline Bitset v_s(const SpectrumSpace& space, const Ideal& ideal) {
  detail::require_same_ring(space.ring, ideal.ring);
  Bitset out(static_cast<int>(space.points.size()));
  for (size_t i = 0; i < space.points.size(); ++i) {
    const Bitset& p = space.points[i].ideal.members;
    for (int s : space.mults.members.to_indices()) {
      if (scale_set(*space.ring, s, ideal.members).is_subset_of(p)) {
        out.set(static_cast<int>(i));
        break;
      }
    }
  }
  return out;
}

/// V_S(E) for an arbitrary subset E of the ring.
inline Bitset v_s_subset(const SpectrumSpace& space, const Bitset& subset) {
  Bitset out(static_cast<int>(space.points.size()));
  for (size_t i = 0; i < space.points.size(); ++i) {
    const Bitset& p = space.points[i].ideal.members;
    for (int s : space.mults.members.to_indices()) {
      if (scale_set(*space.ring, s, subset).is_subset_of(p)) {
        out.set(static_cast<int>(i));
        break;
      }
    }
  }
  return out;
}

/// D_S(I), the complement of V_S(I).
inline Bitset d_s(const SpectrumSpace& space, const Ideal& ideal) {
  return v_s(space, ideal).complement();
}

/// The common prime value of (P:s); guaranteed for S-primes.
inline const Ideal& witness_colon(const SpectrumPoint& point) {
  if (!point.colon_prime) {
    throw validation_error("S-prime point " + point.ideal.members.to_string() +
                           " has no prime witness colon");
  }
  return *point.colon_prime;
}

/// The primes disjoint from S, i.e. Spec of the localization, with the
/// inclusion-maximal ones flagged.
struct LocalizationSpec {
  std::vector<Ideal> primes;   // canonical order
  std::vector<bool> maximal;   // aligned with primes
};

inline LocalizationSpec localization_spec(const FiniteRing& ring, const MultSet& mults) {
  detail::require_same_ring(&ring, mults.ring);
  LocalizationSpec out;
  for (const Ideal& candidate : all_ideals(ring)) {
    if (candidate.members.intersects(mults.members)) continue;
    if (is_prime(candidate)) out.primes.push_back(candidate);
  }
  out.maximal.resize(out.primes.size(), true);
  for (size_t i = 0; i < out.primes.size(); ++i) {
    for (size_t j = 0; j < out.primes.size(); ++j) {
      if (i != j && out.primes[i].members.is_subset_of(out.primes[j].members)) {
        out.maximal[i] = false;
        break;
      }
    }
  }
  return out;
}

/**
 * The induced map Spec_{phi(S)}(target) -> Spec_S(source) of a ring
 * morphism, computed pointwise as Q |-> phi^{-1}(Q).  point_map[i] is the
 * source point index of target point i, or -1 if the preimage failed to be
 * S-prime (a theorem counterexample the verifier reports).
 */
struct InducedMap {
  RingMorphism phi;
  SpectrumSpace source;
  SpectrumSpace target;  // with respect to the image multiplicative set
  std::vector<int> point_map;

  bool total() const {
    for (int v : point_map) {
      if (v < 0) return false;
    }
    return true;
  }
};

inline InducedMap induced_map(const RingMorphism& phi, const MultSet& source_mults) {
  detail::require_same_ring(phi.source, source_mults.ring);
  std::vector<int> image_gens;
  for (int s : source_mults.members.to_indices()) {
    int v = phi.map[s];
    if (v == 0) {
      throw invalid_parameter_error("zero lies in the image of the multiplicative set");
    }
    image_gens.push_back(v);
  }
  // The image of a multiplicatively closed set is closed; re-running the
  // closure validates that and catches encoding bugs.
  MultSet image_mults = mult_closure(*phi.target, image_gens);

  InducedMap out;
  out.phi = phi;
  out.source = spec_s(*phi.source, source_mults);
  out.target = spec_s(*phi.target, image_mults);
  out.point_map.reserve(out.target.points.size());
  for (const SpectrumPoint& q : out.target.points) {
    Bitset pre(phi.source->size);
    for (int a = 0; a < phi.source->size; ++a) {
      if (q.ideal.contains(phi.map[a])) pre.set(a);
    }
    out.point_map.push_back(out.source.point_index(pre));
  }
  return out;
}

}  // namespace sspec
