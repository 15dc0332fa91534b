#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sspec/bitset.hpp"
#include "sspec/errors.hpp"
#include "sspec/spectrum.hpp"

namespace sspec {

/**
 * An explicit finite topology over spectrum points: the complete,
 * deduplicated open family in canonical order.  Storing every open keeps
 * each theorem check a finite set-algebra computation.
 */
struct FiniteTopology {
  enum class Kind { s_zariski, s_flat, derived };

  Kind kind = Kind::derived;
  int point_count = 0;
  std::vector<Bitset> opens;  // canonical order; contains empty and full

  bool is_open(const Bitset& s) const {
    return std::find(opens.begin(), opens.end(), s) != opens.end();
  }
  bool is_closed(const Bitset& s) const { return is_open(s.complement()); }

  std::vector<Bitset> closed_sets() const {
    std::vector<Bitset> out;
    out.reserve(opens.size());
    for (const auto& u : opens) out.push_back(u.complement());
    std::sort(out.begin(), out.end(), Bitset::canonical_less);
    return out;
  }
};

namespace detail {

inline std::vector<Bitset> canonical_family(std::set<Bitset, BitsetLexLess>& fam) {
  std::vector<Bitset> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), Bitset::canonical_less);
  return out;
}

inline void validate_topology(const FiniteTopology& t) {
  Bitset empty(t.point_count);
  if (!t.is_open(empty) || !t.is_open(Bitset::full(t.point_count))) {
    throw validation_error("topology is missing the empty or full set");
  }
  for (const auto& a : t.opens) {
    for (const auto& b : t.opens) {
      if (!t.is_open(a | b)) {
        throw validation_error("open family not closed under union");
      }
      if (!t.is_open(a & b)) {
        throw validation_error("open family not closed under intersection");
      }
    }
  }
}

}  // namespace detail

/// Generates the topology whose opens have the given sub-basis: close
/// under finite intersection, then under union, to a fixed point.
inline FiniteTopology topology_from_open_subbasis(int point_count,
                                                  const std::vector<Bitset>& subbasis) {
  for (const auto& s : subbasis) {
    if (s.size() != point_count) {
      throw invalid_parameter_error("sub-basis set has wrong carrier size");
    }
  }
  std::set<Bitset, BitsetLexLess> basis;
  basis.insert(Bitset::full(point_count));  // empty intersection
  for (const auto& s : subbasis) basis.insert(s);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bitset> cur(basis.begin(), basis.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (basis.insert(cur[i] & cur[j]).second) changed = true;
      }
    }
  }
  std::set<Bitset, BitsetLexLess> opens;
  opens.insert(Bitset(point_count));  // empty union
  for (const auto& b : basis) opens.insert(b);
  changed = true;
  while (changed) {
    changed = false;
    std::vector<Bitset> cur(opens.begin(), opens.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (opens.insert(cur[i] | cur[j]).second) changed = true;
      }
    }
  }
  FiniteTopology t;
  t.kind = FiniteTopology::Kind::derived;
  t.point_count = point_count;
  t.opens = detail::canonical_family(opens);
  detail::validate_topology(t);
  return t;
}

/// The S-Zariski topology: closed sets are the varieties V_S(I).
inline FiniteTopology s_zariski_topology(const SpectrumSpace& space) {
  const int n = static_cast<int>(space.points.size());
  std::set<Bitset, BitsetLexLess> opens;
  for (const Ideal& ideal : space.ideals) {
    opens.insert(v_s(space, ideal).complement());
  }
  FiniteTopology t;
  t.kind = FiniteTopology::Kind::s_zariski;
  t.point_count = n;
  t.opens = detail::canonical_family(opens);
  detail::validate_topology(t);
  return t;
}

/// The S-flat topology: generated by the V_S(f), f in R, as an open sub-basis.
inline FiniteTopology s_flat_topology(const SpectrumSpace& space) {
  const int n = static_cast<int>(space.points.size());
  std::vector<Bitset> subbasis;
  subbasis.reserve(static_cast<size_t>(space.ring->size));
  for (int f = 0; f < space.ring->size; ++f) {
    subbasis.push_back(v_s(space, ideal_generated(*space.ring, {f})));
  }
  FiniteTopology t = topology_from_open_subbasis(n, subbasis);
  t.kind = FiniteTopology::Kind::s_flat;
  return t;
}

/// Smallest closed superset of a point set.
inline Bitset closure(const FiniteTopology& t, const Bitset& set) {
  if (set.size() != t.point_count) {
    throw invalid_parameter_error("closure argument has wrong carrier size");
  }
  Bitset out = Bitset::full(t.point_count);
  for (const auto& u : t.opens) {
    Bitset c = u.complement();
    if (set.is_subset_of(c)) out &= c;
  }
  return out;
}

/// Lambda(P) = {Q : sQ subset of P for some s in S}, computed from the
/// formula rather than the topology.
inline Bitset lambda_closure(const SpectrumSpace& space, int point) {
  const int n = static_cast<int>(space.points.size());
  if (point < 0 || point >= n) throw invalid_parameter_error("point index out of range");
  const Bitset& p = space.points[point].ideal.members;
  Bitset out(n);
  for (int qi = 0; qi < n; ++qi) {
    const Bitset& q = space.points[qi].ideal.members;
    for (int s : space.mults.members.to_indices()) {
      if (scale_set(*space.ring, s, q).is_subset_of(p)) {
        out.set(qi);
        break;
      }
    }
  }
  return out;
}

/// A closed set is irreducible when it is nonempty and not covered by two
/// closed sets neither of which contains it.
inline bool is_irreducible(const FiniteTopology& t, const Bitset& closed_set) {
  if (!t.is_closed(closed_set)) {
    throw invalid_parameter_error("is_irreducible requires a closed set");
  }
  if (closed_set.none()) return false;
  const auto closed = t.closed_sets();
  for (size_t i = 0; i < closed.size(); ++i) {
    if (closed_set.is_subset_of(closed[i])) continue;
    for (size_t j = 0; j < i; ++j) {
      if (closed_set.is_subset_of(closed[j])) continue;
      if (closed_set.is_subset_of(closed[i] | closed[j])) return false;
    }
  }
  return true;
}

/// Generic points of an irreducible closed set, with the unique prime
/// representative singled out via witness-colon normalization.
struct GenericPoints {
  Bitset points;
  std::optional<int> prime_point;
};

inline GenericPoints generic_points(const SpectrumSpace& space, const FiniteTopology& t,
                                    const Bitset& irreducible_closed) {
  if (!t.is_closed(irreducible_closed) || !is_irreducible(t, irreducible_closed)) {
    throw invalid_parameter_error("generic_points requires an irreducible closed set");
  }
  const int n = t.point_count;
  GenericPoints out;
  out.points = Bitset(n);
  for (int p = 0; p < n; ++p) {
    Bitset single(n);
    single.set(p);
    if (closure(t, single) == irreducible_closed) {
      out.points.set(p);
      if (space.points[p].prime && !out.prime_point) out.prime_point = p;
    }
  }
  return out;
}

/// Maximal irreducible closed sets; every point lies in at least one.
inline std::vector<Bitset> irreducible_components(const FiniteTopology& t) {
  std::vector<Bitset> irr;
  for (const auto& c : t.closed_sets()) {
    if (c.any() && is_irreducible(t, c)) irr.push_back(c);
  }
  std::vector<Bitset> out;
  for (const auto& c : irr) {
    bool maximal = true;
    for (const auto& d : irr) {
      if (c != d && c.is_subset_of(d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), Bitset::canonical_less);
  return out;
}

/// Connected components by clopen-partition refinement.
inline std::vector<Bitset> connected_components(const FiniteTopology& t) {
  std::vector<Bitset> parts{Bitset::full(t.point_count)};
  for (const auto& u : t.opens) {
    if (!t.is_open(u.complement())) continue;  // not clopen
    std::vector<Bitset> next;
    for (const auto& part : parts) {
      Bitset inside = part & u;
      Bitset outside = part & u.complement();
      if (inside.any()) next.push_back(inside);
      if (outside.any()) next.push_back(outside);
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end(), Bitset::canonical_less);
  return parts;
}

/**
 * For a clopen partition (C1, C2) of the spectrum, finds elements f1, f2
 * with V_S(f1) = C1, V_S(f2) = C2, f1 + f2 in S, and f1*f2 in the
 * S-radical of (0).  Exhaustive over element pairs in ascending order;
 * absence of a certificate is a theorem counterexample, reported as an
 * empty optional.
 */
inline std::optional<std::pair<int, int>> clopen_certificate(const SpectrumSpace& space,
                                                             const Bitset& c1,
                                                             const Bitset& c2) {
  const int n = static_cast<int>(space.points.size());
  if (c1.size() != n || c2.size() != n || c1.intersects(c2) ||
      (c1 | c2) != Bitset::full(n)) {
    throw invalid_parameter_error("clopen_certificate requires a partition of the points");
  }
  std::set<Bitset, BitsetLexLess> closed;
  for (const Ideal& ideal : space.ideals) closed.insert(v_s(space, ideal));
  if (!closed.count(c1) || !closed.count(c2)) {
    throw invalid_parameter_error("clopen_certificate requires S-Zariski closed parts");
  }
  const FiniteRing& ring = *space.ring;
  const Ideal nilradical = s_radical(space.mults, zero_ideal(ring));
  for (int f1 = 0; f1 < ring.size; ++f1) {
    if (v_s(space, ideal_generated(ring, {f1})) != c1) continue;
    for (int f2 = 0; f2 < ring.size; ++f2) {
      if (!space.mults.contains(ring.add(f1, f2))) continue;
      if (!nilradical.contains(ring.mul(f1, f2))) continue;
      if (v_s(space, ideal_generated(ring, {f2})) == c2) return std::make_pair(f1, f2);
    }
  }
  return std::nullopt;
}

/// T0 separation: distinct points have distinct singleton closures.
inline bool is_t0(const FiniteTopology& t) {
  const int n = t.point_count;
  std::vector<Bitset> closures;
  closures.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    Bitset single(n);
    single.set(p);
    closures.push_back(closure(t, single));
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < p; ++q) {
      if (closures[p] == closures[q]) return false;
    }
  }
  return true;
}

/// One flat open together with the first lattice ideal whose variety it is.
struct OpenVariety {
  Bitset open;
  std::optional<int> ideal_index;  // into space.ideals; empty = counterexample
};

/**
 * Expresses every S-flat open as V_S(I) for a lattice ideal I.  On a
 * finite ring every ideal is finitely generated, so full success is the
 * finite-scale content of the quasi-compactness results.
 */
inline std::vector<OpenVariety> flat_opens_as_varieties(const SpectrumSpace& space,
                                                        const FiniteTopology& flat) {
  std::vector<OpenVariety> out;
  out.reserve(flat.opens.size());
  for (const auto& open : flat.opens) {
    OpenVariety ov{open, std::nullopt};
    for (size_t i = 0; i < space.ideals.size(); ++i) {
      if (v_s(space, space.ideals[i]) == open) {
        ov.ideal_index = static_cast<int>(i);
        break;
      }
    }
    out.push_back(std::move(ov));
  }
  return out;
}

/**
 * The four noetherian characterizations, evaluated literally:
 *  1. every strictly descending chain of flat-closed sets is finite,
 *  2. every flat open is a variety V_S(I),
 *  3. Lambda(P) = D_S(f) for some f, for every prime point P,
 *  4. the S-Zariski opens are closed under arbitrary intersection.
 * The four are equivalent and all hold on a finite spectrum; disagreement
 * is a theorem counterexample.
 */
struct NoetherianReport {
  bool chains_finite = false;
  int longest_closed_chain = 0;  // strictly descending, in the flat topology
  bool opens_are_varieties = false;
  bool lambda_is_basic_open = false;
  std::vector<std::pair<int, int>> lambda_witnesses;  // (prime point, f); f = -1 if none
  bool zariski_intersection_closed = false;

  bool all_hold() const {
    return chains_finite && opens_are_varieties && lambda_is_basic_open &&
           zariski_intersection_closed;
  }
};

inline NoetherianReport noetherian_report(const SpectrumSpace& space) {
  NoetherianReport report;
  const FiniteTopology flat = s_flat_topology(space);
  const FiniteTopology zariski = s_zariski_topology(space);

  // (1) longest strictly descending chain of flat-closed sets, by DP over
  // the inclusion order; the strict-subset relation is acyclic, so every
  // descending chain terminates.
  auto closed = flat.closed_sets();  // canonical order: cardinality ascending
  std::vector<int> depth(closed.size(), 1);
  for (size_t i = 0; i < closed.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (closed[j] != closed[i] && closed[j].is_subset_of(closed[i])) {
        depth[i] = std::max(depth[i], depth[j] + 1);
      }
    }
  }
  report.longest_closed_chain = *std::max_element(depth.begin(), depth.end());
  report.chains_finite = true;

  // (2)
  report.opens_are_varieties = true;
  for (const auto& ov : flat_opens_as_varieties(space, flat)) {
    if (!ov.ideal_index) report.opens_are_varieties = false;
  }

  // (3)
  report.lambda_is_basic_open = true;
  for (size_t p = 0; p < space.points.size(); ++p) {
    if (!space.points[p].prime) continue;
    Bitset lambda = lambda_closure(space, static_cast<int>(p));
    int witness = -1;
    for (int f = 0; f < space.ring->size; ++f) {
      if (d_s(space, ideal_generated(*space.ring, {f})) == lambda) {
        witness = f;
        break;
      }
    }
    if (witness < 0) report.lambda_is_basic_open = false;
    report.lambda_witnesses.emplace_back(static_cast<int>(p), witness);
  }

  // (4) pairwise intersections generate all finite (hence, carrier being
  // finite, all arbitrary) intersections.
  report.zariski_intersection_closed = true;
  std::set<Bitset, BitsetLexLess> inter(zariski.opens.begin(), zariski.opens.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bitset> cur(inter.begin(), inter.end());
    for (size_t i = 0; i < cur.size() && report.zariski_intersection_closed; ++i) {
      for (size_t j = 0; j < i; ++j) {
        Bitset meet = cur[i] & cur[j];
        if (inter.insert(meet).second) {
          changed = true;
          if (!zariski.is_open(meet)) {
            report.zariski_intersection_closed = false;
            break;
          }
        }
      }
    }
  }
  return report;
}

/**
 * Specialization digraph of the topology in DOT form: an edge Q -> P
 * whenever Q lies in the closure of {P}, transitively reduced.  Mutual
 * specialization classes come out as cycles, links between classes as
 * Hasse edges of the condensation.
 */
inline std::string specialization_dot(const SpectrumSpace& space,
                                      const FiniteTopology& t) {
  const int n = t.point_count;
  std::vector<Bitset> cls;
  cls.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    Bitset single(n);
    single.set(p);
    cls.push_back(closure(t, single));
  }
  auto reach = [&](int q, int p) { return q != p && cls[p].test(q); };
  auto mutual = [&](int q, int p) { return reach(q, p) && reach(p, q); };

  // Condense mutual-specialization classes.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int p = 0; p < n; ++p) {
    if (comp[p] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.push_back({p});
    comp[p] = id;
    for (int q = p + 1; q < n; ++q) {
      if (comp[q] < 0 && mutual(q, p)) {
        comp[q] = id;
        members[id].push_back(q);
      }
    }
  }
  const int k = static_cast<int>(members.size());
  auto class_reach = [&](int a, int b) {
    return a != b && reach(members[a].front(), members[b].front());
  };

  std::ostringstream os;
  os << "digraph specialization {\n";
  for (int p = 0; p < n; ++p) {
    os << "  p" << p << " [label=\"" << space.points[p].ideal.members.to_string()
       << "\"];\n";
  }
  for (const auto& cycle : members) {
    if (cycle.size() < 2) continue;
    for (size_t i = 0; i < cycle.size(); ++i) {
      os << "  p" << cycle[i] << " -> p" << cycle[(i + 1) % cycle.size()] << ";\n";
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!class_reach(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < k && direct; ++c) {
        if (class_reach(a, c) && class_reach(c, b)) direct = false;
      }
      if (direct) os << "  p" << members[a].front() << " -> p" << members[b].front()
                     << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace sspec
