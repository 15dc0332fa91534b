#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sspec/io.hpp"
#include "sspec/spectrum.hpp"
#include "sspec/verify.hpp"

namespace sspec {

/// Which specialization order "lies below" uses on an S-prime spectrum.
/// The question leaves this open, so both readings are searchable.
enum class OrderMode { containment, s_specialization };

inline const char* to_string(OrderMode m) {
  return m == OrderMode::containment ? "containment" : "s-specialization";
}

/// low <= high under the chosen order: plain inclusion, or s*low inside
/// high for some s in the multiplicative set.
inline bool specializes(const FiniteRing& ring, const MultSet& mults, OrderMode mode,
                        const Bitset& low, const Bitset& high) {
  if (mode == OrderMode::containment) return low.is_subset_of(high);
  for (int s : mults.members.to_indices()) {
    if (scale_set(ring, s, low).is_subset_of(high)) return true;
  }
  return false;
}

/**
 * One going-down question: a morphism, a chain p_low <= p_high in the
 * source spectrum, and a target point q_high lying over p_high.  Asked:
 * is there a q_low <= q_high lying over p_low?
 */
struct GoingDownInstance {
  RingMorphism phi;
  MultSet source_mults;
  OrderMode order = OrderMode::containment;
  Ideal p_low, p_high;
  Ideal q_high;
};

struct GoingDownResult {
  bool holds = false;
  std::optional<Ideal> q_low;
};

namespace detail {

inline GoingDownResult going_down_search(const InducedMap& im, OrderMode mode,
                                         int p_low_idx, int q_high_idx) {
  const Bitset& q_high = im.target.points[q_high_idx].ideal.members;
  for (size_t q = 0; q < im.target.points.size(); ++q) {
    if (im.point_map[q] != p_low_idx) continue;
    if (specializes(*im.phi.target, im.target.mults, mode,
                    im.target.points[q].ideal.members, q_high)) {
      return {true, im.target.points[q].ideal};
    }
  }
  return {false, std::nullopt};
}

}  // namespace detail

/// Checks a single instance; returns a witness q_low when the property holds.
inline GoingDownResult check_going_down(const GoingDownInstance& inst) {
  InducedMap im = induced_map(inst.phi, inst.source_mults);
  int p_low_idx = im.source.point_index(inst.p_low.members);
  int p_high_idx = im.source.point_index(inst.p_high.members);
  int q_high_idx = im.target.point_index(inst.q_high.members);
  if (p_low_idx < 0 || p_high_idx < 0) {
    throw invalid_parameter_error("p_low / p_high must be S-prime points of the source");
  }
  if (q_high_idx < 0) {
    throw invalid_parameter_error("q_high must be a point of the target spectrum");
  }
  if (im.point_map[q_high_idx] != p_high_idx) {
    throw invalid_parameter_error("q_high does not lie over p_high");
  }
  if (!specializes(*inst.phi.source, inst.source_mults, inst.order, inst.p_low.members,
                   inst.p_high.members)) {
    throw invalid_parameter_error("p_low does not lie below p_high in the chosen order");
  }
  return detail::going_down_search(im, inst.order, p_low_idx, q_high_idx);
}

/// Outcome of a brute-force sweep.  Failures carry full instances so each
/// one can be replayed through check_going_down.
struct GoingDownReport {
  OrderMode order = OrderMode::containment;
  long long instances = 0;
  long long morphisms_seen = 0;
  long long morphisms_skipped = 0;  // zero in the image of S
  std::vector<GoingDownInstance> failures;
  std::vector<std::string> capped;  // entries skipped for cap reasons

  bool counterexample_found() const { return !failures.empty(); }
};

/**
 * Sweeps every corpus (ring, S) pair against every target ring: all
 * enumerable morphisms, all chains, all points over the top of each chain.
 * The report is an experimental outcome; no claim is made either way.
 */
inline GoingDownReport search_counterexamples(
    const CorpusSpec& corpus, const std::vector<CorpusEntry>& targets, OrderMode mode,
    int cap = 0) {
  if (cap <= 0) cap = corpus.morphism_cap;
  GoingDownReport report;
  report.order = mode;
  for (const CorpusEntry& entry : corpus.entries) {
    for (const CorpusEntry& target : targets) {
      if (entry.ring->size > cap) {
        report.capped.push_back(entry.ring->name + " -> " + target.ring->name +
                                ": source exceeds morphism cap");
        continue;
      }
      std::vector<RingMorphism> morphisms =
          enumerate_morphisms(*entry.ring, *target.ring, cap);
      for (const auto& gens : entry.mult_gens) {
        MultSet mults = mult_closure(*entry.ring, gens);
        for (const RingMorphism& phi : morphisms) {
          ++report.morphisms_seen;
          bool zero_in_image = false;
          for (int s : mults.members.to_indices()) {
            if (phi.map[s] == 0) {
              zero_in_image = true;
              break;
            }
          }
          if (zero_in_image) {
            ++report.morphisms_skipped;
            continue;
          }
          InducedMap im = induced_map(phi, mults);
          for (size_t qh = 0; qh < im.target.points.size(); ++qh) {
            int ph = im.point_map[qh];
            if (ph < 0) continue;
            for (size_t pl = 0; pl < im.source.points.size(); ++pl) {
              if (!specializes(*entry.ring, mults, mode,
                               im.source.points[pl].ideal.members,
                               im.source.points[ph].ideal.members)) {
                continue;
              }
              ++report.instances;
              GoingDownResult res = detail::going_down_search(
                  im, mode, static_cast<int>(pl), static_cast<int>(qh));
              if (!res.holds) {
                report.failures.push_back(GoingDownInstance{
                    phi, mults, mode, im.source.points[pl].ideal,
                    im.source.points[ph].ideal, im.target.points[qh].ideal});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

inline json going_down_report_json(const GoingDownReport& report) {
  json doc;
  doc["order"] = to_string(report.order);
  doc["instances"] = report.instances;
  doc["morphisms"] = report.morphisms_seen;
  doc["morphisms_skipped_zero_image"] = report.morphisms_skipped;
  doc["capped"] = report.capped;
  json fails = json::array();
  for (const auto& f : report.failures) {
    fails.push_back(json{{"morphism", f.phi.map},
                         {"mults", members_json(f.source_mults.members)},
                         {"p_low", members_json(f.p_low.members)},
                         {"p_high", members_json(f.p_high.members)},
                         {"q_high", members_json(f.q_high.members)}});
  }
  doc["counterexamples"] = std::move(fails);
  doc["counterexample_found"] = report.counterexample_found();
  return doc;
}

}  // namespace sspec
