#include <catch2/catch_amalgamated.hpp>

#include "sspec/goingdown.hpp"

using namespace sspec;

TEST_CASE("the worked Z/12 -> Z/6 instance holds with witness (0)", "[goingdown]") {
  FiniteRing z12 = make_zn(12), z6 = make_zn(6);
  auto morphs = enumerate_morphisms(z12, z6);
  REQUIRE(morphs.size() == 1);
  MultSet s = mult_closure(z12, {3});

  GoingDownInstance inst;
  inst.phi = morphs[0];
  inst.source_mults = s;
  inst.order = OrderMode::containment;
  inst.p_low = Ideal{&z12, Bitset::of(12, {0, 6})};
  inst.p_high = Ideal{&z12, Bitset::of(12, {0, 2, 4, 6, 8, 10})};
  inst.q_high = Ideal{&z6, Bitset::of(6, {0, 2, 4})};

  GoingDownResult res = check_going_down(inst);
  CHECK(res.holds);
  REQUIRE(res.q_low.has_value());
  CHECK(res.q_low->members == Bitset::of(6, {0}));
}

TEST_CASE("identity morphisms satisfy going-down trivially", "[goingdown]") {
  FiniteRing z12 = make_zn(12);
  RingMorphism id{&z12, &z12, {}};
  for (int a = 0; a < 12; ++a) id.map.push_back(a);
  MultSet s = mult_closure(z12, {3});

  GoingDownInstance inst;
  inst.phi = id;
  inst.source_mults = s;
  inst.order = OrderMode::containment;
  inst.p_low = Ideal{&z12, Bitset::of(12, {0, 6})};
  inst.p_high = Ideal{&z12, Bitset::of(12, {0, 2, 4, 6, 8, 10})};
  inst.q_high = inst.p_high;
  GoingDownResult res = check_going_down(inst);
  CHECK(res.holds);
  REQUIRE(res.q_low.has_value());
  CHECK(res.q_low->members == inst.p_low.members);  // q_low = p_low

  // reflexive chain: p_low = p_high
  inst.p_low = inst.p_high;
  GoingDownResult refl = check_going_down(inst);
  CHECK(refl.holds);
  CHECK(refl.q_low->members == inst.q_high.members);
}

TEST_CASE("check_going_down validates its instance", "[goingdown]") {
  FiniteRing z12 = make_zn(12), z6 = make_zn(6);
  auto morphs = enumerate_morphisms(z12, z6);
  MultSet s = mult_closure(z12, {3});
  GoingDownInstance inst;
  inst.phi = morphs[0];
  inst.source_mults = s;
  inst.order = OrderMode::containment;
  inst.p_low = Ideal{&z12, Bitset::of(12, {0, 2, 4, 6, 8, 10})};
  inst.p_high = Ideal{&z12, Bitset::of(12, {0, 6})};  // not above p_low
  inst.q_high = Ideal{&z6, Bitset::of(6, {0})};
  CHECK_THROWS_AS(check_going_down(inst), invalid_parameter_error);

  inst.p_low = Ideal{&z12, Bitset::of(12, {0, 3, 6, 9})};  // not S-prime
  CHECK_THROWS_AS(check_going_down(inst), invalid_parameter_error);
}

TEST_CASE("search reports replay exactly", "[goingdown]") {
  CorpusSpec corpus = builtin_corpus();
  for (OrderMode mode : {OrderMode::containment, OrderMode::s_specialization}) {
    GoingDownReport report = search_counterexamples(corpus, corpus.entries, mode);
    INFO(to_string(mode));
    CHECK(report.instances > 0);
    CHECK(report.capped.empty());
    for (const auto& failure : report.failures) {
      CHECK_FALSE(check_going_down(failure).holds);
    }
  }
}

TEST_CASE("empty target list means empty report", "[goingdown]") {
  CorpusSpec corpus = builtin_corpus();
  GoingDownReport report =
      search_counterexamples(corpus, {}, OrderMode::containment);
  CHECK(report.instances == 0);
  CHECK(report.failures.empty());
  CHECK_FALSE(report.counterexample_found());
}

TEST_CASE("containment mode with S = {1} matches the classical check",
          "[goingdown][oracle]") {
  // classical going-down re-derived directly on prime spectra
  FiniteRing source = make_product({make_zn(2), make_zn(2)});
  FiniteRing target = make_product({make_zn(2), make_zn(2), make_zn(2)});
  CorpusSpec corpus;
  CorpusEntry entry;
  entry.ring_desc = json{{"kind", "product"}};
  entry.ring = std::make_shared<FiniteRing>(source);
  entry.mult_gens.push_back({});
  corpus.entries.push_back(entry);
  CorpusEntry tgt;
  tgt.ring_desc = json{{"kind", "product"}};
  tgt.ring = std::make_shared<FiniteRing>(target);
  std::vector<CorpusEntry> targets{tgt};

  GoingDownReport report =
      search_counterexamples(corpus, targets, OrderMode::containment);

  long long classical_instances = 0, classical_failures = 0;
  MultSet s = mult_closure(*entry.ring, {});
  for (const auto& phi : enumerate_morphisms(*entry.ring, *tgt.ring)) {
    SpectrumSpace src = spec_s(*entry.ring, s);
    SpectrumSpace dst = spec_s(*tgt.ring, mult_closure(*tgt.ring, {phi.map[entry.ring->one]}));
    for (const auto& qh : dst.points) {
      Bitset pre_qh(entry.ring->size);
      for (int a = 0; a < entry.ring->size; ++a) {
        if (qh.ideal.contains(phi.map[a])) pre_qh.set(a);
      }
      for (const auto& ph : src.points) {
        if (ph.ideal.members != pre_qh) continue;
        for (const auto& pl : src.points) {
          if (!pl.ideal.members.is_subset_of(ph.ideal.members)) continue;
          ++classical_instances;
          bool holds = false;
          for (const auto& ql : dst.points) {
            if (!ql.ideal.members.is_subset_of(qh.ideal.members)) continue;
            Bitset pre(entry.ring->size);
            for (int a = 0; a < entry.ring->size; ++a) {
              if (ql.ideal.contains(phi.map[a])) pre.set(a);
            }
            if (pre == pl.ideal.members) {
              holds = true;
              break;
            }
          }
          if (!holds) ++classical_failures;
        }
      }
    }
  }
  CHECK(report.instances == classical_instances);
  CHECK(static_cast<long long>(report.failures.size()) == classical_failures);
}
