// sspec: S-prime spectra, S-Zariski / S-flat topologies, and exhaustive
// theorem verification over finite commutative rings.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sspec/sspec.hpp"

namespace {

using sspec::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sspec::input_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw sspec::input_error("bad JSON in " + path + ": " + e.what());
  }
}

struct RingInput {
  json desc;
  sspec::FiniteRing ring;
};

RingInput load_ring(const std::string& path) {
  RingInput in;
  in.desc = load_json_file(path);
  in.ring = sspec::ring_from_json(in.desc);
  return in;
}

void print_ring_header(const RingInput& in, const sspec::MultSet* mults) {
  std::cout << "ring: " << in.ring.name << " (" << in.ring.size << " elements)\n";
  if (mults) std::cout << "S: " << mults->members.to_string() << "\n";
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- spec

int run_spec(const std::string& ring_path, const std::string& mult_text,
             const std::string& format) {
  RingInput in = load_ring(ring_path);
  std::vector<int> gens = sspec::parse_generator_list(mult_text);
  sspec::MultSet mults = sspec::mult_closure(in.ring, gens);
  sspec::SpectrumSpace space = sspec::spec_s(in.ring, mults);
  if (format == "json") {
    emit(sspec::spectrum_to_json(space, in.desc, gens));
    return 0;
  }
  print_ring_header(in, &mults);
  std::cout << "points (" << space.points.size() << "):\n";
  for (size_t i = 0; i < space.points.size(); ++i) {
    const auto& p = space.points[i];
    std::cout << "  P" << i << ": " << p.ideal.members.to_string()
              << "  prime=" << (p.prime ? "yes" : "no") << "  witnesses={";
    for (size_t w = 0; w < p.witnesses.size(); ++w) {
      if (w) std::cout << ',';
      std::cout << p.witnesses[w];
    }
    std::cout << "}  witness colon="
              << (p.colon_prime ? p.colon_prime->members.to_string() : "none") << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- radical

int run_radical(const std::string& ring_path, const std::string& mult_text,
                const std::string& ideal_text, const std::string& format) {
  RingInput in = load_ring(ring_path);
  std::vector<int> gens = sspec::parse_generator_list(mult_text);
  std::vector<int> ideal_gens = sspec::parse_generator_list(ideal_text);
  sspec::MultSet mults = sspec::mult_closure(in.ring, gens);
  sspec::Ideal ideal = sspec::ideal_generated(in.ring, ideal_gens);
  sspec::Ideal rad = sspec::s_radical(mults, ideal);
  if (format == "json") {
    json doc;
    doc["ring"] = in.desc;
    doc["ring_name"] = in.ring.name;
    doc["mults"] = {{"generators", gens}, {"members", sspec::members_json(mults.members)}};
    doc["ideal_generators"] = ideal_gens;
    doc["ideal"] = sspec::members_json(ideal.members);
    doc["s_radical"] = sspec::members_json(rad.members);
    doc["is_s_radical_ideal"] = rad == ideal;
    emit(doc);
    return 0;
  }
  std::cout << rad.members.to_string() << "\n";
  return 0;
}

// ---------------------------------------------------------------- ideals

int run_ideals(const std::string& ring_path, const std::optional<std::string>& mult_text,
               const std::string& format) {
  RingInput in = load_ring(ring_path);
  std::vector<sspec::Ideal> lattice = sspec::all_ideals(in.ring);
  std::optional<sspec::MultSet> mults;
  std::vector<int> gens;
  if (mult_text) {
    gens = sspec::parse_generator_list(*mult_text);
    mults = sspec::mult_closure(in.ring, gens);
  }
  if (format == "json") {
    json doc;
    doc["ring"] = in.desc;
    doc["ring_name"] = in.ring.name;
    json ids = json::array();
    for (const auto& ideal : lattice) {
      json item;
      item["members"] = sspec::members_json(ideal.members);
      if (mults) {
        sspec::Ideal rad = sspec::s_radical(*mults, ideal);
        item["s_radical"] = sspec::members_json(rad.members);
        item["is_s_radical_ideal"] = rad == ideal;
      }
      ids.push_back(std::move(item));
    }
    if (mults) {
      doc["mults"] = {{"generators", gens},
                      {"members", sspec::members_json(mults->members)}};
    }
    doc["ideals"] = std::move(ids);
    emit(doc);
    return 0;
  }
  print_ring_header(in, mults ? &*mults : nullptr);
  std::cout << "ideals (" << lattice.size() << "):\n";
  for (size_t i = 0; i < lattice.size(); ++i) {
    std::cout << "  I" << i << ": " << lattice[i].members.to_string();
    if (mults) {
      sspec::Ideal rad = sspec::s_radical(*mults, lattice[i]);
      std::cout << "  s_radical=" << rad.members.to_string() << "  s_radical_ideal="
                << (rad == lattice[i] ? "yes" : "no");
    }
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- topology

int run_topology(const std::string& ring_path, const std::string& mult_text,
                 const std::string& kind, const std::string& dot_path,
                 const std::string& format) {
  RingInput in = load_ring(ring_path);
  std::vector<int> gens = sspec::parse_generator_list(mult_text);
  sspec::MultSet mults = sspec::mult_closure(in.ring, gens);
  sspec::SpectrumSpace space = sspec::spec_s(in.ring, mults);
  sspec::FiniteTopology top = kind == "zariski" ? sspec::s_zariski_topology(space)
                                                : sspec::s_flat_topology(space);
  std::string dot;
  if (!dot_path.empty()) {
    dot = sspec::specialization_dot(space, top);
    std::ofstream out(dot_path);
    if (!out) throw sspec::input_error("cannot write DOT file: " + dot_path);
    out << dot;
  }
  if (format == "json") {
    json doc;
    doc["ring"] = in.desc;
    doc["ring_name"] = in.ring.name;
    doc["mults"] = {{"generators", gens}, {"members", sspec::members_json(mults.members)}};
    doc["kind"] = kind;
    json pts = json::array();
    for (const auto& p : space.points) pts.push_back(sspec::members_json(p.ideal.members));
    doc["points"] = std::move(pts);
    json opens = json::array();
    for (const auto& u : top.opens) opens.push_back(sspec::point_set_json(u));
    doc["opens"] = std::move(opens);
    emit(doc);
    return 0;
  }
  print_ring_header(in, &mults);
  std::cout << "kind: " << kind << "\n";
  std::cout << "points (" << space.points.size() << "):\n";
  for (size_t i = 0; i < space.points.size(); ++i) {
    std::cout << "  P" << i << ": " << space.points[i].ideal.members.to_string() << "\n";
  }
  std::cout << "opens (" << top.opens.size() << "):\n";
  for (const auto& u : top.opens) std::cout << "  " << u.to_string() << "\n";
  if (!dot_path.empty()) std::cout << "dot written to " << dot_path << "\n";
  return 0;
}

// ---------------------------------------------------------------- components

int run_components(const std::string& ring_path, const std::string& mult_text,
                   const std::string& kind, const std::string& format) {
  RingInput in = load_ring(ring_path);
  std::vector<int> gens = sspec::parse_generator_list(mult_text);
  sspec::MultSet mults = sspec::mult_closure(in.ring, gens);
  sspec::SpectrumSpace space = sspec::spec_s(in.ring, mults);
  sspec::FiniteTopology flat = sspec::s_flat_topology(space);
  sspec::FiniteTopology top =
      kind == "zariski" ? sspec::s_zariski_topology(space) : flat;
  auto connected = sspec::connected_components(top);
  auto irreducible = sspec::irreducible_components(flat);

  struct IrrInfo {
    sspec::Bitset component, generics;
    std::optional<int> prime_point;
  };
  std::vector<IrrInfo> irr;
  for (const auto& c : irreducible) {
    auto g = sspec::generic_points(space, flat, c);
    irr.push_back({c, g.points, g.prime_point});
  }
  struct Cert {
    sspec::Bitset component;
    std::optional<std::pair<int, int>> fs;
  };
  std::vector<Cert> certs;
  if (connected.size() > 1) {
    for (const auto& c : connected) {
      certs.push_back({c, sspec::clopen_certificate(space, c, c.complement())});
    }
  }

  if (format == "json") {
    json doc;
    doc["ring"] = in.desc;
    doc["ring_name"] = in.ring.name;
    doc["mults"] = {{"generators", gens}, {"members", sspec::members_json(mults.members)}};
    doc["kind"] = kind;
    json pts = json::array();
    for (const auto& p : space.points) pts.push_back(sspec::members_json(p.ideal.members));
    doc["points"] = std::move(pts);
    json conn = json::array();
    for (const auto& c : connected) conn.push_back(sspec::point_set_json(c));
    doc["connected_components"] = std::move(conn);
    json irrj = json::array();
    for (const auto& i : irr) {
      json item;
      item["points"] = sspec::point_set_json(i.component);
      item["generic_points"] = sspec::point_set_json(i.generics);
      item["prime_generic"] =
          i.prime_point ? sspec::members_json(space.points[*i.prime_point].ideal.members)
                        : json();
      irrj.push_back(std::move(item));
    }
    doc["irreducible_components"] = std::move(irrj);
    json certj = json::array();
    for (const auto& c : certs) {
      json item;
      item["component"] = sspec::point_set_json(c.component);
      item["f1"] = c.fs ? json(c.fs->first) : json();
      item["f2"] = c.fs ? json(c.fs->second) : json();
      certj.push_back(std::move(item));
    }
    doc["clopen_certificates"] = std::move(certj);
    emit(doc);
    return 0;
  }

  print_ring_header(in, &mults);
  std::cout << "kind: " << kind << "\n";
  std::cout << "connected components (" << connected.size() << "):\n";
  for (size_t i = 0; i < connected.size(); ++i) {
    std::cout << "  C" << i << ": points " << connected[i].to_string() << "\n";
  }
  std::cout << "irreducible components of the flat topology (" << irr.size() << "):\n";
  for (size_t i = 0; i < irr.size(); ++i) {
    std::cout << "  K" << i << ": points " << irr[i].component.to_string()
              << "  generic points " << irr[i].generics.to_string() << "  prime generic ";
    if (irr[i].prime_point) {
      std::cout << space.points[*irr[i].prime_point].ideal.members.to_string();
    } else {
      std::cout << "none";
    }
    std::cout << "\n";
  }
  if (certs.empty()) {
    std::cout << "clopen certificates: none (space is connected)\n";
  } else {
    std::cout << "clopen certificates:\n";
    for (const auto& c : certs) {
      std::cout << "  " << c.component.to_string() << " vs rest: ";
      if (c.fs) {
        std::cout << "f1=" << c.fs->first << " f2=" << c.fs->second << "\n";
      } else {
        std::cout << "NOT FOUND (theorem counterexample)\n";
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- verify

std::vector<std::string> parse_only_tags(const std::string& only) {
  std::vector<std::string> out;
  if (only.empty()) return out;
  std::stringstream ss(only);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    bool known = tok == "prop-3.3";
    for (const auto& t : sspec::verify_all_tags()) known = known || t == tok;
    if (!known) throw sspec::input_error("unknown theorem tag \"" + tok + "\"");
    out.push_back(tok);
  }
  return out;
}

bool tag_selected(const std::vector<std::string>& only, const std::string& tag) {
  if (only.empty()) return true;
  for (const auto& t : only) {
    if (t == tag) return true;
  }
  return false;
}

void print_checks_text(const json& checks) {
  for (const auto& c : checks) {
    std::cout << "  " << c["id"].get<std::string>();
    for (size_t pad = c["id"].get<std::string>().size(); pad < 16; ++pad) std::cout << ' ';
    std::cout << c["status"].get<std::string>() << "  "
              << c["elapsed_us"].get<long long>() << "us";
    if (!c["witness"].is_null() && c["status"] == "fail") {
      std::cout << "  witness=" << c["witness"].dump();
    }
    std::cout << "\n";
  }
}

json filter_report(const json& document, const std::vector<std::string>& only) {
  if (only.empty()) return document;
  json out = document;
  auto filter_checks = [&](json& section) {
    for (auto& item : section) {
      json kept = json::array();
      for (auto& c : item["checks"]) {
        if (tag_selected(only, c["id"].get<std::string>())) kept.push_back(c);
      }
      item["checks"] = std::move(kept);
    }
  };
  filter_checks(out["entries"]);
  filter_checks(out["morphisms"]);
  int pass = 0, fail = 0, skipped = 0;
  for (const char* sec : {"entries", "morphisms"}) {
    for (const auto& item : out[sec]) {
      for (const auto& c : item["checks"]) {
        const std::string st = c["status"].get<std::string>();
        if (st == "pass") ++pass;
        if (st == "fail") ++fail;
        if (st == "skipped") ++skipped;
      }
    }
  }
  out["summary"] = {{"pass", pass},
                    {"fail", fail},
                    {"skipped", skipped},
                    {"total", pass + fail + skipped}};
  return out;
}

int run_verify(const std::string& ring_path, const std::string& mult_text,
               const std::string& corpus_arg, const std::string& only_text,
               const std::string& format) {
  std::vector<std::string> only = parse_only_tags(only_text);
  sspec::CorpusSpec corpus;
  if (!corpus_arg.empty()) {
    if (corpus_arg == "builtin") {
      corpus = sspec::builtin_corpus();
    } else {
      corpus = sspec::corpus_from_json(load_json_file(corpus_arg), corpus_arg);
    }
  } else if (!ring_path.empty()) {
    sspec::CorpusEntry entry;
    entry.ring_desc = load_json_file(ring_path);
    entry.ring = std::make_shared<sspec::FiniteRing>(sspec::ring_from_json(entry.ring_desc));
    entry.mult_gens.push_back(sspec::parse_generator_list(mult_text));
    sspec::mult_closure(*entry.ring, entry.mult_gens.back());
    corpus.label = ring_path;
    corpus.entries.push_back(std::move(entry));
  } else {
    throw sspec::input_error("verify requires --ring or --corpus");
  }

  sspec::CorpusReport report = sspec::verify_corpus(corpus);
  json document = filter_report(report.document, only);
  int fails = document["summary"]["fail"].get<int>();
  if (format == "json") {
    emit(document);
    return fails > 0 ? 1 : 0;
  }
  for (const auto& item : document["entries"]) {
    std::cout << "== ring " << item["ring_name"].get<std::string>() << "  S="
              << item["mults"]["members"].dump() << "\n";
    print_checks_text(item["checks"]);
  }
  for (const auto& item : document["morphisms"]) {
    if (item["checks"].empty()) continue;
    std::cout << "== morphisms " << item["source"].dump() << " -> "
              << item["target"].dump() << "  S=" << item["mults"]["members"].dump()
              << "\n";
    print_checks_text(item["checks"]);
  }
  const auto& s = document["summary"];
  std::cout << "summary: pass=" << s["pass"].get<int>() << " fail=" << s["fail"].get<int>()
            << " skipped=" << s["skipped"].get<int>() << "\n";
  return fails > 0 ? 1 : 0;
}

// ---------------------------------------------------------------- goingdown

int run_goingdown(const std::string& source_path, const std::string& mult_text,
                  const std::string& target_path, const std::string& order_text,
                  const std::string& format) {
  sspec::OrderMode mode = order_text == "s-specialization"
                              ? sspec::OrderMode::s_specialization
                              : sspec::OrderMode::containment;
  sspec::CorpusSpec corpus;
  corpus.label = source_path;
  sspec::CorpusEntry src;
  src.ring_desc = load_json_file(source_path);
  src.ring = std::make_shared<sspec::FiniteRing>(sspec::ring_from_json(src.ring_desc));
  src.mult_gens.push_back(sspec::parse_generator_list(mult_text));
  sspec::mult_closure(*src.ring, src.mult_gens.back());
  corpus.entries.push_back(src);

  sspec::CorpusEntry dst;
  dst.ring_desc = load_json_file(target_path);
  dst.ring = std::make_shared<sspec::FiniteRing>(sspec::ring_from_json(dst.ring_desc));
  std::vector<sspec::CorpusEntry> targets{dst};

  sspec::GoingDownReport report = sspec::search_counterexamples(corpus, targets, mode);
  if (format == "json") {
    json doc = sspec::going_down_report_json(report);
    doc["source"] = src.ring_desc;
    doc["target"] = dst.ring_desc;
    emit(doc);
    return report.counterexample_found() ? 1 : 0;
  }
  std::cout << "source: " << src.ring->name << " (" << src.ring->size << " elements)\n";
  std::cout << "target: " << dst.ring->name << " (" << dst.ring->size << " elements)\n";
  std::cout << "order: " << to_string(mode) << "\n";
  std::cout << "morphisms: " << report.morphisms_seen << " (" << report.morphisms_skipped
            << " skipped, zero in image of S)\n";
  std::cout << "instances: " << report.instances << "\n";
  std::cout << "counterexamples: " << report.failures.size() << "\n";
  for (const auto& f : report.failures) {
    std::cout << "  phi=[";
    for (size_t i = 0; i < f.phi.map.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << f.phi.map[i];
    }
    std::cout << "] p_low=" << f.p_low.members.to_string()
              << " p_high=" << f.p_high.members.to_string()
              << " q_high=" << f.q_high.members.to_string() << "\n";
  }
  return report.counterexample_found() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-prime spectrum, S-Zariski / S-flat topology, and theorem "
               "verification for finite commutative rings"};
  app.require_subcommand(1);

  std::string ring_path, mult_text, ideal_text, format = "text";
  std::string kind = "flat", dot_path, corpus_arg, only_text;
  std::string source_path, target_path, order_text = "containment";
  bool ideals_has_mults = false;

  auto* sc_spec = app.add_subcommand("spec", "Compute the S-prime spectrum");
  sc_spec->add_option("--ring", ring_path, "ring description file")->required();
  sc_spec->add_option("--mults", mult_text, "generators of S, comma separated");
  sc_spec->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sc_radical = app.add_subcommand("radical", "Compute an S-radical");
  sc_radical->add_option("--ring", ring_path)->required();
  sc_radical->add_option("--mults", mult_text);
  sc_radical->add_option("--ideal", ideal_text, "ideal generators, comma separated")
      ->required();
  sc_radical->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sc_ideals = app.add_subcommand("ideals", "List the ideal lattice");
  sc_ideals->add_option("--ring", ring_path)->required();
  auto* ideals_mults_opt = sc_ideals->add_option("--mults", mult_text);
  sc_ideals->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sc_topology = app.add_subcommand("topology", "Materialize a topology");
  sc_topology->add_option("--ring", ring_path)->required();
  sc_topology->add_option("--mults", mult_text);
  sc_topology->add_option("--kind", kind)->check(CLI::IsMember({"flat", "zariski"}));
  sc_topology->add_option("--dot", dot_path, "write the specialization digraph here");
  sc_topology->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sc_components = app.add_subcommand("components", "Connectivity and components");
  sc_components->add_option("--ring", ring_path)->required();
  sc_components->add_option("--mults", mult_text);
  sc_components->add_option("--kind", kind)->check(CLI::IsMember({"flat", "zariski"}));
  sc_components->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sc_verify = app.add_subcommand("verify", "Run the theorem checks");
  sc_verify->add_option("--ring", ring_path);
  sc_verify->add_option("--mults", mult_text);
  sc_verify->add_option("--corpus", corpus_arg, "builtin or a corpus file");
  sc_verify->add_option("--only", only_text, "comma separated theorem tags");
  sc_verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sc_goingdown = app.add_subcommand("goingdown", "Going-down counterexample search");
  sc_goingdown->add_option("--source", source_path)->required();
  sc_goingdown->add_option("--mults", mult_text);
  sc_goingdown->add_option("--target", target_path)->required();
  sc_goingdown->add_option("--order", order_text)
      ->check(CLI::IsMember({"containment", "s-specialization"}));
  sc_goingdown->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  ideals_has_mults = ideals_mults_opt->count() > 0;

  try {
    if (sc_spec->parsed()) return run_spec(ring_path, mult_text, format);
    if (sc_radical->parsed()) return run_radical(ring_path, mult_text, ideal_text, format);
    if (sc_ideals->parsed()) {
      return run_ideals(ring_path,
                        ideals_has_mults ? std::optional<std::string>(mult_text)
                                         : std::nullopt,
                        format);
    }
    if (sc_topology->parsed()) {
      return run_topology(ring_path, mult_text, kind, dot_path, format);
    }
    if (sc_components->parsed()) return run_components(ring_path, mult_text, kind, format);
    if (sc_verify->parsed()) {
      return run_verify(ring_path, mult_text, corpus_arg, only_text, format);
    }
    if (sc_goingdown->parsed()) {
      return run_goingdown(source_path, mult_text, target_path, order_text, format);
    }
  } catch (const sspec::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
