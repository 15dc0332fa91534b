#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>

#include "run_cli.hpp"
#include "sspec/sspec.hpp"

using testutil::data_file;
using testutil::run_cli;

TEST_CASE("spec subcommand prints the worked spectrum", "[cli]") {
  auto res = run_cli("spec --ring " + data_file("rings/zn12.json") + " --mults 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output ==
        "ring: Z/12 (12 elements)\n"
        "S: {1,3,9}\n"
        "points (2):\n"
        "  P0: {0,6}  prime=no  witnesses={3,9}  witness colon={0,2,4,6,8,10}\n"
        "  P1: {0,2,4,6,8,10}  prime=yes  witnesses={1,3,9}  witness "
        "colon={0,2,4,6,8,10}\n");
}

TEST_CASE("radical subcommand prints the member set", "[cli]") {
  auto res = run_cli("radical --ring " + data_file("rings/zn12.json") +
                     " --mults 3 --ideal 0");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "{0,2,4,6,8,10}\n");
}

TEST_CASE("spec --format json round-trips to the same space", "[cli]") {
  auto res = run_cli("spec --ring " + data_file("rings/zn12.json") +
                     " --mults 3 --format json");
  REQUIRE(res.exit_code == 0);
  sspec::json doc = sspec::json::parse(res.output);
  sspec::FiniteRing ring = sspec::ring_from_json(doc["ring"]);
  std::vector<int> gens = doc["mults"]["generators"].get<std::vector<int>>();
  sspec::SpectrumSpace space = sspec::spec_s(ring, sspec::mult_closure(ring, gens));
  REQUIRE(doc["points"].size() == space.points.size());
  for (size_t i = 0; i < space.points.size(); ++i) {
    CHECK(doc["points"][i]["members"] ==
          sspec::members_json(space.points[i].ideal.members));
    CHECK(doc["points"][i]["witnesses"].get<std::vector<int>>() ==
          space.points[i].witnesses);
    CHECK(doc["points"][i]["is_prime"].get<bool>() == space.points[i].prime);
  }
}

TEST_CASE("ideals subcommand annotates radicals when S is given", "[cli]") {
  auto res = run_cli("ideals --ring " + data_file("rings/zn6.json"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("ideals (4):") != std::string::npos);

  auto annotated = run_cli("ideals --ring " + data_file("rings/zn6.json") + " --mults 3");
  CHECK(annotated.exit_code == 0);
  CHECK(annotated.output.find("s_radical_ideal=") != std::string::npos);
}

TEST_CASE("topology subcommand emits opens and DOT", "[cli]") {
  namespace fs = std::filesystem;
  fs::path dot = fs::temp_directory_path() / "sspec_cli_test.dot";
  auto res = run_cli("topology --ring " + data_file("rings/zn12.json") +
                     " --mults 3 --kind flat --dot " + dot.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("opens (2):") != std::string::npos);
  std::ifstream in(dot);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text ==
        "digraph specialization {\n"
        "  p0 [label=\"{0,6}\"];\n"
        "  p1 [label=\"{0,2,4,6,8,10}\"];\n"
        "  p0 -> p1;\n"
        "  p1 -> p0;\n"
        "}\n");
  fs::remove(dot);
}

TEST_CASE("components subcommand reports certificates", "[cli]") {
  auto res = run_cli("components --ring " + data_file("rings/zn6.json") + " --mults \"\"");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("connected components (2):") != std::string::npos);
  CHECK(res.output.find("f1=3 f2=4") != std::string::npos);

  auto connected = run_cli("components --ring " + data_file("rings/zn12.json") +
                           " --mults 3");
  CHECK(connected.exit_code == 0);
  CHECK(connected.output.find("clopen certificates: none") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes and filtering", "[cli]") {
  auto one = run_cli("verify --ring " + data_file("rings/zn12.json") + " --mults 3");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("summary: pass=") != std::string::npos);

  auto only = run_cli("verify --ring " + data_file("rings/zn12.json") +
                      " --mults 3 --only prop-2.3,thm-5.1");
  CHECK(only.exit_code == 0);
  CHECK(only.output.find("prop-2.3") != std::string::npos);
  CHECK(only.output.find("lemma-4.1") == std::string::npos);

  auto bogus = run_cli("verify --ring " + data_file("rings/zn12.json") +
                       " --mults 3 --only bogus-1.0");
  CHECK(bogus.exit_code == 2);

  auto file_corpus = run_cli("verify --corpus " + data_file("corpus_small.json"));
  CHECK(file_corpus.exit_code == 0);

  auto bad_corpus = run_cli("verify --corpus " + data_file("corpus_bad.json"));
  CHECK(bad_corpus.exit_code == 2);
}

TEST_CASE("verify --corpus builtin --format json is deterministic", "[cli][slow]") {
  auto a = run_cli("verify --corpus builtin --format json");
  auto b = run_cli("verify --corpus builtin --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  std::regex elapsed("\"elapsed_us\": [0-9]+");
  CHECK(std::regex_replace(a.output, elapsed, "\"elapsed_us\": X") ==
        std::regex_replace(b.output, elapsed, "\"elapsed_us\": X"));
}

TEST_CASE("goingdown subcommand", "[cli]") {
  auto res = run_cli("goingdown --source " + data_file("rings/zn12.json") +
                     " --mults 3 --target " + data_file("rings/zn6.json"));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("counterexamples: 0") != std::string::npos);

  auto json_res = run_cli("goingdown --source " + data_file("rings/zn12.json") +
                          " --mults 3 --target " + data_file("rings/zn6.json") +
                          " --format json --order s-specialization");
  CHECK(json_res.exit_code == 0);
  sspec::json doc = sspec::json::parse(json_res.output);
  CHECK(doc["counterexample_found"] == false);
  CHECK(doc["order"] == "s-specialization");

  // a pair with a genuine counterexample: the single point of the target
  // spectrum lies over (2), so nothing lies over (0)
  auto counter = run_cli("goingdown --source " + data_file("rings/zn6.json") +
                         " --mults 3 --target " + data_file("rings/f2x_sq.json"));
  CHECK(counter.exit_code == 1);
  CHECK(counter.output.find("counterexamples: 1") != std::string::npos);
  CHECK(counter.output.find("p_low={0} p_high={0,2,4}") != std::string::npos);
}

TEST_CASE("generator list and ring description parsing", "[cli]") {
  CHECK(sspec::parse_generator_list("4,6") == std::vector<int>{4, 6});
  CHECK(sspec::parse_generator_list("").empty());
  CHECK(sspec::parse_generator_list("0") == std::vector<int>{0});
  CHECK_THROWS_AS(sspec::parse_generator_list("4,,6"), sspec::input_error);
  CHECK_THROWS_AS(sspec::parse_generator_list("x"), sspec::input_error);
  CHECK_THROWS_AS(sspec::parse_generator_list("4x"), sspec::input_error);

  CHECK_THROWS_AS(sspec::ring_from_json(sspec::json::parse(R"({"kind":"weird"})")),
                  sspec::input_error);
  CHECK_THROWS_AS(sspec::ring_from_json(sspec::json::parse(R"({"kind":"zn"})")),
                  sspec::input_error);
  CHECK_THROWS_AS(sspec::ring_from_json(sspec::json::parse(R"({"kind":"zn","n":"3"})")),
                  sspec::input_error);
  CHECK_THROWS_AS(
      sspec::ring_from_json(sspec::json::parse(R"({"kind":"product","factors":[]})")),
      sspec::input_error);
  CHECK(sspec::ring_from_json(sspec::json::parse(R"({"kind":"zn","n":6})")).size == 6);
}

TEST_CASE("input errors exit with code 2", "[cli]") {
  CHECK(run_cli("spec --ring " + data_file("rings/bad_keys.json")).exit_code == 2);
  CHECK(run_cli("spec --ring " + data_file("rings/bad_table.json")).exit_code == 2);
  CHECK(run_cli("spec --ring /nonexistent.json").exit_code == 2);
  CHECK(run_cli("spec --ring " + data_file("rings/zn12.json") + " --mults 6").exit_code ==
        2);
  CHECK(run_cli("spec --no-such-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  // table ring from file works end to end
  CHECK(run_cli("spec --ring " + data_file("rings/table_z4.json")).exit_code == 0);
}
