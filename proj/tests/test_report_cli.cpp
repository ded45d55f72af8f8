#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riccisol/cli.hpp"
#include "riccisol/engine.hpp"
#include "riccisol/specfile.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace riccisol;
using R = Rational;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

} // namespace

TEST_CASE("verify_entry reproduces the steady soliton with its fixtures") {
  const Report rep = verify_entry("thm4.2-[1,(12)]", {{"k1", R(1, 2)}});
  CHECK(rep.passed());
  const StageResult* soliton = rep.stage("soliton");
  REQUIRE(soliton != nullptr);
  CHECK(soliton->status == Status::Pass);
  bool found = false;
  for (const auto& n : soliton->notes)
    if (n.find("(0, 1/3, 1/3, 0, 0)") != std::string::npos) found = true;
  CHECK(found);
  const StageResult* conn = rep.stage("connection");
  REQUIRE(conn != nullptr);
  CHECK(conn->status == Status::Warn); // recorded printed-value discrepancy
}

TEST_CASE("verify_entry flags the nonexistence family as inconsistent") {
  const Report rep = verify_entry("thm3.1-ii", {{"alpha", R(2)}, {"eps", R(-1)}});
  CHECK(rep.passed());
  CHECK(rep.stage("ricci")->status == Status::Pass);
  CHECK(rep.stage("weyl")->status == Status::Pass);
  const StageResult* soliton = rep.stage("soliton");
  bool inconsistent_noted = false;
  for (const auto& n : soliton->notes)
    if (n.find("no soliton") != std::string::npos) inconsistent_noted = true;
  CHECK(inconsistent_noted);
}

TEST_CASE("verify_entry reports the recorded sign discrepancy of the isotropy case") {
  const Report rep = verify_entry("case-1.3.1:5", {{"a", R(1)}, {"lambda", R(2)}, {"b", R(1)}, {"c", R(1)}});
  CHECK(rep.passed());
  CHECK(rep.overall() == Status::Warn);
  const StageResult* soliton = rep.stage("soliton");
  bool warned = false;
  for (const auto& n : soliton->notes)
    if (n.find("prints the opposite sign") != std::string::npos) warned = true;
  CHECK(warned);
  CHECK(rep.stage("curvature")->status == Status::Skip);
  const StageResult* inv = rep.stage("invariance");
  bool in_subspace = false;
  for (const auto& n : inv->notes)
    if (n.find("documented invariance subspace") != std::string::npos) in_subspace = true;
  CHECK(in_subspace);
}

TEST_CASE("verification reports are byte-identical across runs") {
  const Report a = verify_entry("thm4.1-(22)", {{"k1", R(1)}});
  const Report b = verify_entry("thm4.1-(22)", {{"k1", R(1)}});
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_json(a).find("elapsed") == std::string::npos);
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
  const auto jobs = jobs_for("thm4.2-[1,(12)]", 6);
  const auto serial = run_verifications(jobs, false);
  const auto parallel = run_verifications(jobs, true);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i)
    CHECK(report_to_json(serial[i]) == report_to_json(parallel[i]));
}

TEST_CASE("spec files round-trip and run through the pipeline") {
  const HomogeneousPair pair = instantiate("thm3.1-ii", {{"alpha", R(1)}, {"eps", R(1)}});
  const std::string json = pair_to_json(pair);
  const PairSpec spec = parse_pair_spec(json);
  const HomogeneousPair again = build_pair(spec);
  CHECK(again.metric == pair.metric);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(again.bracket[i][j] == pair.bracket[i][j]);
  CHECK_THROWS_AS(parse_pair_spec("{not json"), specfile_error);
  CHECK_THROWS_AS(parse_pair_spec("{\"dims\": {\"n\": 2}, \"metric\": [{\"i\":1,\"j\":1,\"value\":\"x\"}]}"),
                  specfile_error);
}

TEST_CASE("soliton systems serialize with named unknowns") {
  const SolitonSystem sys = load_fixture_system("case-1.3.1:5",
                                                {{"a", R(1)}, {"lambda", R(2)}, {"b", R(1)}, {"c", R(1)}});
  const std::string json = system_to_json(sys);
  const SolitonSystem back = parse_system_json(json);
  CHECK(back.rows() == sys.rows());
  CHECK(back.coeffs == sys.coeffs);
  CHECK(back.constants == sys.constants);
  REQUIRE(back.quadratic_checks.size() == 1);
  CHECK(back.quadratic_checks[0].a == sys.quadratic_checks[0].a);
  CHECK(back.quadratic_checks[0].coeff == sys.quadratic_checks[0].coeff);
  CHECK(json.find("sigma") != std::string::npos);
  CHECK(json.find("x2") != std::string::npos);
}

TEST_CASE("cli exit codes are distinct per failure class") {
  std::string out, err;
  CHECK(cli({"list"}, &out) == 0);
  CHECK(out.find("thm4.2-[1,(12)]") != std::string::npos);

  CHECK(cli({"verify", "no-such-entry"}, &out, &err) == 2);
  CHECK(err.find("unknown id") != std::string::npos);

  CHECK(cli({"verify", "thm4.2-[1,(12)]", "--param", "k1", "0"}, &out, &err) == 4);
  CHECK(cli({"verify", "thm3.1-i", "--param", "alpha", "not-a-number"}, &out, &err) == 4);

  const std::string bad = "/tmp/riccisol-bad-spec.json";
  {
    std::ofstream f(bad);
    f << "{\"dims\": {\"n\": }";
  }
  CHECK(cli({"run", bad}, &out, &err) == 3);

  CHECK(cli({"bogus-subcommand"}, &out, &err) == 5);

  CHECK(cli({"verify", "thm4.2-[1,(12)]", "--param", "k1", "1"}, &out) == 0);
}

TEST_CASE("cli verify json output carries the expected fields") {
  std::string out;
  REQUIRE(cli({"verify", "thm4.2-[1,(12)]", "--param", "k1", "1", "--serial"}, &out) == 0);
  const auto j = nlohmann::json::parse(out);
  REQUIRE(j.is_array());
  CHECK(j[0]["entry"] == "thm4.2-[1,(12)]");
  CHECK(j[0]["overall"] == "WARN"); // the recorded print discrepancy
  bool has_soliton = false;
  for (const auto& st : j[0]["stages"])
    if (st["stage"] == "soliton") has_soliton = true;
  CHECK(has_soliton);
  CHECK(out.find("0.") == std::string::npos); // rationals only, no floats
}

TEST_CASE("cli run on a spec file") {
  const std::string path = "/tmp/riccisol-abelian.json";
  {
    std::ofstream f(path);
    f << R"({"id": "my-abelian", "dims": {"r": 0, "n": 4},
            "brackets": [],
            "metric": [{"i":1,"j":1,"value":"1"},{"i":2,"j":2,"value":"1"},
                        {"i":3,"j":3,"value":"1"},{"i":4,"j":4,"value":"-1"}]})";
  }
  std::string out;
  REQUIRE(cli({"run", path, "--stages", "ricci,segre"}, &out) == 0);
  const auto j = nlohmann::json::parse(out);
  bool ricci_zero = false, segre_noted = false;
  for (const auto& st : j[0]["stages"]) {
    for (const auto& n : st["notes"]) {
      const std::string note = n.get<std::string>();
      if (note.find("ricci [0 0 0 0;") != std::string::npos) ricci_zero = true;
      if (note.find("Segre type [(111,1)]") != std::string::npos) segre_noted = true;
    }
  }
  CHECK(ricci_zero);
  CHECK(segre_noted);
}

TEST_CASE("cli sweep runs a parameter grid") {
  std::string out;
  REQUIRE(cli({"sweep", "thm4.2-[1,(12)]", "--range", "k1=1,1/2,-2,3", "--table"}, &out) == 0);
  CHECK(out.find("k1 = 1/2") != std::string::npos);
  CHECK(out.find("k1 = -2") != std::string::npos);
}

TEST_CASE("cli show prints the entry in the spec format") {
  std::string out;
  REQUIRE(cli({"show", "thm3.1-ii"}, &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["metric_status"] == "searched");
  CHECK(j["fixtures"]["printed_ricci"] == true);
  CHECK(j["pair"]["dims"]["n"] == 4);
  REQUIRE(cli({"show", "table3:1.3^1:28"}, &out) == 0);
  const auto jm = nlohmann::json::parse(out);
  CHECK(jm["kind"] == "metadata");
}

TEST_CASE("verify all reports each criterion") {
  std::string out;
  const int code = cli({"verify", "all", "--table", "--serial"}, &out);
  CHECK(code == 0);
  for (int i = 1; i <= 13; ++i)
    CHECK(out.find("criterion " + std::to_string(i) + ":") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
}
