#include "doctest.h"

#include "spinstat/spinstat.h"

#include <sys/wait.h>

#include <cstdlib>
#include <map>
#include <memory>
#include <string>

namespace {

using ReportPtr = std::unique_ptr<spinstat_report, decltype(&spinstat_report_free)>;

ReportPtr wrap(spinstat_report* r) { return ReportPtr(r, &spinstat_report_free); }

int cli(const std::string& args) {
  const std::string line = std::string("'") + SPINSTAT_CLI_PATH + "' " + args + " > /dev/null 2>&1";
  const int rc = std::system(line.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const std::string specs = SPINSTAT_SPECS_DIR;

}  // namespace

TEST_CASE("analyze_text and accessors") {
  spinstat_report* raw = nullptr;
  REQUIRE(spinstat_analyze_text("theory m\nfield psi spin=1/2\n", nullptr, &raw) == SPINSTAT_OK);
  const auto r = wrap(raw);
  CHECK(std::string(spinstat_report_status(r.get())) == "CONSISTENT");
  CHECK(spinstat_report_exit_code(r.get()) == 0);
  CHECK(std::string(spinstat_report_json(r.get())).find("\"consistent_statistics\": \"fermi\"") != std::string::npos);
  CHECK(std::string(spinstat_report_text(r.get())).find("status: CONSISTENT") != std::string::npos);
  CHECK(std::string(spinstat_last_error()).empty());
}

TEST_CASE("error codes") {
  spinstat_report* raw = nullptr;
  CHECK(spinstat_analyze_text("theory m\nfield psi spin=1/3\n", nullptr, &raw) == SPINSTAT_ERR_PARSE);
  CHECK(raw == nullptr);
  CHECK(std::string(spinstat_last_error()).find("line 2") != std::string::npos);
  CHECK(spinstat_analyze_file("/nonexistent/x.th", &raw) == SPINSTAT_ERR_IO);
  CHECK(spinstat_analyze_file(nullptr, &raw) == SPINSTAT_ERR_INVALID_ARGUMENT);
  CHECK(spinstat_analyze_text("theory m\nfield psi spin=1/2\n", nullptr, nullptr) == SPINSTAT_ERR_INVALID_ARGUMENT);
  CHECK(spinstat_dkp_check("++", 0, &raw) == SPINSTAT_ERR_FORMAT);
  const std::string table = specs + "/bose_two_mode.rel";
  CHECK(spinstat_fock(table.c_str(), "a zz", nullptr, &raw) == SPINSTAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(spinstat_last_error()).find("zz") != std::string::npos);
  CHECK(spinstat_report_exit_code(nullptr) == 1);
  spinstat_report_free(nullptr);
}

TEST_CASE("dkp_check and fock through the C API") {
  spinstat_report* raw = nullptr;
  REQUIRE(spinstat_dkp_check(nullptr, 1, &raw) == SPINSTAT_OK);
  auto d = wrap(raw);
  CHECK(spinstat_report_exit_code(d.get()) == 0);
  CHECK(std::string(spinstat_report_json(d.get())).find("\"printed_relations\"") != std::string::npos);
  REQUIRE(spinstat_dkp_check("-+++", 0, &raw) == SPINSTAT_OK);
  d = wrap(raw);
  CHECK(spinstat_report_exit_code(d.get()) == 2);

  const std::string table = specs + "/fermi_negative.rel";
  REQUIRE(spinstat_fock(table.c_str(), "c ddag", nullptr, &raw) == SPINSTAT_OK);
  auto f = wrap(raw);
  CHECK(std::string(spinstat_report_text(f.get())).find("vacuum expectation: -1+0i") != std::string::npos);
  const std::string bose = specs + "/bose_two_mode.rel";
  const std::string states = specs + "/two_mode_states.txt";
  REQUIRE(spinstat_fock(bose.c_str(), "adag a", states.c_str(), &raw) == SPINSTAT_OK);
  f = wrap(raw);
  const std::string text = spinstat_report_text(f.get());
  CHECK(text.find("vacuum expectation: 0+0i") != std::string::npos);
  CHECK(text.find("signature: (2, 0, 0)") != std::string::npos);
}

TEST_CASE("cli exit codes over the bundled corpus") {
  const std::map<std::string, int> expected{
      {"single_scalar", 4},         {"doubled_scalar", 0},          {"charged_scalar", 0},
      {"majorana", 0},              {"dirac", 0},                   {"scalar_flavor_antisym", 3},
      {"vector_spin1", 0},          {"majorana_pinned_bose", 2},    {"para_variation", 5},
      {"explicit_scalar_doublet", 0}};
  for (const auto& [name, code] : expected) {
    CAPTURE(name);
    CHECK(cli("analyze '" + specs + "/" + name + ".th'") == code);
  }
  CHECK(cli("analyze '" + specs + "/missing.th'") == 1);
  CHECK(cli("analyze") == 1);
  CHECK(cli("frobnicate") == 1);
  CHECK(cli("--version") == 0);
  CHECK(cli("dkp-check") == 0);
  CHECK(cli("dkp-check --metric -+++") == 2);
  CHECK(cli("fock '" + specs + "/fermi_negative.rel' --word 'c ddag'") == 0);
}
