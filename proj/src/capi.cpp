#include "spinstat/spinstat.h"

#include "spinstat/report.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

struct spinstat_report {
  std::string json;
  std::string text;
  std::string status;
  int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

spinstat_status fail(spinstat_status code, std::string msg) {
  g_last_error = std::move(msg);
  return code;
}

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const char* path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open ") + what + ": " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class F>
spinstat_status guarded(spinstat_report** out, F&& body) {
  if (out == nullptr) return fail(SPINSTAT_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  try {
    auto r = std::make_unique<spinstat_report>();
    body(*r);
    *out = r.release();
    g_last_error.clear();
    return SPINSTAT_OK;
  } catch (const IoError& e) {
    return fail(SPINSTAT_ERR_IO, e.what());
  } catch (const spinstat::ParseError& e) {
    return fail(SPINSTAT_ERR_PARSE, e.what());
  } catch (const spinstat::FormatError& e) {
    return fail(SPINSTAT_ERR_FORMAT, e.what());
  } catch (const spinstat::PreconditionError& e) {
    return fail(SPINSTAT_ERR_PRECONDITION, e.what());
  } catch (const spinstat::DimensionError& e) {
    return fail(SPINSTAT_ERR_PRECONDITION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SPINSTAT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SPINSTAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPINSTAT_ERR_INTERNAL, "unknown error");
  }
}

void fill(spinstat_report& out, const spinstat::VerdictReport& r) {
  out.json = spinstat::to_json(r);
  out.text = spinstat::to_text(r);
  out.status = spinstat::to_string(r.status);
  out.exit_code = spinstat::exit_code(r.status);
}

}  // namespace

extern "C" {

const char* spinstat_version(void) { return "1.0.0"; }

const char* spinstat_last_error(void) { return g_last_error.c_str(); }

spinstat_status spinstat_analyze_file(const char* spec_path, spinstat_report** out) {
  if (spec_path == nullptr) return fail(SPINSTAT_ERR_INVALID_ARGUMENT, "null spec path");
  return guarded(out, [&](spinstat_report& r) {
    const std::string text = slurp(spec_path, "spec file");
    const std::string base = std::filesystem::path(spec_path).parent_path().string();
    fill(r, spinstat::analyze(spinstat::parse_theory(text, base)));
  });
}

spinstat_status spinstat_analyze_text(const char* spec_text, const char* base_dir, spinstat_report** out) {
  if (spec_text == nullptr) return fail(SPINSTAT_ERR_INVALID_ARGUMENT, "null spec text");
  return guarded(out, [&](spinstat_report& r) {
    fill(r, spinstat::analyze(spinstat::parse_theory(spec_text, base_dir ? base_dir : "")));
  });
}

spinstat_status spinstat_dkp_check(const char* metric, int printed_relations, spinstat_report** out) {
  return guarded(out, [&](spinstat_report& r) {
    const spinstat::DkpCheck d = spinstat::run_dkp_check(metric ? metric : "+---", printed_relations != 0);
    r.json = spinstat::to_json(d);
    r.text = spinstat::to_text(d);
    r.exit_code = d.exit_code();
    r.status = r.exit_code == 0 ? "PASS" : "FAIL";
  });
}

spinstat_status spinstat_fock(const char* table_path, const char* word, const char* gram_states_path,
                              spinstat_report** out) {
  if (table_path == nullptr || word == nullptr) return fail(SPINSTAT_ERR_INVALID_ARGUMENT, "null table or word");
  return guarded(out, [&](spinstat_report& r) {
    const auto table = spinstat::RelationTable::parse(slurp(table_path, "relation table"));
    std::vector<spinstat::OperatorWord> states;
    if (gram_states_path) states = spinstat::parse_state_list(slurp(gram_states_path, "state list"));
    const spinstat::FockQuery q = spinstat::run_fock(table, spinstat::OperatorWord::parse(word), states);
    r.json = spinstat::to_json(q);
    r.text = spinstat::to_text(q);
    r.exit_code = 0;
    r.status = "OK";
  });
}

const char* spinstat_report_json(const spinstat_report* report) { return report ? report->json.c_str() : ""; }
const char* spinstat_report_text(const spinstat_report* report) { return report ? report->text.c_str() : ""; }
int spinstat_report_exit_code(const spinstat_report* report) { return report ? report->exit_code : 1; }
const char* spinstat_report_status(const spinstat_report* report) { return report ? report->status.c_str() : ""; }
void spinstat_report_free(spinstat_report* report) { delete report; }

}  // extern "C"
