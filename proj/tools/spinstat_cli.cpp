#include "spinstat/spinstat.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

using ReportPtr = std::unique_ptr<spinstat_report, decltype(&spinstat_report_free)>;

int finish(spinstat_status st, spinstat_report* raw, const std::string& json_path) {
  ReportPtr report(raw, &spinstat_report_free);
  if (st != SPINSTAT_OK) {
    std::cerr << "spinstat: " << spinstat_last_error() << "\n";
    return 1;
  }
  std::cout << spinstat_report_text(report.get());
  if (!json_path.empty()) {
    if (json_path == "-") {
      std::cout << spinstat_report_json(report.get());
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out || !(out << spinstat_report_json(report.get()))) {
        std::cerr << "spinstat: cannot write " << json_path << "\n";
        return 1;
      }
    }
  }
  return spinstat_report_exit_code(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-statistics analysis of field theory specifications"};
  app.set_version_flag("--version", std::string("spinstat ") + spinstat_version());
  app.require_subcommand(1);

  std::string json_path;
  app.add_option("--json", json_path, "write the JSON report to this path (- for stdout)");

  std::string spec_path;
  auto* analyze = app.add_subcommand("analyze", "analyze a theory specification");
  analyze->add_option("spec", spec_path, "theory spec file")->required();

  bool printed_relations = false;
  std::string metric = "+---";
  auto* dkp = app.add_subcommand("dkp-check", "verify the built-in Duffin-Kemmer matrices");
  dkp->add_flag("--paper-relations", printed_relations, "tabulate every printed relation");
  dkp->add_option("--metric", metric, "signature of the metric")->capture_default_str();

  std::string table_path, word, gram_path;
  auto* fock = app.add_subcommand("fock", "normal order a word over a relation table");
  fock->add_option("table", table_path, "relation table file")->required();
  fock->add_option("--word", word, "operator word, symbols separated by spaces")->required();
  fock->add_option("--gram", gram_path, "file of creator words for the Gram matrix");

  for (auto* sub : {analyze, dkp, fock})
    sub->add_option("--json", json_path, "write the JSON report to this path (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  spinstat_report* raw = nullptr;
  spinstat_status st;
  if (*analyze) st = spinstat_analyze_file(spec_path.c_str(), &raw);
  else if (*dkp) st = spinstat_dkp_check(metric.c_str(), printed_relations ? 1 : 0, &raw);
  else st = spinstat_fock(table_path.c_str(), word.c_str(), gram_path.empty() ? nullptr : gram_path.c_str(), &raw);
  return finish(st, raw, json_path);
}
