#pragma once

// Aggregated verdict reports for the command line front end, rendered as
// JSON or plain text.

#include "spinstat/quantizer.hpp"
#include "spinstat/reduction.hpp"

#include <string>
#include <vector>

namespace spinstat {

enum class OverallStatus { Consistent, Contradiction, RejectedNegativeNorm, NoKinematicTerm, Unsupported };

std::string to_string(OverallStatus s);
/// 0 consistent, 2 contradiction, 3 negative norm, 4 no kinematic term,
/// 5 unsupported.
int exit_code(OverallStatus s);

struct KirchoffEntry {
  std::string field;
  KirchoffResult result;
};

struct VerdictReport {
  TheorySpec spec;
  TheoryVerdict verdict;
  std::vector<KirchoffEntry> kirchoff;
  OverallStatus status = OverallStatus::Consistent;
};

/// Precedence: negative norm, contradiction, unsupported, no kinematic
/// term, consistent.
VerdictReport analyze(const TheorySpec& spec);

std::string to_json(const VerdictReport& r);
std::string to_text(const VerdictReport& r);

struct MinimalPolynomialCase {
  std::array<Rational, 4> k;
  Rational k_dot_k;
  bool holds = false;
};

struct DkpCheck {
  BetaSet betas;
  DkpReport algebra;
  std::vector<MinimalPolynomialCase> minimal;
  bool include_printed = false;
  int exit_code() const { return algebra.standard_ok() ? 0 : 2; }
};

/// The built-in matrices, the algebra report, and the minimal polynomial
/// probe on k = (2,1,1,1) plus five vectors from a fixed seed.
DkpCheck run_dkp_check(std::string_view metric, bool include_printed);

std::string to_json(const DkpCheck& d);
std::string to_text(const DkpCheck& d);

struct FockQuery {
  RelationTable table;
  OperatorWord word;
  OperatorSum normal_ordered;
  Scalar vacuum_expectation;
  std::vector<OperatorWord> gram_states;
  std::optional<GramResult> gram;
};

/// Gram states: one creator word per line, `#` comments, blank lines skipped.
std::vector<OperatorWord> parse_state_list(std::string_view text);

FockQuery run_fock(const RelationTable& table, const OperatorWord& word,
                   const std::vector<OperatorWord>& gram_states);

std::string to_json(const FockQuery& q);
std::string to_text(const FockQuery& q);

}  // namespace spinstat
